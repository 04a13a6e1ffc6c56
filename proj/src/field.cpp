#include "field.hpp"

#include <numeric>

namespace hss {

namespace {

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p)
{
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

/* Inverse mod p via extended Euclid. */
std::int64_t mod_inv(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw Error("scalar not invertible mod p");
    return mod_reduce(t, p);
}

bool add_overflow(std::int64_t a, std::int64_t b, std::int64_t* out)
{
    return __builtin_add_overflow(a, b, out);
}
bool mul_overflow(std::int64_t a, std::int64_t b, std::int64_t* out)
{
    return __builtin_mul_overflow(a, b, out);
}

} // namespace

FieldSpec::FieldSpec(std::int64_t p) : characteristic(p)
{
    if (p < 0)
        throw ValidationError("characteristic must be 0 or prime, got " + std::to_string(p));
    if (p != 0 && !is_prime(p))
        throw ValidationError("characteristic must be 0 or prime, got " + std::to_string(p));
    if (p > (std::int64_t(1) << 31))
        throw ValidationError("characteristic too large: " + std::to_string(p));
}

std::string FieldSpec::str() const
{
    return is_rational() ? "Q" : "F_" + std::to_string(characteristic);
}

mpz_class Scalar::make_mpz(std::int64_t v)
{
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

Scalar Scalar::from_mpq(const mpq_class& q)
{
    Scalar s;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
    } else {
        s.big_ = std::make_shared<const mpq_class>(q);
    }
    return s;
}

Scalar::Scalar(std::int64_t n, std::int64_t d)
{
    if (d == 0)
        throw Error("zero denominator");
    mpq_class q(make_mpz(n), make_mpz(d));
    q.canonicalize();
    *this = from_mpq(q);
}

Scalar::Scalar(const mpq_class& q)
{
    mpq_class c(q);
    c.canonicalize();
    *this = from_mpq(c);
}

bool Scalar::operator==(const Scalar& o) const
{
    if (big_ || o.big_)
        return to_mpq() == o.to_mpq();
    return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const
{
    if (big_) {
        mpq_class q = *big_;
        return q.get_str();
    }
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Field::make(std::int64_t n) const
{
    if (spec_.is_rational())
        return Scalar(n);
    return Scalar(mod_reduce(n, spec_.characteristic));
}

Scalar Field::make(std::int64_t n, std::int64_t d) const
{
    if (spec_.is_rational())
        return Scalar(n, d);
    if (d == 0)
        throw Error("zero denominator");
    std::int64_t p = spec_.characteristic;
    std::int64_t dm = mod_reduce(d, p);
    if (dm == 0)
        throw Error("denominator divisible by characteristic");
    return mul(Scalar(mod_reduce(n, p)), Scalar(mod_inv(dm, p)));
}

Scalar Field::make(const mpq_class& q) const
{
    if (spec_.is_rational())
        return Scalar(q);
    std::int64_t p = spec_.characteristic;
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    std::int64_t n = mod_reduce(num.get_si(), p);
    std::int64_t d = mod_reduce(den.get_si(), p);
    if (d == 0)
        throw Error("denominator divisible by characteristic");
    return mul(Scalar(n), Scalar(mod_inv(d, p)));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (!spec_.is_rational()) {
        std::int64_t s = a.num_ + b.num_; /* both < 2^31, no overflow */
        std::int64_t p = spec_.characteristic;
        return Scalar(s >= p ? s - p : s);
    }
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (!a.big_ && !b.big_) {
        /* a/b + c/d = (ad + cb) / bd */
        std::int64_t x, y, s, d;
        if (!mul_overflow(a.num_, b.den_, &x) && !mul_overflow(b.num_, a.den_, &y) &&
            !add_overflow(x, y, &s) && !mul_overflow(a.den_, b.den_, &d)) {
            std::int64_t g = std::gcd(s < 0 ? -s : s, d);
            if (g > 1) {
                s /= g;
                d /= g;
            }
            Scalar r;
            r.num_ = s;
            r.den_ = d;
            return r;
        }
    }
    return Scalar(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar Field::neg(const Scalar& a) const
{
    if (!spec_.is_rational())
        return a.num_ == 0 ? Scalar() : Scalar(spec_.characteristic - a.num_);
    if (a.big_)
        return Scalar(mpq_class(-*a.big_));
    Scalar r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (!spec_.is_rational()) {
        /* p < 2^31 so the product fits in int64 */
        return Scalar((a.num_ * b.num_) % spec_.characteristic);
    }
    if (a.is_zero() || b.is_zero())
        return Scalar();
    if (!a.big_ && !b.big_) {
        /* cross-reduce first to keep factors small */
        std::int64_t an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        std::int64_t g1 = std::gcd(an < 0 ? -an : an, bd);
        std::int64_t g2 = std::gcd(bn < 0 ? -bn : bn, ad);
        an /= g1;
        bd /= g1;
        bn /= g2;
        ad /= g2;
        std::int64_t n, d;
        if (!mul_overflow(an, bn, &n) && !mul_overflow(ad, bd, &d)) {
            Scalar r;
            r.num_ = n;
            r.den_ = d;
            return r;
        }
    }
    return Scalar(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar Field::inv(const Scalar& a) const
{
    if (a.is_zero())
        throw Error("division by zero");
    if (!spec_.is_rational())
        return Scalar(mod_inv(a.num_, spec_.characteristic));
    if (a.big_)
        return Scalar(mpq_class(1 / *a.big_));
    Scalar r;
    if (a.num_ > 0) {
        r.num_ = a.den_;
        r.den_ = a.num_;
    } else {
        r.num_ = -a.den_;
        r.den_ = -a.num_;
    }
    return r;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::addmul(const Scalar& a, const Scalar& c, const Scalar& b) const
{
    if (!spec_.is_rational()) {
        std::int64_t p = spec_.characteristic;
        return Scalar((a.num_ + c.num_ * b.num_) % p);
    }
    return add(a, mul(c, b));
}

Scalar Field::parse(const std::string& text) const
{
    if (text.empty())
        throw Error("empty scalar");
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> mpz_class {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw Error("malformed scalar '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw Error("malformed scalar '" + s + "'");
        return mpz_class(s);
    };
    if (slash == std::string::npos)
        return make(mpq_class(parse_int(text)));
    if (spec_.characteristic != 0)
        throw Error("fractional scalar '" + text + "' not allowed over " + spec_.str());
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw Error("zero denominator in '" + text + "'");
    return make(mpq_class(num, den));
}

} // namespace hss
