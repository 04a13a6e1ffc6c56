#ifndef HSS_FIELD_HPP
#define HSS_FIELD_HPP

#include "common.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace hss {

/* Ground field: F_p for a prime p, or Q when characteristic == 0. */
struct FieldSpec {
    std::int64_t characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(std::int64_t p);

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

/* Exact field element.  For F_p the value lives in num (0 <= num < p,
 * den == 1, big unused).  For Q it is num/den in lowest terms with den > 0;
 * values that do not fit in int64 overflow into an immutable shared mpq.
 * Canonical form is maintained by every operation, so operator== is
 * literal comparison. */
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(std::int64_t n) : num_(n) {}
    Scalar(std::int64_t n, std::int64_t d);
    explicit Scalar(const mpq_class& q);

    bool is_zero() const { return big_ ? *big_ == 0 : num_ == 0; }
    bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
    bool is_big() const { return big_ != nullptr; }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    mpq_class to_mpq() const { return big_ ? *big_ : mpq_class(make_mpz(num_), make_mpz(den_)); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    static mpz_class make_mpz(std::int64_t v);
    static Scalar from_mpq(const mpq_class& q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;

    friend class Field;
};

/* Arithmetic dispatcher for one FieldSpec.  All results are canonical. */
class Field {
public:
    explicit Field(FieldSpec spec) : spec_(spec) {}

    const FieldSpec& spec() const { return spec_; }
    std::int64_t characteristic() const { return spec_.characteristic; }

    Scalar zero() const { return Scalar(); }
    Scalar one() const { return Scalar(1); }

    /* Reduce an arbitrary integer (resp. fraction) into the field. */
    Scalar make(std::int64_t n) const;
    Scalar make(std::int64_t n, std::int64_t d) const;
    Scalar make(const mpq_class& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    /* a + c*b, the inner-loop workhorse. */
    Scalar addmul(const Scalar& a, const Scalar& c, const Scalar& b) const;

    Scalar parse(const std::string& text) const;

private:
    FieldSpec spec_;
};

/* Koszul rule: the sign of moving a symbol of degree a past one of degree b. */
inline int koszul_sign(long a, long b) { return ((a & 1L) && (b & 1L)) ? -1 : 1; }
inline int pow_sign(long k) { return (k & 1L) ? -1 : 1; }

} // namespace hss

#endif
