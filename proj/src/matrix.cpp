#include "matrix.hpp"

#include <algorithm>

namespace hss {

Matrix Matrix::identity(FieldSpec field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = m.field_.one();
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vec>& rows, std::size_t cols)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_internal(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const
{
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::mul(const Matrix& rhs) const
{
    check_internal(cols_ == rhs.rows_, "matrix product shape mismatch");
    Matrix out(field_.spec(), rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (!b.is_zero())
                    out.at(i, j) = field_.addmul(out.at(i, j), a, b);
            }
        }
    return out;
}

Vec Matrix::apply(const Vec& v) const
{
    check_internal(v.size() == cols_, "matrix apply shape mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                acc = field_.addmul(acc, at(i, j), v[j]);
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_.spec(), cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && field_.spec() == o.field_.spec() && data_ == o.data_;
}

std::string Matrix::str() const
{
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                s += " ";
            s += at(i, j).str();
        }
        s += "]\n";
    }
    return s;
}

std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m)
{
    Matrix a = m;
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == a.rows())
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(r, j), a.at(pivot, j));
        Scalar invp = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a.at(r, j) = f.mul(invp, a.at(r, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Scalar factor = f.neg(a.at(i, c));
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = f.addmul(a.at(i, j), factor, a.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).second.size(); }

Subspace Subspace::span(FieldSpec field, const std::vector<Vec>& generators, std::size_t ambient_dim)
{
    Matrix gen = Matrix::from_rows(field, generators, ambient_dim);
    auto [red, pivots] = rref(gen);
    Matrix basis(field, pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            basis.at(i, j) = red.at(i, j);
    return Subspace(std::move(basis), ambient_dim, std::move(pivots));
}

Vec Subspace::reduce(const Vec& v) const
{
    check_internal(v.size() == ambient_, "subspace reduce dimension mismatch");
    const Field& f = basis_.field();
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Scalar& c = w[pivots_[i]];
        if (c.is_zero())
            continue;
        Scalar factor = f.neg(c);
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_.at(i, j).is_zero())
                w[j] = f.addmul(w[j], factor, basis_.at(i, j));
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const
{
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel_basis(const Matrix& m)
{
    auto [red, pivots] = rref(m);
    const FieldSpec fs = m.field_spec();
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v = vec_zero(m.cols());
        v[c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(red.at(i, c));
        gens.push_back(std::move(v));
    }
    Subspace ker = Subspace::span(fs, gens, m.cols());
    check_internal(ker.dim() + pivots.size() == m.cols(), "rank-nullity violated");
    return ker;
}

Subspace image_basis(const Matrix& m)
{
    std::vector<Vec> cols;
    Matrix t = m.transpose();
    for (std::size_t i = 0; i < t.rows(); ++i)
        cols.push_back(t.row(i));
    return Subspace::span(m.field_spec(), cols, m.rows());
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    check_internal(b.size() == m.rows(), "solve shape mismatch");
    /* Eliminate the augmented matrix [m | b]. */
    Matrix aug(m.field_spec(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto [red, pivots] = rref(aug);
    const Field& f = m.field();
    Vec x = vec_zero(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols())
            return std::nullopt; /* inconsistent */
        x[pivots[i]] = red.at(i, m.cols());
    }
    return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error("subspace sum: ambient dimension mismatch");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        gens.push_back(a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        gens.push_back(b.basis().row(i));
    return Subspace::span(a.basis().field_spec(), gens, a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw Error("subspace intersect: ambient dimension mismatch");
    /* Kernel of [A^T | B^T] stacked: coefficients (x, y) with x A = y B. */
    const FieldSpec fs = a.basis().field_spec();
    const Field f{fs};
    std::size_t n = a.ambient_dim(), da = a.dim(), db = b.dim();
    Matrix sys(fs, n, da + db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t i = 0; i < n; ++i)
            sys.at(i, j) = a.basis().at(j, i);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < n; ++i)
            sys.at(i, da + j) = f.neg(b.basis().at(j, i));
    Subspace ker = kernel_basis(sys);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vec coeff = ker.basis().row(r);
        Vec v = vec_zero(n);
        for (std::size_t j = 0; j < da; ++j)
            if (!coeff[j].is_zero())
                v = vec_addmul(f, std::move(v), coeff[j], a.basis().row(j));
        gens.push_back(std::move(v));
    }
    Subspace result = Subspace::span(fs, gens, n);
    check_internal(subspace_sum(a, b).dim() + result.dim() == a.dim() + b.dim(),
                   "dim(sum) + dim(intersect) != dim(a) + dim(b)");
    return result;
}

std::vector<Vec> quotient_representatives(const Subspace& big, const Subspace& small)
{
    if (big.ambient_dim() != small.ambient_dim())
        throw Error("quotient: ambient dimension mismatch");
    if (!big.contains(small))
        throw Error("quotient: small is not contained in big");
    std::vector<Vec> reps;
    /* Sweep big's basis in order; keep rows independent modulo small. */
    Subspace acc = small;
    for (std::size_t i = 0; i < big.dim(); ++i) {
        Vec v = big.basis().row(i);
        if (!acc.contains(v)) {
            reps.push_back(v);
            std::vector<Vec> gens;
            for (std::size_t r = 0; r < acc.dim(); ++r)
                gens.push_back(acc.basis().row(r));
            gens.push_back(v);
            acc = Subspace::span(big.basis().field_spec(), gens, big.ambient_dim());
        }
    }
    check_internal(reps.size() == big.dim() - small.dim(), "quotient dimension mismatch");
    return reps;
}

Vec vec_zero(std::size_t n) { return Vec(n); }

Vec vec_unit(FieldSpec field, std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = Field(field).one();
    return v;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b)
{
    check_internal(a.size() == b.size(), "vector add size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = f.add(a[i], b[i]);
    return out;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& a)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = f.mul(c, a[i]);
    return out;
}

Vec vec_addmul(const Field& f, Vec a, const Scalar& c, const Vec& b)
{
    check_internal(a.size() == b.size(), "vector addmul size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] = f.addmul(a[i], c, b[i]);
    return a;
}

bool vec_is_zero(const Vec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace hss
