#ifndef HSS_MATRIX_HPP
#define HSS_MATRIX_HPP

#include "field.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hss {

using Vec = std::vector<Scalar>;

/* Dense row-major matrix over a fixed field.  All entries canonical. */
class Matrix {
public:
    Matrix() : field_(FieldSpec()) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<Vec>& rows, std::size_t cols);

    const FieldSpec& field_spec() const { return field_.spec(); }
    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    bool is_zero() const;

    Matrix mul(const Matrix& rhs) const;
    Vec apply(const Vec& v) const;    /* matrix * column vector */
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    std::string str() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

/* Reduced row echelon form together with the pivot columns (strictly
 * increasing).  Deterministic: first nonzero entry in column order pivots. */
std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/* Subspace of k^ambient_dim represented by its RREF row basis; zero rows are
 * dropped, so equality of subspaces is literal equality of bases. */
class Subspace {
public:
    Subspace(FieldSpec field, std::size_t ambient_dim)
        : basis_(field, 0, ambient_dim), ambient_(ambient_dim) {}
    Subspace(Matrix rref_basis, std::size_t ambient_dim, std::vector<std::size_t> pivots)
        : basis_(std::move(rref_basis)), ambient_(ambient_dim), pivots_(std::move(pivots)) {}

    /* Span of arbitrary generators. */
    static Subspace span(FieldSpec field, const std::vector<Vec>& generators, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /* Residue of v after eliminating pivot coordinates; zero iff contained. */
    Vec reduce(const Vec& v) const;

    bool operator==(const Subspace& o) const;

private:
    Matrix basis_;
    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
};

/* Rows of the returned subspace span { v : m v = 0 }. */
Subspace kernel_basis(const Matrix& m);
/* Column space of m. */
Subspace image_basis(const Matrix& m);

std::optional<Vec> solve(const Matrix& m, const Vec& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/* Coset representatives projecting to a basis of big/small; small must be
 * contained in big. */
std::vector<Vec> quotient_representatives(const Subspace& big, const Subspace& small);

/* Vector helpers over one field. */
Vec vec_zero(std::size_t n);
Vec vec_unit(FieldSpec field, std::size_t n, std::size_t i);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& a);
Vec vec_addmul(const Field& f, Vec a, const Scalar& c, const Vec& b);
bool vec_is_zero(const Vec& a);

} // namespace hss

#endif
