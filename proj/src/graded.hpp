#ifndef HSS_GRADED_HPP
#define HSS_GRADED_HPP

#include "matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hss {

/* Finite-dimensional Z-graded vector space with named basis.  Labels are
 * unique within a degree and kept in the order they were added; builders
 * are expected to add them in a deterministic (lexicographic) order. */
class GradedVectorSpace {
public:
    void add(int degree, const std::string& label);
    bool empty() const { return pieces_.empty(); }

    std::size_t dim(int degree) const;
    std::size_t total_dim() const;
    const std::vector<std::string>& labels(int degree) const;
    const std::map<int, std::vector<std::string>>& pieces() const { return pieces_; }

    int min_degree() const;
    int max_degree() const;

    /* Index of a label within its degree. */
    std::size_t index_of(int degree, const std::string& label) const;
    bool has(int degree, const std::string& label) const;

private:
    std::map<int, std::vector<std::string>> pieces_;
    static const std::vector<std::string> empty_;
};

/* Degree-homogeneous linear map between graded spaces, one matrix per
 * degree; block(n) maps source piece(n) into target piece(n + shift). */
struct GradedLinearMap {
    int shift = 0;
    std::map<int, Matrix> blocks;

    const Matrix* block(int degree) const
    {
        auto it = blocks.find(degree);
        return it == blocks.end() ? nullptr : &it->second;
    }
};

/* Cochain complex: d^n : piece(n) -> piece(n+1), d of degree +1.
 * Homological indexing is the negation (X_n = X^{-n}); storage is always
 * cohomological.  A complex may certify only part of its degree range
 * (window-truncated constructions); nullopt means every degree is exact. */
class CochainComplex {
public:
    CochainComplex() = default;
    CochainComplex(FieldSpec field, GradedVectorSpace space, std::map<int, Matrix> differential,
                   std::optional<DegreeWindow> certified = std::nullopt);

    const FieldSpec& field_spec() const { return field_; }
    const GradedVectorSpace& space() const { return space_; }
    std::size_t dim(int degree) const { return space_.dim(degree); }

    /* d^degree, materialized as dim(degree+1) x dim(degree). */
    Matrix differential(int degree) const;
    bool has_differential(int degree) const { return differential_.count(degree) != 0; }

    bool degree_certified(int degree) const
    {
        return !certified_ || certified_->contains(degree);
    }
    std::optional<DegreeWindow> certified_window() const { return certified_; }

private:
    FieldSpec field_;
    GradedVectorSpace space_;
    std::map<int, Matrix> differential_;
    std::optional<DegreeWindow> certified_;
};

/* Verifies d . d = 0 in every degree; throws naming the first offending
 * degree and basis element otherwise. */
void check_complex(const CochainComplex& c);

/* One cohomology group with chosen cocycle representatives. */
class CohomologyPiece {
public:
    CohomologyPiece(FieldSpec field, int degree, std::vector<Vec> representatives, Subspace cocycles,
                    Subspace boundaries);

    int degree() const { return degree_; }
    std::size_t dim() const { return representatives_.size(); }
    const std::vector<Vec>& representatives() const { return representatives_; }
    const Subspace& cocycles() const { return cocycles_; }
    const Subspace& boundaries() const { return boundaries_; }

    /* Class coordinates of a cocycle in the representative basis. */
    Vec project(const Vec& cocycle) const;

private:
    FieldSpec field_;
    int degree_;
    std::vector<Vec> representatives_;
    Subspace cocycles_;
    Subspace boundaries_;
};

CohomologyPiece cohomology(const CochainComplex& c, int degree);

/* All certified degrees with nonzero chains. */
std::map<int, std::size_t> cohomology_dims(const CochainComplex& c);

/* Realization of finitely many simplicial rows: row p contributes with a
 * p-fold shift, the total differential is (-1)^p d_row + sum_i (-1)^i face_i.
 * faces[p] lists the p+1 face maps row p -> row p-1 (degree-0 chain maps);
 * an empty matrix list entry means the zero map. */
CochainComplex total_complex(const std::vector<CochainComplex>& rows,
                             const std::vector<std::vector<GradedLinearMap>>& faces);

} // namespace hss

#endif
