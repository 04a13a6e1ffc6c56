#ifndef HSS_DGA_HPP
#define HSS_DGA_HPP

#include "graded.hpp"

#include <map>
#include <string>
#include <vector>

namespace hss {

/* Sparse combination of basis elements, sorted by id, canonical scalars,
 * no zero terms. */
using SpElt = std::vector<std::pair<std::size_t, Scalar>>;

SpElt sp_add(const Field& f, const SpElt& a, const SpElt& b);
SpElt sp_scale(const Field& f, const Scalar& c, const SpElt& a);
SpElt sp_addmul(const Field& f, SpElt a, const Scalar& c, const SpElt& b);

/* Basis-level presentation of a finite-dimensional dga.  Construction only
 * enforces syntactic consistency; validate() checks the axioms. */
class DGAlgebra {
public:
    struct Term {
        std::string label;
        Scalar coeff;
    };

    DGAlgebra(FieldSpec field, const std::vector<std::pair<std::string, int>>& basis,
              const std::map<std::string, std::vector<Term>>& differential,
              const std::map<std::pair<std::string, std::string>, std::vector<Term>>& products);

    const FieldSpec& field_spec() const { return field_; }
    const Field& field() const { return fieldops_; }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t id) const { return labels_[id]; }
    int degree(std::size_t id) const { return degrees_[id]; }
    std::size_t unit() const { return 0; }
    bool has_label(const std::string& l) const { return index_.count(l) != 0; }
    std::size_t id_of(const std::string& l) const;

    const SpElt& d(std::size_t id) const { return diff_[id]; }
    const SpElt& product(std::size_t i, std::size_t j) const { return prod_[i * size() + j]; }
    SpElt mul(const SpElt& a, const SpElt& b) const;
    SpElt apply_d(const SpElt& a) const;
    Scalar augmentation(std::size_t id) const { return id == 0 ? fieldops_.one() : Scalar(); }

    const std::vector<std::size_t>& ids_of_degree(int n) const;
    const GradedVectorSpace& space() const { return space_; }
    int top_degree() const { return space_.max_degree(); }

    /* Ids of the augmentation ideal basis (degree >= 1), ascending. */
    std::vector<std::size_t> augmentation_ideal_ids() const;

    /* The underlying cochain complex (A, d). */
    CochainComplex cochain_complex() const;

private:
    FieldSpec field_;
    Field fieldops_;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::map<std::string, std::size_t> index_;
    std::vector<SpElt> diff_;
    std::vector<SpElt> prod_;
    GradedVectorSpace space_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    static const std::vector<std::size_t> no_ids_;
};

/* Structured outcome of checking every dga axiom over the whole basis. */
struct ValidationReport {
    bool valid = false;
    bool strict_coconnective = false; /* A^0 = k.1 and no negative degrees */
    bool strict_simply_connected = false; /* additionally A^1 = 0 */
    std::vector<std::string> failures;
    std::map<int, std::size_t> h_dims;
    int top_cohomology_degree = 0; /* top n with H^n(A) != 0 */
    bool bounded = true;           /* always true for finite bases; kept for the report */

    std::string summary() const;
};

ValidationReport validate(const DGAlgebra& a);
void require_valid(const DGAlgebra& a);

/* A (x) A^op with the Koszul sign product. */
DGAlgebra enveloping(const DGAlgebra& a);

/* Differential graded bimodule over a fixed algebra, presented on a named
 * basis with structure constants for both actions. */
class DGBimodule {
public:
    DGBimodule(FieldSpec field, std::vector<std::string> labels, std::vector<int> degrees,
               std::vector<SpElt> diff, std::vector<std::vector<SpElt>> left,
               std::vector<std::vector<SpElt>> right);

    const FieldSpec& field_spec() const { return field_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t id) const { return labels_[id]; }
    int degree(std::size_t id) const { return degrees_[id]; }
    int min_degree() const;
    int max_degree() const;

    const SpElt& d(std::size_t id) const { return diff_[id]; }
    /* left[a][m]: action of algebra basis element a on module element m. */
    const SpElt& left(std::size_t a, std::size_t m) const { return left_[a][m]; }
    const SpElt& right(std::size_t m, std::size_t a) const { return right_[m][a]; }

    /* Checks bimodule axioms over a; throws on the first failure. */
    void check(const DGAlgebra& a) const;

private:
    FieldSpec field_;
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<SpElt> diff_;
    std::vector<std::vector<SpElt>> left_;  /* [algebra id][module id] */
    std::vector<std::vector<SpElt>> right_; /* [module id][algebra id] */
};

/* A as a bimodule over itself. */
DGBimodule regular_bimodule(const DGAlgebra& a);
/* k with both actions through the augmentation. */
DGBimodule trivial_bimodule(const DGAlgebra& a);

/* J(n): the degree >= n truncation of A, a sub-bimodule closed under d. */
struct FiltrationPiece {
    int n = 0;
    DGBimodule module;
    std::vector<std::size_t> algebra_ids; /* inclusion into A, per module id */
};

FiltrationPiece filtration(const DGAlgebra& a, int n);

/* J(n)/J(n+1): the degree-n slice with zero differential; only the unit
 * acts (positive-degree actions land in J(n+1)). */
DGBimodule subquotient(const DGAlgebra& a, int n);

/* ker(augmentation) = J(1). */
FiltrationPiece augmentation_ideal(const DGAlgebra& a);

/* H^n(A) as a one-degree bimodule with trivial actions (for E2 checks). */
DGBimodule cohomology_slice_bimodule(const DGAlgebra& a, int n);

} // namespace hss

#endif
