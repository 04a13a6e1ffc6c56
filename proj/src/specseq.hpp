#ifndef HSS_SPECSEQ_HPP
#define HSS_SPECSEQ_HPP

#include "hochschild.hpp"

#include <map>
#include <memory>
#include <vector>

namespace hss {

/* Spectral sequence of the Hochschild complex C*(A;A) filtered by
 * coefficient degree: F_p = C*(A; J(-p)) for p <= 0.
 *
 * Cells are keyed by (p, n) with n the total cohomological degree; the
 * display bigrading is (p, q) with q = -n - p.  Differentials go
 * d^r : (p, n) -> (p - r, n + 1), i.e. (p, q) -> (p - r, q + r - 1).
 * Pages are subquotients of the same coordinate space; all data is read
 * off one filtered column reduction per total degree. */
class SpectralSequence {
public:
    explicit SpectralSequence(std::shared_ptr<const HochschildComplex> complex);

    const HochschildComplex& complex() const { return *cx_; }
    const DegreeWindow& window() const { return cx_->window(); }
    const Field& field() const { return cx_->field(); }

    /* Most negative filtration level (= -top degree of A); cells vanish
     * for p below it.  Pages stabilize at stable_page(): E^stable = E^inf. */
    int min_level() const { return min_level_; }
    int stable_page() const { return -min_level_ + 1; }

    struct Cell {
        std::vector<SparseVec> reps; /* honest Z^r_p representatives */
        EchelonSet rows;             /* boundaries tag -1, reps tag k */
        std::size_t dim() const { return reps.size(); }
        Cell(const Field& f) : rows(f) {}
    };

    const Cell& cell(int r, int p, int n) const;
    std::size_t cell_dim(int r, int p, int n) const { return cell(r, p, n).dim(); }
    /* Closed-form dimension from the reduction pairing, cross-checked
     * against the constructive basis on every access. */
    std::size_t cell_dim_by_ranks(int r, int p, int n) const;

    /* Class coordinates of z in cell (r, p, n); z must lie in Z^r_p. */
    Vec project(int r, int p, int n, const SparseVec& z) const;

    /* d^r matrix from cell (r,p,n) to cell (r,p-r,n+1); n+1 must be in
     * the window. */
    Matrix differential(int r, int p, int n) const;

    /* Page product: classes x at (p1,n1) and y at (p2,n2) multiply into
     * (p1+p2, n1+n2) through the cup product of representatives. */
    Vec product(int r, int p1, int n1, const Vec& x, int p2, int n2, const Vec& y) const;

    /* Lineage: coordinates of cell (r+1,p,n) basis classes in cell (r,p,n). */
    Matrix lineage(int r, int p, int n) const;

    /* d^r . d^r = 0 on every certified cell of page r. */
    void check_d_squared(int r) const;
    /* Leibniz for d^r on all certified basis pairs of page r. */
    void check_leibniz(int r) const;
    /* Sum over cells of a total degree never grows page over page. */
    void check_pages_shrink() const;
    /* First page from which every later differential vanishes (within the
     * certified window). */
    int collapse_page() const;

    /* Permanent-cycle subspace of E^2_{0,*} in total degree n, as a
     * subspace in cell(2,0,n) coordinates: the image of honest cocycles.
     * Cross-checked against page-by-page kernel tracking. */
    Subspace survivors_column0(int n) const;

    /* dims of E^inf cells with total degree n. */
    std::map<int, std::size_t> einf_dims(int n) const;

    /* Degrees n for which cells are certified. */
    bool cell_degree_ok(int n) const { return window().contains(n); }

private:
    SparseVec truncate(int n, int p, const SparseVec& v) const;
    bool truncated_zero(int n, int p, const SparseVec& v) const;

    std::shared_ptr<const HochschildComplex> cx_;
    int min_level_ = 0;
    mutable std::map<std::tuple<int, int, int>, Cell> cells_;
};

/* The tensor-model identification of the E2 page: classes phi(h (x) e)
 * for h in H^{-p}(A) and e in Ext^{-q}(k,k), realized as honest cochains
 * in C*(A;A) and projected into page-2 cells. */
class TensorE2 {
public:
    TensorE2(const SpectralSequence& ss, const GradedAlgebraTable& ext);

    const GradedAlgebraTable& ext() const { return *ext_; }
    std::size_t h_dim(int degree) const;
    /* product of H(A) classes, in class coordinates */
    Vec h_product(int d1, const Vec& x, int d2, const Vec& y) const;

    /* the cochain phi(h_i (x) e_j) for h_i in H^{-p}, e_j in Ext^{n+p} */
    SparseVec phi_vector(int p, int n, std::size_t hi, std::size_t ej) const;
    /* cell(2,p,n) coordinates of all tensor basis classes, rows indexed by
     * (hi, ej) pairs in row-major order */
    Matrix phi_matrix(int p, int n) const;

    /* dim E2 = dim H^{-p} * dim Ext^{-q}, and phi is an isomorphism. */
    void check_dimensions() const;
    /* page-2 product = tensor product with the Koszul sign, through phi */
    void check_products() const;

private:
    const SpectralSequence* ss_;
    const GradedAlgebraTable* ext_;
    std::map<int, CohomologyPiece> h_pieces_;
    std::map<int, std::vector<std::size_t>> h_degree_ids_;
};

/* E1 cells against directly computed Hochschild cohomology with
 * subquotient coefficients; returns per-cell (p, n) -> dim, throwing on
 * any disagreement. */
std::map<std::pair<int, int>, std::size_t> e1_identification(const SpectralSequence& ss);

/* E2 cells against coefficients H^{-p}(A); throws on disagreement. */
std::map<std::pair<int, int>, std::size_t> e2_differential_check(const SpectralSequence& ss);

/* Strong-convergence bookkeeping for one total degree: E^inf column sums
 * against dim HH^n, and the graded pieces of the filtration of HH^n by
 * images of Ext(A, J(m)). */
struct AbutmentReport {
    std::map<int, std::size_t> einf;     /* p -> dim E^inf_{p, n} */
    std::map<int, std::size_t> graded;   /* p -> dim gr_p HH^n */
    std::size_t hh_dim = 0;
    bool ok = false;
};

AbutmentReport abutment_check(const SpectralSequence& ss, const GradedAlgebraTable& hh, int n);

/* Column-0 permanent cycles against the shearing image, as subspaces of
 * E^2_{0,*} under the tensor identification.  Exact subspace equality. */
struct PermanentCycleReport {
    int degree;
    std::size_t survivor_dim;
    std::size_t image_dim;
    bool equal;
};

std::vector<PermanentCycleReport> permanent_cycles_vs_shearing(const SpectralSequence& ss,
                                                               const TensorE2& tensor,
                                                               const ShearingResult& shr);

/* Quillen-style permanent-cycle verification over F_p: for a central class
 * x of the Ext table (given by degree and index), x^{p^{r-1}} is a
 * d^r-cycle on every computed page r while the power stays in the window. */
struct FrobeniusReport {
    int class_degree = 0;
    std::size_t class_index = 0;
    std::vector<int> pages_checked;
    bool all_cycles = true;
    bool window_limited = false;
};

FrobeniusReport frobenius_permanent_cycles(const SpectralSequence& ss, const TensorE2& tensor,
                                           int class_degree, std::size_t class_index);

/* Pick an even central nonzero Ext class (any degree when p = 2);
 * returns (degree, index) or throws when none exists in the window. */
std::pair<int, std::size_t> detect_central_class(const GradedAlgebraTable& ext);

} // namespace hss

#endif
