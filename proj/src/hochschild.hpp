#ifndef HSS_HOCHSCHILD_HPP
#define HSS_HOCHSCHILD_HPP

#include "dga.hpp"
#include "sparse.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hss {

/* Reduced bar word [a_1|...|a_t]: letters are augmentation-ideal basis ids
 * (degree >= 2 under strictness).  internal = sum of letter degrees; the
 * realization shift makes the word contribute internal - t to cohomological
 * degree, so words are enumerated by that shifted degree. */
struct BarWord {
    std::vector<std::uint32_t> letters;
    int internal = 0;

    int length() const { return static_cast<int>(letters.size()); }
    int shifted() const { return internal - length(); }
    std::string label(const DGAlgebra& a) const;
};

/* Words grouped by shifted degree 0..max_shifted, each group sorted by
 * (length, letters) ascending. */
class WordTable {
public:
    WordTable(const DGAlgebra& a, int max_shifted, const Budget& budget);

    int max_shifted() const { return static_cast<int>(by_shifted_.size()) - 1; }
    const std::vector<BarWord>& words(int shifted) const;
    /* Index within words(shifted), or SIZE_MAX when absent. */
    std::size_t find(int shifted, const std::vector<std::uint32_t>& letters) const;
    std::size_t total() const { return total_; }

private:
    std::vector<std::vector<BarWord>> by_shifted_;
    std::size_t total_ = 0;
    static const std::vector<BarWord> none_;
};

/* Exhaustive enumeration by internal degree (the spec-facing query). */
std::map<int, std::vector<BarWord>> enumerate_words(const DGAlgebra& a, int max_internal_degree,
                                                    const Budget& budget = Budget{});

/* Hochschild cochain complex C*(A; M) for a strict algebra A and a
 * bimodule M, over a window of total cohomological degrees.
 *
 * The degree-n piece has basis (w, m) with deg(m) - shifted(w) = n, grouped
 * by coefficient degree descending (so coordinate order refines the
 * coefficient-degree filtration; level(w, m) = -deg(m)).  The differential
 * combines the coefficient differential, the internal letter differentials
 * with realization signs, and the simplicial faces: left action, inner
 * multiplications, right action, with alternating signs. */
class HochschildComplex {
public:
    HochschildComplex(const DGAlgebra& a, const DGBimodule& m, DegreeWindow window,
                      const Budget& budget = Budget{});

    const DGAlgebra& algebra() const { return *a_; }
    const DGBimodule& coefficients() const { return *m_; }
    const Field& field() const { return a_->field(); }
    const DegreeWindow& window() const { return window_; }
    const WordTable& word_table() const { return *words_; }

    /* Pieces exist on window.padded(1). */
    bool has_piece(int n) const { return n >= window_.lo - 1 && n <= window_.hi + 1; }
    std::size_t dim(int n) const;

    struct Coord {
        int shifted;          /* word group */
        std::uint32_t word;   /* index within group */
        std::uint32_t m;      /* coefficient basis id */
    };
    const Coord& coord(int n, std::size_t i) const;
    int level(int n, std::size_t i) const; /* -deg(m), weakly increasing in i */
    std::size_t position(int n, std::uint32_t m_id, int shifted, std::size_t word_idx) const;
    std::string coord_label(int n, std::size_t i) const;

    /* Columns of the differential piece(n) -> piece(n+1); available for
     * n in [window.lo - 1, window.hi]. */
    const std::vector<SparseVec>& delta(int n) const;
    SparseVec apply_delta(int n, const SparseVec& v) const;

    /* Exact check that delta . delta = 0 wherever both are stored. */
    void check_d_squared() const;

    /* Filtration by coefficient degree: number of coordinates of piece(n)
     * with level <= p (a prefix, by construction). */
    std::size_t filtration_dim(int n, int p) const;

    /* Lazily computed column reduction of delta(n). */
    const FilteredReduction& reduction(int n) const;

    /* Dense view for small complexes and cross-checks. */
    CochainComplex as_cochain_complex() const;

private:
    struct Piece {
        std::vector<Coord> coords;
        std::vector<int> levels;
        /* block start positions: per m id, offset or SIZE_MAX */
        std::vector<std::size_t> m_offset;
    };

    void build_piece(int n);
    void build_delta(int n);

    std::shared_ptr<const DGAlgebra> a_;
    std::shared_ptr<const DGBimodule> m_;
    DegreeWindow window_;
    Budget budget_;
    std::shared_ptr<const WordTable> words_;
    std::vector<std::uint32_t> ideal_ids_;
    /* reverse lookups: for letter t, which (b, c) have d(b) ∋ c*t; and which
     * (b, b', c) have b*b' ∋ c*t with b, b' both in the ideal */
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> rev_d_;
    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>> rev_mul_;
    std::map<int, Piece> pieces_;
    std::map<int, std::vector<SparseVec>> deltas_;
    mutable std::map<int, FilteredReduction> reductions_;
};

/* Cup product of homogeneous cochains: on basis cochains
 * (w1, m1) . (w2, m2) = (-1)^{deg2 * shifted(w1)} (w1 w2, m1 m2), with the
 * values multiplied through mul_values.  Both complexes must share the
 * algebra and word table. */
SparseVec cup(const HochschildComplex& src1, int n1, const SparseVec& f,
              const HochschildComplex& src2, int n2, const SparseVec& g,
              const HochschildComplex& target,
              const std::function<SpElt(std::uint32_t, std::uint32_t)>& mul_values);

/* Cup specializations: coefficients A (values multiplied in A) and
 * coefficients k (values multiplied in k). */
SparseVec cup_regular(const HochschildComplex& c, int n1, const SparseVec& f, int n2,
                      const SparseVec& g);
SparseVec cup_trivial(const HochschildComplex& c, int n1, const SparseVec& f, int n2,
                      const SparseVec& g);

/* Graded algebra of cohomology classes with representing cocycles and a
 * product table on the certified window. */
class GradedAlgebraTable {
public:
    enum class Kind { regular, trivial };

    GradedAlgebraTable(std::shared_ptr<const HochschildComplex> complex, Kind kind);

    const HochschildComplex& complex() const { return *complex_; }
    const DegreeWindow& window() const { return complex_->window(); }
    Kind kind() const { return kind_; }

    std::size_t dim(int n) const;
    std::map<int, std::size_t> dims() const;
    /* Representing cocycle of class (n, i), as a sparse vector in piece(n). */
    const SparseVec& representative(int n, std::size_t i) const;
    /* Class coordinates of a cocycle. */
    Vec project(int n, const SparseVec& cocycle) const;
    bool is_cocycle(int n, const SparseVec& v) const;

    /* unit class: degree 0 class of the empty-word cochain valued 1. */
    Vec unit_class() const;

    /* Product of classes (n1, i) and (n2, j); requires n1+n2 certified. */
    Vec product(int n1, std::size_t i, int n2, std::size_t j) const;
    bool product_in_window(int n1, int n2) const
    {
        return window().contains(n1 + n2) && complex_->has_piece(n1 + n2 + 1);
    }

    /* Product of arbitrary class vectors. */
    Vec product_classes(int n1, const Vec& x, int n2, const Vec& y) const;

    /* Checks: associativity + unit on all in-window triples; graded
     * commutativity on all pairs.  Throw on failure. */
    void check_associative_unital() const;
    void check_graded_commutative() const;

    SparseVec class_to_cocycle(int n, const Vec& cls) const;

private:
    struct DegreeData {
        std::vector<std::size_t> rep_columns;
        std::vector<SparseVec> reps;
        EchelonSet projector; /* boundaries untagged, reps tagged */
        DegreeData(const Field& f) : projector(f) {}
    };
    const DegreeData& data(int n) const;

    std::shared_ptr<const HochschildComplex> complex_;
    Kind kind_;
    mutable std::map<int, DegreeData> by_degree_;
};

GradedAlgebraTable hh_algebra(const DGAlgebra& a, DegreeWindow window, const Budget& budget = Budget{});
GradedAlgebraTable ext_algebra(const DGAlgebra& a, DegreeWindow window, const Budget& budget = Budget{});

/* Shearing map: postcompose values with the augmentation.  Acts on class
 * tables computed over a common window. */
struct ShearingResult {
    /* per degree: matrix of the induced map HH^n -> Ext^n (columns = HH
     * classes), image subspace (in Ext class coordinates), kernel subspace
     * (in HH class coordinates) */
    std::map<int, Matrix> map;
    std::map<int, Subspace> image;
    std::map<int, Subspace> kernel;
};

SparseVec shear_cochain(const HochschildComplex& hh_cx, int n, const SparseVec& f,
                        const HochschildComplex& ext_cx);

ShearingResult shearing(const GradedAlgebraTable& hh, const GradedAlgebraTable& ext);

/* Checks shr(xy) = shr(x) shr(y) on all in-window class pairs. */
void check_shearing_ring_map(const GradedAlgebraTable& hh, const GradedAlgebraTable& ext,
                             const ShearingResult& s);
/* Checks that every image class graded-commutes with the full Ext table. */
void check_shearing_centrality(const GradedAlgebraTable& ext, const ShearingResult& s);

/* Smallest N such that every product of N kernel classes vanishes, as far
 * as the window certifies.  The empty kernel reports index 1 (the zero
 * ideal).  When a nonzero product escapes the window before dying,
 * exceeds_window is set and index is the best in-window lower bound. */
struct NilpotencyResult {
    int index = 1;
    bool exceeds_window = false;
    bool certified() const { return !exceeds_window; }
};

NilpotencyResult nilpotency_index(const GradedAlgebraTable& hh, const ShearingResult& s);

} // namespace hss

#endif
