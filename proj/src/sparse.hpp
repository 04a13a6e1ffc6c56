#ifndef HSS_SPARSE_HPP
#define HSS_SPARSE_HPP

#include "common.hpp"
#include "field.hpp"

#include <cstdint>
#include <vector>

namespace hss {

/* Sparse vector: entries sorted by index, no zeros, canonical scalars. */
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

void sv_addmul(const Field& f, SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sv_scale(const Field& f, const Scalar& c, const SparseVec& a);
bool sv_get(const SparseVec& a, std::uint32_t idx, Scalar& out);

/* Set of sparse vectors in echelon form (pairwise distinct top indices),
 * supporting reduction with coefficient tracking.  Entries tagged >= 0
 * report their reduction coefficients; entries tagged < 0 (boundaries,
 * modulus vectors) are eliminated silently. */
class EchelonSet {
public:
    explicit EchelonSet(const Field& f) : field_(&f) {}

    /* Reduce v against the set and insert the residue if nonzero.
     * Returns false when v reduced to zero (already in the span). */
    bool add(SparseVec v, int tag);

    /* Residue of v; coeffs receives (tag, coefficient) for every tagged
     * entry used, accumulated.  Untagged uses are dropped. */
    SparseVec reduce(const SparseVec& v, std::vector<std::pair<int, Scalar>>* coeffs = nullptr) const;

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t size() const { return rows_.size(); }

private:
    struct Row {
        std::uint32_t top;
        int tag;
        SparseVec vec; /* top entry scaled to 1 */
    };
    const Field* field_;
    std::vector<Row> rows_; /* sorted by top descending */

    std::size_t find_top(std::uint32_t top) const;
};

/* Column reduction of one differential respecting a filtration by levels.
 *
 * Source coordinates (columns) and target coordinates (rows) carry integer
 * levels, both weakly increasing in index order.  Columns are processed
 * left to right; each is reduced against earlier columns until its lowest
 * row (largest index) is unique or the column vanishes.  The output is
 *   R_j = delta . V_j   with   V_j = e_j + (combination of earlier columns),
 * so {V_j} is a filtration-adapted basis of the source, the nonzero R_j
 * have distinct lows, and the pairing (level(j), level(low R_j)) reads off
 * the rank of every submatrix "columns with level <= a, rows with level > b".
 */
class FilteredReduction {
public:
    FilteredReduction(const Field& f, std::vector<SparseVec> delta_cols,
                      std::vector<int> source_levels, std::vector<int> target_levels,
                      const Budget* budget = nullptr);

    std::size_t cols() const { return reduced_.size(); }
    const SparseVec& reduced(std::size_t j) const { return reduced_[j]; }
    const SparseVec& transform(std::size_t j) const { return transform_[j]; }
    bool is_cycle(std::size_t j) const { return reduced_[j].empty(); }

    int source_level(std::size_t j) const { return source_levels_[j]; }
    /* Level of the low of R_j; only valid when !is_cycle(j). */
    int pair_level(std::size_t j) const { return pair_level_[j]; }

    /* rank of delta restricted to source level <= a, target level > b */
    std::size_t staircase_rank(int a, int b) const;
    std::size_t rank() const { return rank_; }

    const std::vector<int>& source_levels() const { return source_levels_; }
    const std::vector<int>& target_levels() const { return target_levels_; }

private:
    const Field field_;
    std::vector<SparseVec> reduced_;
    std::vector<SparseVec> transform_;
    std::vector<int> source_levels_;
    std::vector<int> target_levels_;
    std::vector<int> pair_level_;
    std::size_t rank_ = 0;
};

} // namespace hss

#endif
