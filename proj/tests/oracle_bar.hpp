#ifndef HSS_TESTS_ORACLE_BAR_HPP
#define HSS_TESTS_ORACLE_BAR_HPP

#include "dga.hpp"

#include <map>

namespace hss_oracle {

/* Independent cross-check of the Hochschild cohomology dimensions via the
 * UNNORMALIZED bar complex: cochains on words over the full basis of A,
 * unit letters included.  Degenerate words contribute an acyclic piece
 * (the classical normalization theorem), so truncating at a word length
 * beyond the window leaves the stated degrees intact.
 *
 * This code is deliberately separate from the library's reduced-bar
 * implementation: its own enumeration, its own dense differential, its own
 * rank computation through the dense matrix kit.
 *
 * trivial_coefficients = false computes HH*(A) dims, true computes
 * Ext_A(k,k) dims.  Degrees outside [lo, hi] are not returned. */
std::map<int, std::size_t> unnormalized_cohomology_dims(const hss::DGAlgebra& a,
                                                        bool trivial_coefficients, int lo, int hi);

} // namespace hss_oracle

#endif
