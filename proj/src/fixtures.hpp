#ifndef HSS_FIXTURES_HPP
#define HSS_FIXTURES_HPP

#include "parse.hpp"

#include <string>
#include <vector>

namespace hss {

/* Bundled example algebras, one per structural flavour, each over F_2 and Q:
 *   e0: A = k
 *   e1: exterior algebra on one degree-3 generator, zero differential
 *   e2: k[x]/x^2 with |x| = 2, zero differential
 *   e3: basis 1, x(2), z(3), x2(4), xz(5) with dz = x2
 */
const std::vector<std::string>& fixture_names();
bool is_fixture_name(const std::string& name);
const std::string& fixture_source(const std::string& name);
DGAlgebra fixture_algebra(const std::string& name);

} // namespace hss

#endif
