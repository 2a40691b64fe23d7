#ifndef CFH_LINALG_HPP
#define CFH_LINALG_HPP

#include <vector>

#include "cfh/rat.hpp"

namespace cfh {

using IMat = std::vector<std::vector<Int>>;

int f2_rank(IMat m);
int q_rank(IMat const& m);
// diagonal invariant factors d1 | d2 | ... (nonzero entries only)
std::vector<Int> smith_factors(IMat a);

IMat mat_mul(IMat const& a, IMat const& b);
bool mat_eq(IMat const& a, IMat const& b, bool mod2);
bool mat_zero(IMat const& a, bool mod2);

} // namespace cfh

#endif // CFH_LINALG_HPP
