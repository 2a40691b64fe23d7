#ifndef CFH_FLOER_HPP
#define CFH_FLOER_HPP

#include "cfh/lune.hpp"

namespace cfh {

enum class Coeff { F2, Z };

struct FloerComplex {
    PairCtx const* ctx = nullptr;
    Coeff coeff = Coeff::F2;
    int n = 0;
    // d[x][y]: coefficient of y in the boundary of x
    std::vector<std::vector<Int>> d;
    std::vector<int> mod2_grade; // 0 for positive crossings, 1 for negative
    std::vector<int> component;  // path-space component id per generator
    std::vector<long long> rel_grade; // per component, normalized to min 0
    bool graded = true;               // false when no consistent grading exists
    Flags flags;
};

FloerComplex build_complex(PairCtx const& ctx, Coeff coeff);

struct SquareVerdict {
    std::vector<std::vector<Int>> m;
    bool zero = true;
};
// throws TheoremViolated on a nonzero square only under the full hypotheses
SquareVerdict d_squared(FloerComplex const& cx);

struct BrokenHeart {
    int x = -1, y = -1, z = -1; // start, midpoint, end
    Lune lune1, lune2;
    char type = '?'; // 'a'..'d'
    Trace catenated;
};
std::vector<BrokenHeart> enumerate_hearts(PairCtx const& ctx, int x, int z);

struct HeartReport {
    bool holds = true;
    int total = 0;
    // per (x,z): heart count and the per-trace-class type tallies
    std::vector<std::string> lines;
};
HeartReport heart_pairing_check(PairCtx const& ctx);

struct HomologyResult {
    int dim = 0;               // F2 dimension, or free rank over Z
    std::vector<Int> torsion;  // invariant factors > 1 (Z only)
    std::array<int, 2> dim_by_grade{0, 0}; // via the crossing-sign grading
};
HomologyResult homology(FloerComplex const& cx); // throws NotAComplex

long long euler_characteristic(FloerComplex const& cx);

// minimal geometric intersection number of the homology classes; torus with
// both classes nonzero only
long long geo_oracle(PairCtx const& ctx);

struct ActionReport {
    bool positive_areas = true;
    bool acyclic = true;
    bool holds = true;
};
// throws InvariantViolated only under the full hypotheses
ActionReport action_order_check(PairCtx const& ctx);

} // namespace cfh

#endif // CFH_FLOER_HPP
