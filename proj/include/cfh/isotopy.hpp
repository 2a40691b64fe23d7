#ifndef CFH_ISOTOPY_HPP
#define CFH_ISOTOPY_HPP

#include <string>
#include <vector>

#include "cfh/lune.hpp"

namespace cfh {

// reroute beta's lune arc to a parallel offset copy of the alpha arc on the
// far side of alpha; the lune's two endpoints disappear
CurvePair cancel_pair(PairCtx const& ctx, Lune const& lune);

// grow a 3-segment finger on beta that crosses alpha twice with opposite
// signs; the finger follows the straight path from beta(beta_param) to the
// nearest translate of alpha(alpha_param)
CurvePair create_pair(PairCtx const& ctx, Rat const& beta_param, Rat const& alpha_param);

struct MoveReport {
    bool holds = true;
    std::vector<std::string> violations;
};
// checks the deformation formula n'(x',y') = n(x',y') + n(x',y) n(x,y') mod 2
// for a cancellation of the crossings x,y, homology invariance, and agreement
// with the algebraic reduction at pivot (y,x)
MoveReport verify_move(PairCtx const& before, PairCtx const& after, int x, int y);

struct NoLuneReport {
    bool holds = true;
    int checked = 0;
    std::vector<std::string> violations;
};
// a lune from x to y whose arcs meet the curves only at the endpoints blocks
// every third connection: n(x',y) = n(x,y') = 1 forces n(x',y') = 0 mod 2
NoLuneReport nolune_check(PairCtx const& ctx);

} // namespace cfh

#endif // CFH_ISOTOPY_HPP
