#ifndef CFH_LUNE_HPP
#define CFH_LUNE_HPP

#include <map>
#include <string>

#include "cfh/trace.hpp"

namespace cfh {

struct Lune {
    Trace trace;
    int sign = 1; // +1 iff the alpha arc runs with alpha's orientation
    bool primitive = false;
    Rat area;
};

struct LuneVerdict {
    bool yes = false;
    std::vector<std::string> violations; // among "arc", "I", "II", "III"
};

// conditions: arc condition, (I) nonnegative winding, (II) endpoint arc
// indices +1 at x and -1 at y, (III) endpoint sector values in {0,1}
LuneVerdict is_combinatorial_lune(Trace const& t);

std::vector<Lune> find_lunes(PairCtx const& ctx, int xid, int yid);
std::map<std::pair<int, int>, std::vector<Lune>> all_lunes(PairCtx const& ctx);

// no crossing besides the endpoints lies on either arc
bool is_primitive(Lune const& l);

struct PrimitiveReport {
    bool holds = true;
    int total = 0;
    std::vector<std::pair<int, int>> primitive_pairs;
};
// whenever lunes exist at all, at least one of them is primitive
PrimitiveReport primitive_existence_check(PairCtx const& ctx);

} // namespace cfh

#endif // CFH_LUNE_HPP
