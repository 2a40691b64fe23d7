#include "cfh/lune.hpp"

#include "cfh/errors.hpp"

namespace cfh {

LuneVerdict is_combinatorial_lune(Trace const& t) {
    LuneVerdict v;
    if (!satisfies_arc_condition(t)) {
        v.violations.push_back("arc");
        return v;
    }
    auto const& ge = t.geom();
    bool ok_w = true;
    for (size_t f = 0; f < ge.arr.faces.size(); f++)
        if (ge.w[f] + t.shift < 0) ok_w = false;
    if (!ok_w) v.violations.push_back("I");

    int ex = sgn(cross(arc_out_dir(t, 0), arc_out_dir(t, 1)));
    int ey = sgn(cross(arc_in_dir(t, 0), arc_in_dir(t, 1)));
    if (ex != 1 || ey != -1) v.violations.push_back("II");

    bool ok_s = true;
    for (Pt const& p : {t.lift_x, t.lift_y})
        for (int s : sector_values(t, p))
            if (s != 0 && s != 1) ok_s = false;
    if (!ok_s) v.violations.push_back("III");

    v.yes = v.violations.empty();
    return v;
}

std::vector<Lune> find_lunes(PairCtx const& ctx, int xid, int yid) {
    std::vector<Lune> out;
    if (xid == yid) return out;
    for (auto& t : all_arc_traces(ctx, xid, yid)) {
        if (ctx.pair.surface == SurfaceKind::Sphere) {
            // the two-chain is free to change by a constant; pick the one
            // that gives index one, when it exists
            int mu0 = maslov(t);
            if ((1 - mu0) % 4 != 0) continue;
            t.shift = (1 - mu0) / 4;
        }
        if (!is_combinatorial_lune(t).yes) continue;
        Lune l;
        l.sign = arc_dir(t, 0);
        l.area = trace_area(t);
        l.trace = std::move(t);
        l.primitive = is_primitive(l);
        out.push_back(std::move(l));
    }
    return out;
}

std::map<std::pair<int, int>, std::vector<Lune>> all_lunes(PairCtx const& ctx) {
    std::map<std::pair<int, int>, std::vector<Lune>> out;
    for (int x = 0; x < ctx.num(); x++)
        for (int y = 0; y < ctx.num(); y++) {
            if (x == y) continue;
            auto ls = find_lunes(ctx, x, y);
            if (!ls.empty()) out[{x, y}] = std::move(ls);
        }
    return out;
}

bool is_primitive(Lune const& l) {
    std::set<int> ends{l.trace.xid, l.trace.yid};
    return arc_points(l.trace, 0) == ends && arc_points(l.trace, 1) == ends;
}

PrimitiveReport primitive_existence_check(PairCtx const& ctx) {
    PrimitiveReport r;
    for (auto const& [key, ls] : all_lunes(ctx))
        for (auto const& l : ls) {
            r.total++;
            if (l.primitive) r.primitive_pairs.push_back(key);
        }
    r.holds = r.total == 0 || !r.primitive_pairs.empty();
    if (!r.holds) throw InvariantViolated("lunes exist but none is primitive");
    return r;
}

} // namespace cfh
