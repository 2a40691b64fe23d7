#include "cfh/isotopy.hpp"

#include <algorithm>
#include <set>

#include "cfh/errors.hpp"
#include "cfh/floer.hpp"
#include "cfh/reduction.hpp"

namespace cfh {

namespace {

Pt right_normal(Pt const& d) { return {d.y, -d.x}; }

// parallel copy of an open PL path, shifted to the right of travel by
// delta times each segment direction's normal, corners mitered
std::vector<Pt> offset_path(std::vector<Pt> const& p, Rat const& delta) {
    int k = (int)p.size() - 1;
    std::vector<Pt> dirs(k), off(k);
    for (int i = 0; i < k; i++) {
        dirs[i] = p[i + 1] - p[i];
        off[i] = delta * right_normal(dirs[i]);
    }
    std::vector<Pt> out;
    auto push = [&](Pt const& q) {
        if (out.empty() || !(out.back() == q)) out.push_back(q);
    };
    push(p[0] + off[0]);
    for (int i = 1; i < k; i++) {
        Rat cr = cross(dirs[i - 1], dirs[i]);
        if (cr == 0) {
            push(p[i] + off[i - 1]);
            push(p[i] + off[i]);
        } else {
            Pt a0 = p[i - 1] + off[i - 1], a1 = p[i] + off[i];
            Rat s = cross(a1 - a0, dirs[i]) / cr;
            push(a0 + s * dirs[i - 1]);
        }
    }
    push(p[k] + off[k - 1]);
    return out;
}

std::set<Pt, PtLess> crossing_positions(std::vector<IntersectionPoint> const& pts) {
    std::set<Pt, PtLess> out;
    for (auto const& p : pts) out.insert(p.pos);
    return out;
}

} // namespace

CurvePair cancel_pair(PairCtx const& ctx, Lune const& lune) {
    if (!is_primitive(lune)) throw NotPrimitive("lune arcs meet crossings besides the endpoints");
    Trace const& t = lune.trace;
    Curve const& bc = ctx.pair.beta;
    int x = t.xid, y = t.yid;
    Rat m((long long)bc.nsegs());
    Rat tx = ctx.pts[x].along_beta, ty = ctx.pts[y].along_beta;
    bool bf = t.arc_beta.forward;
    // beta parameter range covered by the lune arc, in beta's own direction
    Rat start = bf ? tx : ty, stop = bf ? ty : tx;
    Rat s1 = start > stop ? start : start + m;
    auto wa = lift_arc(ctx, 0, x, y, t.arc_alpha, t.lift_x);
    Pt anchor = bf ? ctx.pts[x].lift : t.lift_y;
    Pt shift = bc.point_at(s1) - anchor;

    std::set<Pt, PtLess> want;
    for (auto const& p : ctx.pts)
        if (p.id != x && p.id != y) want.insert(p.pos);

    auto meet = [](Pt const& p1, Pt const& d1, Pt const& p2, Pt const& d2) {
        return p1 + (cross(p2 - p1, d2) / cross(d1, d2)) * d1;
    };
    Rat delta(1, 4);
    for (int tries = 0; tries < 60; tries++, delta /= 2) {
        auto q = offset_path(wa.path.vertices, delta);
        if (!bf) std::reverse(q.begin(), q.end());
        for (auto& p : q) p = p + shift;
        // the kept beta strands turn onto the offset copy where they meet its
        // end lines; transversality at the crossings makes the meets exist
        size_t k = q.size() - 1;
        Pt js = meet(bc.point_at(s1), bc.dir_at(s1), q[0], q[1] - q[0]);
        Pt je = meet(bc.point_at(stop + m), bc.dir_at(stop), q[k], q[k] - q[k - 1]) -
                bc.deck.vec();
        std::vector<Pt> verts;
        verts.push_back(je);
        for (Int i = rat_floor(stop) + 1; Rat(i) < s1; i++) verts.push_back(bc.point_at(Rat(i)));
        verts.push_back(js);
        for (size_t i = 1; i + 1 < q.size(); i++) verts.push_back(q[i]);
        std::vector<Pt> dedup;
        for (auto const& v : verts)
            if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
        if (dedup.size() > 1 && dedup.back() == dedup.front() + bc.deck.vec())
            dedup.pop_back();
        verts = std::move(dedup);
        if (verts.size() < 2) continue;
        CurvePair np;
        np.surface = ctx.pair.surface;
        np.alpha = ctx.pair.alpha;
        np.beta = {verts, bc.deck};
        try {
            if (!validate_pair(np).empty()) continue;
            auto xs = intersections(np);
            if ((int)xs.size() != ctx.num() - 2) continue;
            if (crossing_positions(xs) != want) continue;
            return np;
        } catch (InputError const&) {
            continue;
        }
    }
    throw ClearanceFailure("no clearance for the rerouted arc");
}

CurvePair create_pair(PairCtx const& ctx, Rat const& beta_param, Rat const& alpha_param) {
    Curve const& ac = ctx.pair.alpha;
    Curve const& bc = ctx.pair.beta;
    Rat ma((long long)ac.nsegs()), mb((long long)bc.nsegs());
    Rat tb = beta_param - Rat(rat_floor(beta_param / mb)) * mb;
    Rat ta = alpha_param - Rat(rat_floor(alpha_param / ma)) * ma;
    Pt p = bc.point_at(tb);
    Pt q0 = ac.point_at(ta);
    Pt q = q0;
    Rat best = dot(q0 - p, q0 - p);
    for (auto const& g : ctx.lattice_range(3)) {
        Pt c = q0 + g.vec();
        Rat d2 = dot(c - p, c - p);
        if (d2 < best) {
            best = d2;
            q = c;
        }
    }
    if (p == q) throw PathObstructed("anchor lies on the target");
    Pt d = q - p;

    // the straight finger path must clear both curves away from its endpoints
    Rat tau(1, 1024);
    Pt ps = p + tau * d, qs = q - tau * d;
    for (int c = 0; c < 2; c++) {
        Curve const& cv = ctx.curve(c);
        for (auto const& g : ctx.lattice_range(4))
            for (size_t i = 0; i < cv.nsegs(); i++) {
                auto [sa, sb] = cv.seg(i);
                if (seg_intersect(ps, qs, sa + g.vec(), sb + g.vec()).kind !=
                    SegContact::Disjoint)
                    throw PathObstructed("straight finger path hits a curve");
            }
    }

    Pt na = ac.dir_at(ta);
    Pt db = bc.dir_at(tb);
    auto want = crossing_positions(ctx.pts);
    Rat w(1, 8), h(1, 16), hw(1, 16);
    for (int tries = 0; tries < 60; tries++, w /= 2, h /= 2, hw /= 2) {
        Pt tip = q + h * d;
        Pt c1 = tip + hw * na, c2 = tip - hw * na;
        // first corner sits on the side the incoming beta strand arrives from
        if (sgn(cross(d, na)) != -sgn(cross(d, db))) std::swap(c1, c2);
        Rat a = tb + w, b = tb - w + mb;
        if (!(a < b)) continue;
        std::vector<Pt> verts;
        verts.push_back(bc.point_at(a));
        for (Int i = rat_floor(a) + 1; Rat(i) < b; i++) verts.push_back(bc.point_at(Rat(i)));
        verts.push_back(bc.point_at(b));
        Pt shift = bc.point_at(b) - bc.point_at(tb - w);
        verts.push_back(c1 + shift);
        verts.push_back(c2 + shift);
        CurvePair np;
        np.surface = ctx.pair.surface;
        np.alpha = ctx.pair.alpha;
        np.beta = {verts, bc.deck};
        try {
            if (!validate_pair(np).empty()) continue;
            auto xs = intersections(np);
            if ((int)xs.size() != ctx.num() + 2) continue;
            int kept = 0, fresh = 0;
            long long esum = 0;
            for (auto const& ip : xs) {
                if (want.count(ip.pos)) {
                    kept++;
                } else {
                    fresh++;
                    esum += ip.eps;
                }
            }
            if (kept != ctx.num() || fresh != 2 || esum != 0) continue;
            return np;
        } catch (InputError const&) {
            continue;
        }
    }
    throw PathObstructed("could not fit the finger");
}

MoveReport verify_move(PairCtx const& before, PairCtx const& after, int x, int y) {
    MoveReport r;
    auto flag = [&](std::string const& s) {
        r.holds = false;
        r.violations.push_back(s);
    };
    if (after.num() != before.num() - 2) flag("crossing count did not drop by two");
    std::map<Pt, int, PtLess> apos;
    for (auto const& p : after.pts) apos[p.pos] = p.id;
    std::vector<int> to_after(before.num(), -1);
    std::vector<int> survivors;
    for (auto const& p : before.pts) {
        if (p.id == x || p.id == y) continue;
        auto it = apos.find(p.pos);
        if (it == apos.end()) {
            flag("surviving crossing " + std::to_string(p.id) + " not found after the move");
            return r;
        }
        to_after[p.id] = it->second;
        survivors.push_back(p.id);
    }
    if ((int)apos.size() != (int)survivors.size()) {
        flag("extra crossings after the move");
        return r;
    }

    auto cb = build_complex(before, Coeff::F2);
    auto ca = build_complex(after, Coeff::F2);
    if (cb.d[x][y] % 2 == 0) flag("cancelled pair carries an even lune count");
    for (int xp : survivors)
        for (int yp : survivors) {
            Int want = (cb.d[xp][yp] + cb.d[xp][y] * cb.d[x][yp]) % 2;
            if (ca.d[to_after[xp]][to_after[yp]] % 2 != want)
                flag("deformation formula fails at (" + std::to_string(xp) + "," +
                     std::to_string(yp) + ")");
        }

    try {
        if (homology(cb).dim != homology(ca).dim) flag("homology dimension changed");
    } catch (NotAComplex const&) {
        flag("boundary does not square to zero");
    }

    auto cc = export_connection(cb);
    cc.order.reset();
    try {
        auto red = reduce(cc, y, x);
        std::vector<int> keep;
        for (int i = 0; i < before.num(); i++)
            if (i != x && i != y) keep.push_back(i);
        for (size_t a = 0; a < keep.size(); a++)
            for (size_t b = 0; b < keep.size(); b++)
                if ((red.nu[a][b] % 2 + 2) % 2 !=
                    (ca.d[to_after[keep[a]]][to_after[keep[b]]] % 2 + 2) % 2)
                    flag("reduced differential disagrees with the moved pair");
    } catch (PivotNotUnit const&) {
        flag("reduction pivot is not a unit");
    }
    return r;
}

NoLuneReport nolune_check(PairCtx const& ctx) {
    NoLuneReport r;
    int n = ctx.num();
    auto cx = build_complex(ctx, Coeff::F2);
    for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++) {
            if (x == y || cx.d[x][y] % 2 == 0) continue;
            bool clean = false;
            for (auto const& l : find_lunes(ctx, x, y))
                if (l.primitive) clean = true;
            if (!clean) continue;
            for (int xp = 0; xp < n; xp++)
                for (int yp = 0; yp < n; yp++) {
                    if (xp == x || xp == y || yp == x || yp == y || xp == yp) continue;
                    if (cx.d[xp][y] % 2 == 0 || cx.d[x][yp] % 2 == 0) continue;
                    r.checked++;
                    if (cx.d[xp][yp] % 2 != 0) {
                        r.holds = false;
                        r.violations.push_back("(" + std::to_string(xp) + "," +
                                               std::to_string(yp) + ") connected past a lune");
                    }
                }
        }
    if (!r.holds && ctx.pair.flags.all())
        throw InvariantViolated("a third connection crosses a clean lune");
    return r;
}

} // namespace cfh
