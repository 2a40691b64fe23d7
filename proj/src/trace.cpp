#include "cfh/trace.hpp"

#include <algorithm>

#include "cfh/errors.hpp"

namespace cfh {

namespace {

void prune(std::map<ChainKey, int>& cov) {
    for (auto it = cov.begin(); it != cov.end();)
        it = it->second == 0 ? cov.erase(it) : std::next(it);
}

// lattice translate of curve c's stored lift passing through p (p must be a
// lift of crossing id)
IVec translate_through(PairCtx const& ctx, int c, int id, Pt const& p) {
    Pt off = p - ctx.curve(c).point_at(ctx.along_of(c, id));
    if (denominator(off.x) != 1 || denominator(off.y) != 1)
        throw InternalError("crossing lift is not a lattice translate");
    return {(long long)numerator(off.x), (long long)numerator(off.y)};
}

Pt crossing_dir(PairCtx const& ctx, int c, int id) {
    return c == 0 ? ctx.pts[id].dir_alpha : ctx.pts[id].dir_beta;
}

// chain key of the primitive piece ending at crossing index i (in along[c])
ChainKey piece_into(PairCtx const& ctx, int c, int i, IVec const& g) {
    int m = (int)ctx.along[c].size();
    if (i > 0) return {c, i - 1, g};
    return {c, m - 1, g - ctx.curve(c).deck};
}

int cov_of(Trace const& t, ChainKey const& k) {
    auto it = t.cov.find(k);
    return it == t.cov.end() ? 0 : it->second;
}

// append count signed whole loops of curve c to cov, starting at the lift of
// crossing yid given by (iy, g); returns the net endpoint translation
IVec add_loops(PairCtx const& ctx, std::map<ChainKey, int>& cov, int c, int iy,
               IVec g, long long count) {
    int m = (int)ctx.along[c].size();
    IVec deck = ctx.curve(c).deck;
    IVec shift{0, 0};
    for (long long r = 0; r < (count < 0 ? -count : count); r++) {
        if (count > 0) {
            IVec gg = g + shift;
            for (int s = 0; s < m; s++) {
                int j = (iy + s) % m;
                cov[{c, j, gg}] += 1;
                if (j == m - 1) gg = gg + deck;
            }
            shift = shift + deck;
        } else {
            IVec gg = g + shift;
            for (int s = 1; s <= m; s++) {
                int j = (iy - s + m) % m;
                if (j == m - 1) gg = gg - deck;
                cov[{c, j, gg}] -= 1;
            }
            shift = shift - deck;
        }
    }
    return shift;
}

// probe segment from a support vertex: q off the support, open segment to it
// crossing nothing
bool valid_probe(Arrangement const& arr, Pt const& base, Pt const& q) {
    for (auto const& e : arr.edges) {
        Pt a = arr.verts[e.v0], b = arr.verts[e.v1];
        if (on_segment(q, a, b)) return false;
        auto [kind, ip] = seg_intersect(base, q, a, b);
        if (kind == SegContact::ProperCrossing || kind == SegContact::Degenerate) return false;
    }
    return true;
}

int winding_near(Trace const& t, Pt const& base, Pt const& dir) {
    auto const& ge = t.geom();
    Rat eta(1, 4);
    for (int it = 0; it < 200; it++) {
        Pt q = base + eta * dir;
        if (valid_probe(ge.arr, base, q))
            return chain_winding_at(ge.arr, ge.mult, q);
        eta /= 2;
    }
    throw InternalError("no valid probe point along direction");
}

} // namespace

Trace::Geom const& Trace::geom() const {
    if (geom_) return *geom_;
    auto g = std::make_shared<Geom>();
    std::vector<Polyline> arcs;
    std::vector<int> arc_mult;
    for (auto const& [k, v] : cov) {
        if (v == 0) continue;
        arcs.push_back(ctx->interval_piece(k.curve, k.interval, k.g));
        arc_mult.push_back(k.curve == 0 ? v : -v);
    }
    g->arr = build_arrangement(arcs);
    g->mult.resize(g->arr.edges.size());
    for (size_t e = 0; e < g->arr.edges.size(); e++)
        g->mult[e] = arc_mult[g->arr.edges[e].arc];
    g->w = winding_by_propagation(g->arr, g->mult);
    geom_ = std::move(g);
    return *geom_;
}

bool Trace::same_as(Trace const& o) const {
    return xid == o.xid && yid == o.yid && lift_x == o.lift_x && lift_y == o.lift_y &&
           cov == o.cov;
}

Trace constant_trace(PairCtx const& ctx, int xid) {
    Trace t;
    t.ctx = &ctx;
    t.xid = t.yid = xid;
    t.lift_x = t.lift_y = ctx.pts[xid].lift;
    t.composite = true;
    return t;
}

std::optional<Trace> trace_from_arcs(PairCtx const& ctx, int xid, int yid,
                                     ArcSpec arc_alpha, ArcSpec arc_beta) {
    Pt anchor = ctx.pts[xid].lift;
    ArcWalk wa = lift_arc(ctx, 0, xid, yid, arc_alpha, anchor);
    ArcWalk wb = lift_arc(ctx, 1, xid, yid, arc_beta, anchor);
    if (wa.end != wb.end) return std::nullopt;
    Trace t;
    t.ctx = &ctx;
    t.xid = xid;
    t.yid = yid;
    t.lift_x = anchor;
    t.lift_y = wa.end;
    t.arc_alpha = arc_alpha;
    t.arc_beta = arc_beta;
    for (auto const& [j, g] : wa.intervals) t.cov[{0, j, g}] += arc_alpha.forward ? 1 : -1;
    for (auto const& [j, g] : wb.intervals) t.cov[{1, j, g}] += arc_beta.forward ? 1 : -1;
    prune(t.cov);
    return t;
}

std::vector<Trace> all_arc_traces(PairCtx const& ctx, int xid, int yid) {
    std::vector<Trace> out;
    for (bool fa : {true, false})
        for (bool fb : {true, false}) {
            if (xid == yid) continue;
            auto t = trace_from_arcs(ctx, xid, yid, {fa, 0}, {fb, 0});
            if (t) out.push_back(std::move(*t));
        }
    return out;
}

Trace connecting_trace(PairCtx const& ctx, int xid, int yid, long long k, long long l) {
    Trace t;
    t.ctx = &ctx;
    t.xid = xid;
    t.yid = yid;
    t.composite = true;
    t.lift_x = ctx.pts[xid].lift;
    Pt enda, endb;
    if (xid != yid) {
        ArcWalk wa = lift_arc(ctx, 0, xid, yid, {true, 0}, t.lift_x);
        ArcWalk wb = lift_arc(ctx, 1, xid, yid, {true, 0}, t.lift_x);
        for (auto const& [j, g] : wa.intervals) t.cov[{0, j, g}] += 1;
        for (auto const& [j, g] : wb.intervals) t.cov[{1, j, g}] += 1;
        enda = wa.end;
        endb = wb.end;
    } else {
        enda = endb = t.lift_x;
    }
    for (int c = 0; c < 2; c++) {
        Pt& end = c == 0 ? enda : endb;
        long long count = c == 0 ? k : l;
        IVec g = translate_through(ctx, c, yid, end);
        IVec sh = add_loops(ctx, t.cov, c, ctx.idx_on[c][yid], g, count);
        end = end + sh.vec();
    }
    if (enda != endb) throw InternalError("wrap counts do not close the trace");
    t.lift_y = enda;
    prune(t.cov);
    return t;
}

TraceBoundary boundary(Trace const& t) {
    TraceBoundary b;
    b.xid = t.xid;
    b.yid = t.yid;
    for (auto const& [k, v] : t.cov)
        if (v != 0) b.nu[k.curve][k.interval] += v;
    for (auto& m : b.nu)
        for (auto it = m.begin(); it != m.end();)
            it = it->second == 0 ? m.erase(it) : std::next(it);
    return b;
}

bool satisfies_arc_condition(Trace const& t) {
    if (t.xid == t.yid) return false;
    auto b = boundary(t);
    for (int c = 0; c < 2; c++) {
        int m = (int)t.ctx->along[c].size();
        if (b.nu[c].empty()) return false;
        int s = b.nu[c].begin()->second;
        if (s != 1 && s != -1) return false;
        for (auto const& [j, v] : b.nu[c])
            if (v != s) return false;
        int ix = t.ctx->idx_on[c][t.xid], iy = t.ctx->idx_on[c][t.yid];
        int from = s == 1 ? ix : iy;
        int to = s == 1 ? iy : ix;
        int len = (to - from + m) % m;
        if ((int)b.nu[c].size() != len) return false;
        for (int d = 0; d < len; d++)
            if (!b.nu[c].count((from + d) % m)) return false;
    }
    return true;
}

int arc_dir(Trace const& t, int c) {
    auto b = boundary(t);
    if (b.nu[c].empty()) throw ArcConditionRequired("trace has no arc on this curve");
    return b.nu[c].begin()->second > 0 ? 1 : -1;
}

std::set<int> arc_intervals(Trace const& t, int c) {
    auto b = boundary(t);
    std::set<int> out;
    for (auto const& [j, v] : b.nu[c]) out.insert(j);
    return out;
}

std::set<int> arc_points(Trace const& t, int c) {
    std::set<int> out{t.xid, t.yid};
    int m = (int)t.ctx->along[c].size();
    for (int j : arc_intervals(t, c)) {
        out.insert(t.ctx->along[c][j]);
        out.insert(t.ctx->along[c][(j + 1) % m]);
    }
    return out;
}

Pt arc_out_dir(Trace const& t, int c) {
    PairCtx const& ctx = *t.ctx;
    int ix = ctx.idx_on[c][t.xid];
    IVec g = translate_through(ctx, c, t.xid, t.lift_x);
    Pt d = crossing_dir(ctx, c, t.xid);
    if (cov_of(t, {c, ix, g}) > 0) return d;
    if (cov_of(t, piece_into(ctx, c, ix, g)) < 0) return Pt{} - d;
    throw ArcConditionRequired("no single arc leaves the start point");
}

Pt arc_in_dir(Trace const& t, int c) {
    PairCtx const& ctx = *t.ctx;
    int iy = ctx.idx_on[c][t.yid];
    IVec g = translate_through(ctx, c, t.yid, t.lift_y);
    Pt d = crossing_dir(ctx, c, t.yid);
    if (cov_of(t, piece_into(ctx, c, iy, g)) > 0) return d;
    if (cov_of(t, {c, iy, g}) < 0) return Pt{} - d;
    throw ArcConditionRequired("no single arc enters the end point");
}

std::array<int, 4> sector_values(Trace const& t, Pt const& p) {
    PairCtx const& ctx = *t.ctx;
    auto const& ge = t.geom();
    int v = ge.arr.find_vertex(p);
    if (v < 0) throw PointClassificationFailed("sector values need a support vertex");
    int id = -1;
    for (auto const& pt : ctx.pts) {
        Pt off = p - pt.lift;
        if (denominator(off.x) != 1 || denominator(off.y) != 1) continue;
        IVec g{(long long)numerator(off.x), (long long)numerator(off.y)};
        if (ctx.in_lattice(g)) {
            id = pt.id;
            break;
        }
    }
    if (id < 0) throw PointClassificationFailed("vertex is not a crossing lift");
    Pt da = ctx.pts[id].dir_alpha, db = ctx.pts[id].dir_beta;
    std::array<Pt, 4> rays{da, db, Pt{} - da, Pt{} - db};
    std::sort(rays.begin(), rays.end(), dir_less);
    std::array<int, 4> out;
    for (int i = 0; i < 4; i++) {
        Pt probe = rays[i] + rays[(i + 1) % 4];
        out[i] = ge.w[ge.arr.sector_face(v, probe)] + t.shift;
    }
    return out;
}

int m_at(Trace const& t, Pt const& p) {
    auto const& ge = t.geom();
    int v = ge.arr.find_vertex(p);
    if (v >= 0) {
        auto sv = sector_values(t, p);
        return sv[0] + sv[1] + sv[2] + sv[3];
    }
    int e = ge.arr.find_edge_interior(p);
    if (e >= 0)
        return 2 * (ge.w[ge.arr.left_face(e)] + ge.w[ge.arr.right_face(e)] + 2 * t.shift);
    return 4 * (chain_winding_at(ge.arr, ge.mult, p) + t.shift);
}

int maslov(Trace const& t) {
    int s = m_at(t, t.lift_x) + m_at(t, t.lift_y);
    if (s % 2 != 0) throw OddTraceSum("endpoint measures sum to an odd value");
    return s / 2;
}

int maslov_plane_form(Trace const& t) {
    if (!satisfies_arc_condition(t))
        throw ArcConditionRequired("planar formula needs single arcs on both curves");
    Pt aout = arc_out_dir(t, 0), ain = arc_in_dir(t, 0);
    Pt bout = arc_out_dir(t, 1), bin = arc_in_dir(t, 1);
    int ex = sgn(cross(aout, bout));
    int ey = sgn(cross(ain, bin));
    int kx = winding_near(t, t.lift_x, Pt{} - aout) + t.shift;
    int ky = winding_near(t, t.lift_y, ain) + t.shift;
    return 2 * kx + 2 * ky + (ex - ey) / 2;
}

Trace catenate(Trace const& t1, Trace const& t2) {
    if (t1.ctx != t2.ctx) throw EndpointMismatch("traces belong to different pairs");
    if (t1.yid != t2.xid) throw EndpointMismatch("end point of the first is not the start of the second");
    Pt off = t1.lift_y - t2.lift_x;
    if (denominator(off.x) != 1 || denominator(off.y) != 1)
        throw InternalError("crossing lifts differ by a non-lattice vector");
    IVec d{(long long)numerator(off.x), (long long)numerator(off.y)};
    if (!t1.ctx->in_lattice(d))
        throw InternalError("crossing lifts differ by a non-deck vector");
    Trace r;
    r.ctx = t1.ctx;
    r.xid = t1.xid;
    r.yid = t2.yid;
    r.lift_x = t1.lift_x;
    r.lift_y = t2.lift_y + d.vec();
    r.composite = true;
    r.shift = t1.shift + t2.shift;
    r.cov = t1.cov;
    for (auto const& [k, v] : t2.cov) r.cov[{k.curve, k.interval, k.g + d}] += v;
    prune(r.cov);
    return r;
}

Trace reverse_trace(Trace const& t) {
    Trace r;
    r.ctx = t.ctx;
    r.xid = t.yid;
    r.yid = t.xid;
    r.lift_x = t.lift_y;
    r.lift_y = t.lift_x;
    r.composite = t.composite;
    r.shift = -t.shift;
    r.arc_alpha = {!t.arc_alpha.forward, t.arc_alpha.extra_wraps};
    r.arc_beta = {!t.arc_beta.forward, t.arc_beta.extra_wraps};
    for (auto const& [k, v] : t.cov) r.cov[k] = -v;
    return r;
}

Rat trace_area(Trace const& t) {
    auto const& ge = t.geom();
    Rat a = 0;
    for (size_t f = 0; f < ge.arr.faces.size(); f++)
        if (!ge.arr.faces[f].unbounded) a += Rat(ge.w[f]) * ge.arr.faces[f].area;
    return a;
}

int cancellation_defect(Trace const& t, IVec const& g) {
    if (g.zero() || !t.ctx->in_lattice(g))
        throw InputError("translation must be a nonzero deck vector");
    return m_at(t, t.lift_x + g.vec()) + m_at(t, t.lift_y - g.vec());
}

} // namespace cfh
