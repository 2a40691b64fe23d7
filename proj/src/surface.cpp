#include "cfh/surface.hpp"

#include <algorithm>
#include <numeric>

#include "cfh/errors.hpp"

namespace cfh {

std::string surface_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Plane: return "plane";
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::Annulus: return "annulus";
        case SurfaceKind::Torus: return "torus";
    }
    return "?";
}

std::optional<SurfaceKind> surface_from_name(std::string const& s) {
    if (s == "plane") return SurfaceKind::Plane;
    if (s == "sphere") return SurfaceKind::Sphere;
    if (s == "annulus") return SurfaceKind::Annulus;
    if (s == "torus") return SurfaceKind::Torus;
    return std::nullopt;
}

std::pair<Pt, Pt> Curve::seg(size_t i) const {
    Pt a = vertices[i];
    Pt b = (i + 1 < vertices.size()) ? vertices[i + 1] : vertices[0] + deck.vec();
    return {a, b};
}

Pt Curve::point_at(Rat const& t) const {
    Rat n = Rat((long long)nsegs());
    Int k = rat_floor(t / n);
    Rat tm = t - Rat(k) * n;
    Int i = rat_floor(tm);
    Rat frac = tm - Rat(i);
    size_t idx = (size_t)(long long)i;
    if (idx == nsegs()) { idx = 0; frac = 0; } // guard against t == n edge
    auto [a, b] = seg(idx);
    Pt base = a + frac * (b - a);
    Rat ku(k);
    return base + Pt{ku * Rat(deck.u), ku * Rat(deck.v)};
}

Pt Curve::dir_at(Rat const& t) const {
    Rat n = Rat((long long)nsegs());
    Int k = rat_floor(t / n);
    Rat tm = t - Rat(k) * n;
    size_t idx = (size_t)(long long)rat_floor(tm);
    auto [a, b] = seg(idx % nsegs());
    return b - a;
}

namespace {

struct BBox {
    Rat minx, maxx, miny, maxy;
};

BBox curve_bbox(Curve const& c) {
    BBox b{c.vertices[0].x, c.vertices[0].x, c.vertices[0].y, c.vertices[0].y};
    auto grow = [&](Pt const& p) {
        b.minx = std::min(b.minx, p.x);
        b.maxx = std::max(b.maxx, p.x);
        b.miny = std::min(b.miny, p.y);
        b.maxy = std::max(b.maxy, p.y);
    };
    for (auto const& v : c.vertices) grow(v);
    grow(c.vertices[0] + c.deck.vec());
    return b;
}

bool lattice_ok(SurfaceKind s, IVec const& g) {
    switch (s) {
        case SurfaceKind::Plane:
        case SurfaceKind::Sphere: return g.zero();
        case SurfaceKind::Annulus: return g.v == 0;
        case SurfaceKind::Torus: return true;
    }
    return false;
}

// all lattice translates g such that bbox(a)+g meets bbox(b) dilated by one
std::vector<IVec> overlap_translates(SurfaceKind s, BBox const& a, BBox const& b) {
    if (s == SurfaceKind::Plane || s == SurfaceKind::Sphere) return {{0, 0}};
    long long ulo = (long long)rat_floor(b.minx - a.maxx) - 1;
    long long uhi = (long long)rat_floor(b.maxx - a.minx) + 1;
    std::vector<IVec> out;
    if (s == SurfaceKind::Annulus) {
        for (long long u = ulo; u <= uhi; u++) out.push_back({u, 0});
        return out;
    }
    long long vlo = (long long)rat_floor(b.miny - a.maxy) - 1;
    long long vhi = (long long)rat_floor(b.maxy - a.miny) + 1;
    for (long long u = ulo; u <= uhi; u++)
        for (long long v = vlo; v <= vhi; v++) out.push_back({u, v});
    return out;
}

} // namespace

std::vector<std::string> validate_curve(Curve const& c, SurfaceKind surface) {
    std::vector<std::string> errs;
    if (c.vertices.empty()) {
        errs.push_back("DegenerateSegment: curve has no vertices");
        return errs;
    }
    if (!lattice_ok(surface, c.deck)) {
        errs.push_back("BadDeck: deck (" + std::to_string(c.deck.u) + "," +
                       std::to_string(c.deck.v) + ") not in the " + surface_name(surface) +
                       " lattice");
        return errs;
    }
    size_t n = c.nsegs();
    for (size_t i = 0; i < n; i++) {
        auto [a, b] = c.seg(i);
        if (a == b) {
            errs.push_back("DegenerateSegment: zero-length segment " + std::to_string(i));
            return errs;
        }
    }
    for (size_t i = 0; i < n; i++) {
        Pt d1 = c.seg(i).second - c.seg(i).first;
        Pt d2 = c.seg((i + 1) % n).second - c.seg((i + 1) % n).first;
        if (cross(d1, d2) == 0 && dot(d1, d2) < 0) {
            errs.push_back("DegenerateSegment: reversal at vertex after segment " +
                           std::to_string(i));
            return errs;
        }
    }
    // self-contacts of the base lift
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            auto [a, b] = c.seg(i);
            auto [p, q] = c.seg(j);
            auto r = seg_intersect(a, b, p, q);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1 && c.deck.zero());
            if (adjacent) {
                if (r.kind != SegContact::SharedEndpoint)
                    errs.push_back("NotEmbedded: segments " + std::to_string(i) + "," +
                                   std::to_string(j) + " of the base lift");
            } else if (r.kind != SegContact::Disjoint) {
                errs.push_back("NotEmbedded: segments " + std::to_string(i) + "," +
                               std::to_string(j) + " of the base lift");
            }
        }
    }
    // contacts with lattice translates
    BBox bb = curve_bbox(c);
    for (auto const& g : overlap_translates(surface, bb, bb)) {
        if (g.zero()) continue;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                auto [a, b] = c.seg(i);
                auto [p, q] = c.seg(j);
                p = p + g.vec();
                q = q + g.vec();
                auto r = seg_intersect(a, b, p, q);
                bool junction = (g == c.deck && i == n - 1 && j == 0) ||
                                (g == -c.deck && i == 0 && j == n - 1);
                if (junction) {
                    if (r.kind != SegContact::SharedEndpoint)
                        errs.push_back("NotEmbedded: closing junction overlap, translate (" +
                                       std::to_string(g.u) + "," + std::to_string(g.v) + ")");
                } else if (r.kind != SegContact::Disjoint) {
                    errs.push_back("NotEmbedded: segment " + std::to_string(i) +
                                   " meets translate (" + std::to_string(g.u) + "," +
                                   std::to_string(g.v) + ") of segment " + std::to_string(j));
                }
            }
        }
    }
    std::sort(errs.begin(), errs.end());
    errs.erase(std::unique(errs.begin(), errs.end()), errs.end());
    return errs;
}

std::vector<std::string> validate_pair(CurvePair& pair) {
    std::vector<std::string> errs;
    for (auto const& e : validate_curve(pair.alpha, pair.surface)) errs.push_back("alpha: " + e);
    for (auto const& e : validate_curve(pair.beta, pair.surface)) errs.push_back("beta: " + e);
    if (!errs.empty()) return errs;

    BBox ba = curve_bbox(pair.alpha), bb = curve_bbox(pair.beta);
    size_t na = pair.alpha.nsegs(), nb = pair.beta.nsegs();
    for (auto const& g : overlap_translates(pair.surface, ba, bb)) {
        for (size_t i = 0; i < na; i++) {
            for (size_t j = 0; j < nb; j++) {
                auto [a, b] = pair.alpha.seg(i);
                auto [p, q] = pair.beta.seg(j);
                a = a + g.vec();
                b = b + g.vec();
                auto r = seg_intersect(a, b, p, q);
                if (r.kind == SegContact::SharedEndpoint || r.kind == SegContact::Degenerate)
                    errs.push_back("NotTransverse: alpha segment " + std::to_string(i) +
                                   " translate (" + std::to_string(g.u) + "," +
                                   std::to_string(g.v) + ") vs beta segment " +
                                   std::to_string(j));
            }
        }
    }
    if (!errs.empty()) return errs;

    pair.flags.noncontractible_alpha = !pair.alpha.deck.zero();
    pair.flags.noncontractible_beta = !pair.beta.deck.zero();
    pair.flags.nonisotopic =
        pair.alpha.deck != pair.beta.deck && pair.alpha.deck != -pair.beta.deck;
    return errs;
}

std::vector<IntersectionPoint> intersections(CurvePair const& pair) {
    std::vector<IntersectionPoint> pts;
    BBox ba = curve_bbox(pair.alpha), bb = curve_bbox(pair.beta);
    size_t na = pair.alpha.nsegs(), nb = pair.beta.nsegs();
    for (auto const& g : overlap_translates(pair.surface, ba, bb)) {
        for (size_t i = 0; i < na; i++) {
            for (size_t j = 0; j < nb; j++) {
                auto [a, b] = pair.alpha.seg(i);
                auto [p, q] = pair.beta.seg(j);
                Pt at = a + g.vec(), bt = b + g.vec();
                auto r = seg_intersect(at, bt, p, q);
                if (r.kind != SegContact::ProperCrossing) continue;
                IntersectionPoint ip;
                ip.lift = r.p;
                ip.alpha_g = g;
                ip.dir_alpha = b - a;
                ip.dir_beta = q - p;
                ip.eps = sgn(cross(ip.dir_alpha, ip.dir_beta));
                Pt on_alpha = r.p - g.vec();
                ip.along_alpha = Rat((long long)i) +
                                 dot(on_alpha - a, b - a) / dot(b - a, b - a);
                ip.along_beta = Rat((long long)j) + dot(r.p - p, q - p) / dot(q - p, q - p);
                Pt pos = r.p;
                if (pair.surface == SurfaceKind::Torus || pair.surface == SurfaceKind::Annulus)
                    pos.x = pos.x - Rat(rat_floor(pos.x));
                if (pair.surface == SurfaceKind::Torus)
                    pos.y = pos.y - Rat(rat_floor(pos.y));
                ip.pos = pos;
                pts.push_back(std::move(ip));
            }
        }
    }
    std::sort(pts.begin(), pts.end(), [](auto const& x, auto const& y) {
        return x.along_alpha < y.along_alpha;
    });
    for (size_t k = 0; k < pts.size(); k++) pts[k].id = (int)k;
    return pts;
}

long long PairCtx::alg() const {
    long long s = 0;
    for (auto const& p : pts) s += p.eps;
    return s;
}

bool PairCtx::in_lattice(IVec const& g) const { return lattice_ok(pair.surface, g); }

std::vector<IVec> PairCtx::lattice_range(long long lim) const {
    std::vector<IVec> out;
    switch (pair.surface) {
        case SurfaceKind::Plane:
        case SurfaceKind::Sphere: out.push_back({0, 0}); break;
        case SurfaceKind::Annulus:
            for (long long u = -lim; u <= lim; u++) out.push_back({u, 0});
            break;
        case SurfaceKind::Torus:
            for (long long u = -lim; u <= lim; u++)
                for (long long v = -lim; v <= lim; v++) out.push_back({u, v});
            break;
    }
    return out;
}

Polyline PairCtx::interval_piece(int c, int j, IVec const& g) const {
    auto const& ord = along[c];
    int m = (int)ord.size();
    Curve const& cv = curve(c);
    Rat t0 = along_of(c, ord[j]);
    Rat t1 = (j + 1 < m) ? along_of(c, ord[j + 1]) : along_of(c, ord[0]) + Rat((long long)cv.nsegs());
    Polyline out;
    out.vertices.push_back(cv.point_at(t0) + g.vec());
    for (Int i = rat_floor(t0) + 1; Rat(i) < t1; i++) {
        Pt p = cv.point_at(Rat(i)) + g.vec();
        if (p != out.vertices.back()) out.vertices.push_back(p);
    }
    Pt e = cv.point_at(t1) + g.vec();
    if (e != out.vertices.back()) out.vertices.push_back(e);
    return out;
}

PairCtx analyze(CurvePair pair) {
    auto errs = validate_pair(pair);
    if (!errs.empty()) {
        std::string msg;
        for (auto const& e : errs) msg += (msg.empty() ? "" : "; ") + e;
        throw InputError(msg);
    }
    PairCtx ctx;
    ctx.pair = pair;
    ctx.pts = intersections(pair);
    for (int c = 0; c < 2; c++) {
        auto& ord = ctx.along[c];
        ord.resize(ctx.pts.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
            return ctx.along_of(c, a) < ctx.along_of(c, b);
        });
        ctx.idx_on[c].resize(ctx.pts.size());
        for (size_t k = 0; k < ord.size(); k++) ctx.idx_on[c][ord[k]] = (int)k;
    }
    return ctx;
}

ArcWalk lift_arc(PairCtx const& ctx, int c, int xid, int yid, ArcSpec spec, Pt const& anchor) {
    auto const& ord = ctx.along[c];
    int m = (int)ord.size();
    Curve const& cv = ctx.curve(c);
    if (spec.extra_wraps < 0) throw InputError("extra_wraps must be nonnegative");
    int ix = ctx.idx_on[c][xid], iy = ctx.idx_on[c][yid];
    int steps = spec.forward ? (iy - ix + m) % m : (ix - iy + m) % m;
    int total = steps + spec.extra_wraps * m;
    if (total == 0) throw InputError("empty arc: same point with no wraps");

    // translate of the curve's stored lift passing through the anchor
    Pt off = anchor - cv.point_at(ctx.along_of(c, xid));
    Int ou = numerator(off.x), ov = numerator(off.y);
    if (denominator(off.x) != 1 || denominator(off.y) != 1)
        throw InternalError("anchor is not a lattice lift");
    IVec g{(long long)ou, (long long)ov};

    ArcWalk w;
    w.path.vertices.push_back(anchor);
    int j = ix;
    for (int s = 0; s < total; s++) {
        int jj;
        if (spec.forward) {
            jj = j;
            j = (j + 1) % m;
        } else {
            jj = (j - 1 + m) % m;
            if (jj == m - 1) g = g - cv.deck; // stepped backward across the closure
            j = jj;
        }
        w.intervals.push_back({jj, g});
        Polyline piece = ctx.interval_piece(c, jj, g);
        if (!spec.forward) std::reverse(piece.vertices.begin(), piece.vertices.end());
        for (size_t k = 1; k < piece.vertices.size(); k++)
            w.path.vertices.push_back(piece.vertices[k]);
        if (spec.forward && jj == m - 1) g = g + cv.deck; // crossed the closure
    }
    w.end = w.path.vertices.back();
    return w;
}

ArcWalk lift_path(PairCtx const& ctx, int c, int xid, int yid, ArcSpec spec) {
    return lift_arc(ctx, c, xid, yid, spec, ctx.pts[xid].lift);
}

namespace {

// one integer solution of a*k - b*l = r, if any
std::optional<std::pair<long long, long long>> solve_lin(long long a, long long b, long long r) {
    if (a == 0 && b == 0) {
        if (r == 0) return {{0, 0}};
        return std::nullopt;
    }
    long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    if (r % g != 0) return std::nullopt;
    // extended gcd on |a|, |b|
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1, aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
    while (bb != 0) {
        long long q = aa / bb;
        std::tie(aa, bb) = std::make_pair(bb, aa - q * bb);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    // aa == g = x0*|a| + y0*|b|
    long long k = x0 * (r / g) * (a < 0 ? -1 : 1);
    long long l = -y0 * (r / g) * (b < 0 ? -1 : 1);
    return {{k, l}};
}

} // namespace

std::optional<std::pair<long long, long long>> same_component(PairCtx const& ctx,
                                                              int xid, int yid) {
    auto disp = [&](int c) {
        Curve const& cv = ctx.curve(c);
        Rat tx = ctx.along_of(c, xid), ty = ctx.along_of(c, yid);
        Pt d = cv.point_at(ty) - cv.point_at(tx);
        if (ty < tx) d = d + cv.deck.vec();
        return d;
    };
    Pt R = disp(1) - disp(0); // beta displacement minus alpha displacement
    if (denominator(R.x) != 1 || denominator(R.y) != 1)
        throw InternalError("lift displacement difference is not a lattice vector");
    long long ru = (long long)numerator(R.x), rv = (long long)numerator(R.y);
    IVec da = ctx.pair.alpha.deck, db = ctx.pair.beta.deck;
    // solve k*da - l*db = R
    long long det = da.u * (-db.v) - (-db.u) * da.v;
    if (det != 0) {
        long long nk = ru * (-db.v) - (-db.u) * rv;
        long long nl = da.u * rv - ru * da.v;
        if (nk % det != 0 || nl % det != 0) return std::nullopt;
        return {{nk / det, nl / det}};
    }
    // degenerate: decks parallel or zero
    if (da.zero() && db.zero()) {
        if (ru == 0 && rv == 0) return {{0, 0}};
        return std::nullopt;
    }
    IVec d = da.zero() ? db : da;
    long long g = std::gcd(d.u < 0 ? -d.u : d.u, d.v < 0 ? -d.v : d.v);
    d = {d.u / g, d.v / g};
    auto comp = [&](IVec const& w) -> std::optional<long long> {
        // w = c*d ?
        long long c = (d.u != 0) ? w.u / d.u : w.v / d.v;
        if (w.u == c * d.u && w.v == c * d.v) return c;
        return std::nullopt;
    };
    auto ca = comp(da), cb = comp(db), cr = comp({ru, rv});
    if (!ca || !cb || !cr) return std::nullopt;
    return solve_lin(*ca, *cb, *cr);
}

} // namespace cfh
