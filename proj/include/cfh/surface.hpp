#ifndef CFH_SURFACE_HPP
#define CFH_SURFACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cfh/geom.hpp"

namespace cfh {

enum class SurfaceKind { Plane, Sphere, Annulus, Torus };

std::string surface_name(SurfaceKind k);
std::optional<SurfaceKind> surface_from_name(std::string const& s);

// lattice (deck) vector; the lattice is {0}, Z*(1,0) or Z^2 by surface
struct IVec {
    long long u = 0, v = 0;
    bool operator==(IVec const& o) const { return u == o.u && v == o.v; }
    bool operator!=(IVec const& o) const { return !(*this == o); }
    bool operator<(IVec const& o) const { return u != o.u ? u < o.u : v < o.v; }
    IVec operator+(IVec const& o) const { return {u + o.u, v + o.v}; }
    IVec operator-(IVec const& o) const { return {u - o.u, v - o.v}; }
    IVec operator-() const { return {-u, -v}; }
    Pt vec() const { return {Rat(u), Rat(v)}; }
    bool zero() const { return u == 0 && v == 0; }
};

struct Curve {
    std::vector<Pt> vertices; // one lift of the loop
    IVec deck;                // closing segment runs to vertices[0] + deck

    size_t nsegs() const { return vertices.size(); }
    // point at parameter t; t + nsegs() maps to the deck translate
    Pt point_at(Rat const& t) const;
    // direction of the segment containing parameter t (t not integral, or the
    // segment starting at t when integral)
    Pt dir_at(Rat const& t) const;
    // segment i as (a, b), i in [0, nsegs())
    std::pair<Pt, Pt> seg(size_t i) const;
};

struct Flags {
    bool noncontractible_alpha = false;
    bool noncontractible_beta = false;
    bool nonisotopic = false;
    bool all() const { return noncontractible_alpha && noncontractible_beta && nonisotopic; }
};

struct CurvePair {
    SurfaceKind surface = SurfaceKind::Plane;
    Curve alpha, beta;
    Flags flags; // computed by validate_pair
};

struct IntersectionPoint {
    int id = -1;
    Pt pos;          // representative in the fundamental domain
    int eps = 0;     // sign det(dir_alpha, dir_beta)
    Rat along_alpha; // parameter on alpha in [0, nsegs)
    Rat along_beta;
    // internals: canonical lift (the crossing on beta's stored lift), the
    // alpha translate through it, and the curve directions there
    Pt lift;
    IVec alpha_g;
    Pt dir_alpha, dir_beta;
};

std::vector<std::string> validate_curve(Curve const& c, SurfaceKind surface);
// fills pair.flags on success
std::vector<std::string> validate_pair(CurvePair& pair);

std::vector<IntersectionPoint> intersections(CurvePair const& pair);

// validated pair with its crossing data and per-curve orderings
struct PairCtx {
    CurvePair pair;
    std::vector<IntersectionPoint> pts;
    std::array<std::vector<int>, 2> along;  // crossing ids ordered along each curve
    std::array<std::vector<int>, 2> idx_on; // id -> position in along[c]

    Curve const& curve(int c) const { return c == 0 ? pair.alpha : pair.beta; }
    Rat along_of(int c, int id) const {
        return c == 0 ? pts[id].along_alpha : pts[id].along_beta;
    }
    int num() const { return (int)pts.size(); }
    long long alg() const;
    bool in_lattice(IVec const& g) const;
    std::vector<IVec> lattice_range(long long lim) const; // all g, coords in [-lim,lim]
    // geometry of the sub-path of curve c between consecutive crossings
    // along[c][j] and along[c][j+1 mod m], translated by g
    Polyline interval_piece(int c, int j, IVec const& g) const;
};

PairCtx analyze(CurvePair pair); // throws InputError on invalid input

struct ArcSpec {
    bool forward = true;
    int extra_wraps = 0; // >= 0
};

struct ArcWalk {
    Polyline path; // open lifted PL path
    Pt end;
    // traversed intervals in order: (index j into along[c], translate)
    std::vector<std::pair<int, IVec>> intervals;
};

// walk along curve c from crossing x to crossing y starting at the lift
// 'anchor' of x; x == y requires extra_wraps > 0
ArcWalk lift_arc(PairCtx const& ctx, int c, int xid, int yid, ArcSpec spec, Pt const& anchor);

// convenience overload anchored at x's canonical lift
ArcWalk lift_path(PairCtx const& ctx, int c, int xid, int yid, ArcSpec spec);

// (k,l) with alpha-arc + k*deck(alpha) = beta-arc + l*deck(beta) as end lifts
std::optional<std::pair<long long, long long>> same_component(PairCtx const& ctx,
                                                              int xid, int yid);

} // namespace cfh

#endif // CFH_SURFACE_HPP
