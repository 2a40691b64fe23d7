#ifndef CFH_TRACE_HPP
#define CFH_TRACE_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "cfh/arrangement.hpp"
#include "cfh/surface.hpp"

namespace cfh {

// primitive lifted curve edge: interval between consecutive crossings along a
// curve, at a lattice translate
struct ChainKey {
    int curve;    // 0 alpha, 1 beta
    int interval; // index into PairCtx::along[curve]
    IVec g;
    bool operator<(ChainKey const& o) const {
        if (curve != o.curve) return curve < o.curve;
        if (interval != o.interval) return interval < o.interval;
        return g < o.g;
    }
    bool operator==(ChainKey const& o) const {
        return curve == o.curve && interval == o.interval && g == o.g;
    }
};

struct Trace {
    PairCtx const* ctx = nullptr;
    int xid = -1, yid = -1;
    Pt lift_x, lift_y;
    ArcSpec arc_alpha, arc_beta; // meaningful when not composite
    bool composite = false;
    int shift = 0; // sphere: the two-chain is defined up to this added constant
    // traversal counts of primitive curve edges, along curve orientation;
    // the boundary loop is (alpha part) - (beta part)
    std::map<ChainKey, int> cov;

    struct Geom {
        Arrangement arr;
        std::vector<int> mult; // per arrangement edge, along the loop
        std::vector<int> w;    // per face, winding (without shift)
    };
    Geom const& geom() const;
    bool same_as(Trace const& o) const; // equal endpoints, lifts and chain

  private:
    mutable std::shared_ptr<Geom> geom_;
};

// the induced one-chain: traversal degree per (curve, interval) downstairs
struct TraceBoundary {
    int xid = -1, yid = -1;
    std::array<std::map<int, int>, 2> nu;
};

Trace constant_trace(PairCtx const& ctx, int xid);
std::optional<Trace> trace_from_arcs(PairCtx const& ctx, int xid, int yid,
                                     ArcSpec arc_alpha, ArcSpec arc_beta);
std::vector<Trace> all_arc_traces(PairCtx const& ctx, int xid, int yid);
// chain-level trace with signed wrap counts k (alpha) and l (beta), both arcs
// taken forward; used for grading
Trace connecting_trace(PairCtx const& ctx, int xid, int yid, long long k, long long l);

TraceBoundary boundary(Trace const& t);
bool satisfies_arc_condition(Trace const& t);

// downstairs data of the arc on curve c (requires the arc condition):
// traversal sign, covered interval indices, crossing ids met by the closed arc
int arc_dir(Trace const& t, int c);
std::set<int> arc_intervals(Trace const& t, int c);
std::set<int> arc_points(Trace const& t, int c);
// direction of the arc on curve c leaving x (out) / entering y (in)
Pt arc_out_dir(Trace const& t, int c);
Pt arc_in_dir(Trace const& t, int c);

int m_at(Trace const& t, Pt const& p);
// the four winding values in the sectors around a crossing lift, ccw
std::array<int, 4> sector_values(Trace const& t, Pt const& p);
int maslov(Trace const& t);
int maslov_plane_form(Trace const& t);

Trace catenate(Trace const& t1, Trace const& t2);
Trace reverse_trace(Trace const& t);
Rat trace_area(Trace const& t);
int cancellation_defect(Trace const& t, IVec const& g);

} // namespace cfh

#endif // CFH_TRACE_HPP
