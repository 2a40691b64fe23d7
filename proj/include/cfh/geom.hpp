#ifndef CFH_GEOM_HPP
#define CFH_GEOM_HPP

#include <vector>

#include "cfh/rat.hpp"

namespace cfh {

struct Polyline {
    std::vector<Pt> vertices;
    bool closed = false;

    // number of segments (includes the implied closing segment when closed)
    size_t seg_count() const {
        if (vertices.size() < 2) return 0;
        return closed ? vertices.size() : vertices.size() - 1;
    }
    Pt seg_a(size_t i) const { return vertices[i]; }
    Pt seg_b(size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

int orient(Pt const& p, Pt const& q, Pt const& r);

enum class SegContact { Disjoint, ProperCrossing, SharedEndpoint, Degenerate };

struct SegIntersect {
    SegContact kind;
    Pt p; // meaningful for ProperCrossing and SharedEndpoint
};

SegIntersect seg_intersect(Pt const& a, Pt const& b, Pt const& c, Pt const& d);

// p strictly inside segment (a,b)
bool on_segment_interior(Pt const& p, Pt const& a, Pt const& b);
// p on closed segment [a,b]
bool on_segment(Pt const& p, Pt const& a, Pt const& b);

Rat signed_area(Polyline const& loop);

// signed crossing count along a ray from p; ray direction scans slopes 1,2,3,...
// until it misses every loop vertex
int winding_by_raycast(Polyline const& loop, Pt const& p);

// pseudo-angle comparison of nonzero direction vectors, counterclockwise from +x axis
bool dir_less(Pt const& d1, Pt const& d2);

} // namespace cfh

#endif // CFH_GEOM_HPP
