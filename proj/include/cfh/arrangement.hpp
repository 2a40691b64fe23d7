#ifndef CFH_ARRANGEMENT_HPP
#define CFH_ARRANGEMENT_HPP

#include <map>
#include <vector>

#include "cfh/geom.hpp"

namespace cfh {

struct ArrEdge {
    int v0, v1;  // oriented along the carrier arc's direction
    int arc;     // input arc index
};

struct Face {
    std::vector<std::vector<int>> cycles; // boundary cycles as half-edge lists
    Rat area = 0;                         // finite part (holes subtracted); 0-contribution for unbounded
    bool unbounded = false;
};

// half-edge h = 2*e (forward: v0->v1) or 2*e+1 (reverse)
struct Arrangement {
    std::vector<Pt> verts;
    std::vector<ArrEdge> edges;
    std::vector<std::vector<int>> star;  // vertex -> outgoing half-edges, ccw by direction
    std::vector<int> he_face;            // half-edge -> id of the face on its left
    std::vector<Face> faces;
    int unbounded_face = -1;
    int components = 0;

    int he_src(int h) const { return (h & 1) ? edges[h >> 1].v1 : edges[h >> 1].v0; }
    int he_dst(int h) const { return (h & 1) ? edges[h >> 1].v0 : edges[h >> 1].v1; }
    Pt he_dir(int h) const { return verts[he_dst(h)] - verts[he_src(h)]; }
    int left_face(int e) const { return he_face[2 * e]; }
    int right_face(int e) const { return he_face[2 * e + 1]; }

    int find_vertex(Pt const& p) const;        // -1 if absent
    int find_edge_interior(Pt const& p) const; // -1 if absent
    // face owning the angular sector at vertex v that contains direction d;
    // d must not be parallel to any star edge at v
    int sector_face(int v, Pt const& d) const;
};

Arrangement build_arrangement(std::vector<Polyline> const& arcs);

// mult[e]: signed multiplicity of edge e, positive along the e.v0->e.v1 direction.
// returns winding per face; unbounded face gets 0.
std::vector<int> winding_by_propagation(Arrangement const& arr,
                                        std::vector<int> const& mult);

// winding number of the multiplicity chain about p (p off all edges), by ray cast
int chain_winding_at(Arrangement const& arr, std::vector<int> const& mult, Pt const& p);

} // namespace cfh

#endif // CFH_ARRANGEMENT_HPP
