#include "cfh/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cfh/errors.hpp"

namespace cfh {

namespace {

struct Seg {
    Pt a, b;
    int arc;
};

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

Rat param_on(Seg const& s, Pt const& p) {
    Pt d = s.b - s.a;
    return dot(p - s.a, d) / dot(d, d);
}

} // namespace

int Arrangement::find_vertex(Pt const& p) const {
    for (size_t i = 0; i < verts.size(); i++)
        if (verts[i] == p) return (int)i;
    return -1;
}

int Arrangement::find_edge_interior(Pt const& p) const {
    for (size_t e = 0; e < edges.size(); e++)
        if (on_segment_interior(p, verts[edges[e].v0], verts[edges[e].v1]))
            return (int)e;
    return -1;
}

int Arrangement::sector_face(int v, Pt const& d) const {
    auto const& S = star[v];
    if (S.empty()) throw PointClassificationFailed("isolated vertex");
    for (int h : S)
        if (sgn(cross(he_dir(h), d)) == 0 && dot(he_dir(h), d) > 0)
            throw PointClassificationFailed("sector direction parallel to an edge");
    int best = -1;
    for (size_t i = 0; i < S.size(); i++)
        if (dir_less(he_dir(S[i]), d)) best = (int)i;
    if (best < 0) best = (int)S.size() - 1;
    return he_face[S[best]];
}

Arrangement build_arrangement(std::vector<Polyline> const& arcs) {
    std::vector<Seg> segs;
    for (size_t ai = 0; ai < arcs.size(); ai++) {
        auto const& pl = arcs[ai];
        for (size_t i = 0; i < pl.seg_count(); i++) {
            if (pl.seg_a(i) == pl.seg_b(i))
                throw DegenerateSegment("zero-length segment in arc " + std::to_string(ai));
            segs.push_back({pl.seg_a(i), pl.seg_b(i), (int)ai});
        }
    }

    // split points per segment
    std::vector<std::vector<std::pair<Rat, Pt>>> splits(segs.size());
    for (size_t i = 0; i < segs.size(); i++) {
        splits[i].push_back({Rat(0), segs[i].a});
        splits[i].push_back({Rat(1), segs[i].b});
    }
    for (size_t i = 0; i < segs.size(); i++) {
        for (size_t j = i + 1; j < segs.size(); j++) {
            Pt const &a = segs[i].a, &b = segs[i].b, &c = segs[j].a, &d = segs[j].b;
            int o1 = orient(a, b, c), o2 = orient(a, b, d);
            int o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (o1 == 0 && o2 == 0) {
                if (dot(c - a, c - b) < 0 || dot(d - a, d - b) < 0 ||
                    dot(a - c, a - d) < 0 || dot(b - c, b - d) < 0)
                    throw DegenerateContact("collinear overlapping segments");
                continue;
            }
            if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
                if (o1 != o2 && o3 != o4) {
                    Rat t = cross(c - a, d - c) / cross(b - a, d - c);
                    Pt p = a + t * (b - a);
                    splits[i].push_back({t, p});
                    splits[j].push_back({param_on(segs[j], p), p});
                }
                continue;
            }
            // endpoint of one segment interior to the other: split there
            if (o1 == 0 && on_segment_interior(c, a, b)) splits[i].push_back({param_on(segs[i], c), c});
            if (o2 == 0 && on_segment_interior(d, a, b)) splits[i].push_back({param_on(segs[i], d), d});
            if (o3 == 0 && on_segment_interior(a, c, d)) splits[j].push_back({param_on(segs[j], a), a});
            if (o4 == 0 && on_segment_interior(b, c, d)) splits[j].push_back({param_on(segs[j], b), b});
        }
    }

    Arrangement arr;
    std::map<Pt, int, PtLess> vid;
    auto get_vid = [&](Pt const& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = (int)arr.verts.size();
        arr.verts.push_back(p);
        vid.emplace(p, id);
        return id;
    };

    std::set<std::pair<int, int>> seen_edges;
    for (size_t i = 0; i < segs.size(); i++) {
        auto& sp = splits[i];
        std::sort(sp.begin(), sp.end(),
                  [](auto const& x, auto const& y) { return x.first < y.first; });
        for (size_t k = 0; k + 1 < sp.size(); k++) {
            if (sp[k].first == sp[k + 1].first) continue;
            int u = get_vid(sp[k].second), v = get_vid(sp[k + 1].second);
            auto key = std::minmax(u, v);
            if (!seen_edges.insert({key.first, key.second}).second)
                throw DegenerateContact("duplicate edge between vertices " +
                                        pt_str(arr.verts[u]) + " " + pt_str(arr.verts[v]));
            arr.edges.push_back({u, v, segs[i].arc});
        }
    }

    size_t V = arr.verts.size(), E = arr.edges.size();
    arr.star.assign(V, {});
    for (size_t e = 0; e < E; e++) {
        arr.star[arr.edges[e].v0].push_back(2 * (int)e);
        arr.star[arr.edges[e].v1].push_back(2 * (int)e + 1);
    }
    for (size_t v = 0; v < V; v++) {
        auto& S = arr.star[v];
        std::sort(S.begin(), S.end(), [&](int h1, int h2) {
            return dir_less(arr.he_dir(h1), arr.he_dir(h2));
        });
        for (size_t i = 0; i + 1 < S.size(); i++) {
            Pt d1 = arr.he_dir(S[i]), d2 = arr.he_dir(S[i + 1]);
            if (cross(d1, d2) == 0 && dot(d1, d2) > 0)
                throw DegenerateContact("coincident edge directions at " + pt_str(arr.verts[v]));
        }
    }

    // face cycles: next(h) = star-predecessor of twin(h) at dst(h)
    auto next_he = [&](int h) {
        int w = arr.he_dst(h);
        auto const& S = arr.star[w];
        int tw = h ^ 1;
        size_t idx = std::find(S.begin(), S.end(), tw) - S.begin();
        return S[(idx + S.size() - 1) % S.size()];
    };

    std::vector<int> cyc_of(2 * E, -1);
    std::vector<std::vector<int>> cycles;
    std::vector<Rat> cyc_area;
    for (size_t h0 = 0; h0 < 2 * E; h0++) {
        if (cyc_of[h0] >= 0) continue;
        int cid = (int)cycles.size();
        std::vector<int> cyc;
        Rat area = 0;
        int h = (int)h0;
        do {
            cyc_of[h] = cid;
            cyc.push_back(h);
            area += cross(arr.verts[arr.he_src(h)], arr.verts[arr.he_dst(h)]);
            h = next_he(h);
        } while (h != (int)h0);
        cycles.push_back(std::move(cyc));
        cyc_area.push_back(area / 2);
    }

    DSU dsu((int)V);
    for (auto const& e : arr.edges) dsu.unite(e.v0, e.v1);
    std::set<int> roots;
    for (size_t v = 0; v < V; v++) roots.insert(dsu.find((int)v));
    arr.components = (int)roots.size();

    std::vector<int> cyc_comp(cycles.size(), -1);
    for (size_t c = 0; c < cycles.size(); c++)
        cyc_comp[c] = dsu.find(arr.he_src(cycles[c][0]));

    // faces: one per positive cycle, plus the unbounded face; non-positive
    // cycles are outer contours assigned to the face that contains them
    std::vector<int> cyc_face(cycles.size(), -1);
    arr.faces.clear();
    for (size_t c = 0; c < cycles.size(); c++) {
        if (cyc_area[c] <= 0) continue;
        cyc_face[c] = (int)arr.faces.size();
        Face f;
        f.cycles.push_back(cycles[c]);
        f.area = cyc_area[c];
        arr.faces.push_back(std::move(f));
    }
    arr.unbounded_face = (int)arr.faces.size();
    {
        Face f;
        f.unbounded = true;
        arr.faces.push_back(std::move(f));
    }
    for (size_t c = 0; c < cycles.size(); c++) {
        if (cyc_area[c] > 0) continue;
        // lexicomin vertex of the contour
        int rep = arr.he_src(cycles[c][0]);
        for (int h : cycles[c]) {
            int s = arr.he_src(h);
            if (PtLess{}(arr.verts[s], arr.verts[rep])) rep = s;
        }
        int parent = arr.unbounded_face;
        Rat best_area = 0;
        for (size_t pc = 0; pc < cycles.size(); pc++) {
            if (cyc_area[pc] <= 0 || cyc_comp[pc] == cyc_comp[c]) continue;
            Polyline poly;
            poly.closed = true;
            for (int h : cycles[pc]) poly.vertices.push_back(arr.verts[arr.he_src(h)]);
            if (winding_by_raycast(poly, arr.verts[rep]) != 0) {
                if (parent == arr.unbounded_face || cyc_area[pc] < best_area) {
                    parent = cyc_face[pc];
                    best_area = cyc_area[pc];
                }
            }
        }
        cyc_face[c] = parent;
        arr.faces[parent].cycles.push_back(cycles[c]);
        arr.faces[parent].area += cyc_area[c];
    }

    arr.he_face.assign(2 * E, -1);
    for (size_t h = 0; h < 2 * E; h++) arr.he_face[h] = cyc_face[cyc_of[h]];

    long long euler = (long long)V - (long long)E + (long long)arr.faces.size();
    if (euler != 1 + (long long)arr.components)
        throw InternalError("Euler check failed: V-E+F = " + std::to_string(euler) +
                            ", expected " + std::to_string(1 + arr.components));
    return arr;
}

std::vector<int> winding_by_propagation(Arrangement const& arr, std::vector<int> const& mult) {
    if (mult.size() != arr.edges.size())
        throw InternalError("multiplicity vector size mismatch");
    size_t F = arr.faces.size();
    std::vector<int> w(F, 0);
    std::vector<bool> done(F, false);
    std::vector<int> queue{arr.unbounded_face};
    done[arr.unbounded_face] = true;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (size_t e = 0; e < arr.edges.size(); e++) {
            int l = arr.left_face((int)e), r = arr.right_face((int)e);
            if (l == f && !done[r]) {
                w[r] = w[f] - mult[e];
                done[r] = true;
                queue.push_back(r);
            } else if (r == f && !done[l]) {
                w[l] = w[f] + mult[e];
                done[l] = true;
                queue.push_back(l);
            }
        }
    }
    for (size_t f = 0; f < F; f++)
        if (!done[f]) throw InconsistentPropagation("unreachable face");
    for (size_t e = 0; e < arr.edges.size(); e++)
        if (w[arr.left_face((int)e)] - w[arr.right_face((int)e)] != mult[e])
            throw InconsistentPropagation("cycle inconsistency at edge " + std::to_string(e));
    return w;
}

int chain_winding_at(Arrangement const& arr, std::vector<int> const& mult, Pt const& p) {
    for (size_t e = 0; e < arr.edges.size(); e++)
        if (mult[e] != 0 && on_segment(p, arr.verts[arr.edges[e].v0], arr.verts[arr.edges[e].v1]))
            throw PointOnLoop("winding point lies on the chain support");
    Pt d;
    for (Int s = 1;; s++) {
        d = Pt{Rat(1), Rat(s)};
        bool bad = false;
        for (auto const& v : arr.verts) {
            Pt u = v - p;
            if ((u.x != 0 || u.y != 0) && cross(d, u) == 0) { bad = true; break; }
        }
        if (!bad) break;
    }
    int w = 0;
    for (size_t e = 0; e < arr.edges.size(); e++) {
        if (mult[e] == 0) continue;
        Pt u = arr.verts[arr.edges[e].v0] - p, v = arr.verts[arr.edges[e].v1] - p;
        int su = sgn(cross(d, u)), sv = sgn(cross(d, v));
        if (su == sv) continue;
        Rat t = cross(u, v - u) / cross(d, v - u);
        if (t > 0) w += mult[e] * ((sv - su) / 2);
    }
    return w;
}

} // namespace cfh
