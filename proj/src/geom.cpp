#include "cfh/geom.hpp"

#include "cfh/errors.hpp"

namespace cfh {

int orient(Pt const& p, Pt const& q, Pt const& r) {
    return sgn(cross(q - p, r - p));
}

bool on_segment(Pt const& p, Pt const& a, Pt const& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, p - b) <= 0;
}

bool on_segment_interior(Pt const& p, Pt const& a, Pt const& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, p - b) < 0;
}

SegIntersect seg_intersect(Pt const& a, Pt const& b, Pt const& c, Pt const& d) {
    int shared = 0;
    Pt sp;
    if (a == c || a == d) { shared++; sp = a; }
    if (b == c || b == d) { shared++; sp = b; }
    if (shared == 2) return {SegContact::Degenerate, {}};
    if (shared == 1) {
        // the non-shared ends; overlap beyond the shared point is degenerate
        Pt u = (sp == a) ? b : a;
        Pt v = (sp == c) ? d : c;
        if (orient(sp, u, v) == 0 && dot(u - sp, v - sp) > 0)
            return {SegContact::Degenerate, {}};
        return {SegContact::SharedEndpoint, sp};
    }
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 == 0 && o2 == 0) {
        // collinear: any overlap is degenerate
        if (dot(c - a, c - b) < 0 || dot(d - a, d - b) < 0 ||
            dot(a - c, a - d) < 0 || dot(b - c, b - d) < 0)
            return {SegContact::Degenerate, {}};
        return {SegContact::Disjoint, {}};
    }
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        // an endpoint touching the other segment's interior
        if (o1 == 0 && on_segment_interior(c, a, b)) return {SegContact::Degenerate, {}};
        if (o2 == 0 && on_segment_interior(d, a, b)) return {SegContact::Degenerate, {}};
        if (o3 == 0 && on_segment_interior(a, c, d)) return {SegContact::Degenerate, {}};
        if (o4 == 0 && on_segment_interior(b, c, d)) return {SegContact::Degenerate, {}};
        return {SegContact::Disjoint, {}};
    }
    if (o1 != o2 && o3 != o4) {
        Rat t = cross(c - a, d - c) / cross(b - a, d - c);
        return {SegContact::ProperCrossing, a + t * (b - a)};
    }
    return {SegContact::Disjoint, {}};
}

Rat signed_area(Polyline const& loop) {
    Rat s = 0;
    size_t n = loop.vertices.size();
    if (n < 3) return s;
    for (size_t i = 0; i < n; i++)
        s += cross(loop.vertices[i], loop.vertices[(i + 1) % n]);
    return s / 2;
}

namespace {

int quadrant(Pt const& d) {
    int sx = sgn(d.x), sy = sgn(d.y);
    if (sx > 0 && sy == 0) return 0;
    if (sx > 0 && sy > 0) return 1;
    if (sx == 0 && sy > 0) return 2;
    if (sx < 0 && sy > 0) return 3;
    if (sx < 0 && sy == 0) return 4;
    if (sx < 0 && sy < 0) return 5;
    if (sx == 0 && sy < 0) return 6;
    return 7;
}

} // namespace

bool dir_less(Pt const& d1, Pt const& d2) {
    int q1 = quadrant(d1), q2 = quadrant(d2);
    if (q1 != q2) return q1 < q2;
    return sgn(cross(d1, d2)) > 0;
}

int winding_by_raycast(Polyline const& loop, Pt const& p) {
    size_t n = loop.vertices.size();
    for (size_t i = 0; i < loop.seg_count(); i++)
        if (on_segment(p, loop.seg_a(i), loop.seg_b(i)))
            throw PointOnLoop("raycast point lies on the loop");
    // pick a slope missing every vertex direction line
    Pt d;
    for (Int s = 1;; s++) {
        d = Pt{Rat(1), Rat(s)};
        bool bad = false;
        for (size_t i = 0; i < n && !bad; i++) {
            Pt v = loop.vertices[i] - p;
            if ((v.x != 0 || v.y != 0) && cross(d, v) == 0) bad = true;
        }
        if (!bad) break;
    }
    int w = 0;
    for (size_t i = 0; i < loop.seg_count(); i++) {
        Pt u = loop.seg_a(i) - p, v = loop.seg_b(i) - p;
        int su = sgn(cross(d, u)), sv = sgn(cross(d, v));
        if (su == sv) continue;
        // forward-ray test: intersection parameter along d must be positive
        Rat denom = cross(d, v - u);
        Rat t = cross(u, v - u) / denom;
        if (t > 0) w += (sv - su) / 2;
    }
    return w;
}

} // namespace cfh
