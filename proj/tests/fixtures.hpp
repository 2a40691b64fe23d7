#ifndef CFH_TESTS_FIXTURES_HPP
#define CFH_TESTS_FIXTURES_HPP

#include "cfh/surface.hpp"

namespace cfh::fx {

inline Pt rp(long long n1, long long d1, long long n2, long long d2) {
    return {Rat(n1, d1), Rat(n2, d2)};
}

// straight (1,0) vs (0,1) lines on the torus, one crossing
inline CurvePair torus1() {
    CurvePair p;
    p.surface = SurfaceKind::Torus;
    p.alpha = {{rp(0, 1, 1, 2)}, {1, 0}};
    p.beta = {{rp(1, 2, 0, 1)}, {0, 1}};
    return p;
}

// straight (1,0) vs (1,2) lines, two crossings, no lunes
inline CurvePair torus2() {
    CurvePair p;
    p.surface = SurfaceKind::Torus;
    p.alpha = {{rp(0, 1, 1, 4)}, {1, 0}};
    p.beta = {{rp(0, 1, 0, 1)}, {1, 2}};
    return p;
}

// wiggly (0,1) curve crossing the horizontal line three times
inline CurvePair torus3() {
    CurvePair p;
    p.surface = SurfaceKind::Torus;
    p.alpha = {{rp(0, 1, 1, 2)}, {1, 0}};
    p.beta = {{rp(1, 2, 1, 8), rp(1, 2, 5, 8), rp(3, 4, 5, 8), rp(3, 4, 3, 8),
               rp(7, 8, 3, 8), rp(7, 8, 9, 8)},
              {0, 1}};
    return p;
}

// contractible square beta on the torus
inline CurvePair torus4() {
    CurvePair p;
    p.surface = SurfaceKind::Torus;
    p.alpha = {{rp(0, 1, 1, 2)}, {1, 0}};
    p.beta = {{rp(1, 4, 1, 4), rp(3, 4, 1, 4), rp(3, 4, 3, 4), rp(1, 4, 3, 4)}, {0, 0}};
    return p;
}

// two offset squares in the plane, lens overlap
inline CurvePair plane() {
    CurvePair p;
    p.surface = SurfaceKind::Plane;
    p.alpha = {{rp(0, 1, 0, 1), rp(4, 1, 0, 1), rp(4, 1, 4, 1), rp(0, 1, 4, 1)}, {0, 0}};
    p.beta = {{rp(2, 1, 2, 1), rp(6, 1, 2, 1), rp(6, 1, 6, 1), rp(2, 1, 6, 1)}, {0, 0}};
    return p;
}

// same squares declared on the sphere
inline CurvePair sphere() {
    CurvePair p = plane();
    p.surface = SurfaceKind::Sphere;
    return p;
}

// annulus: horizontal line vs a parallel wave crossing it twice
inline CurvePair annulus() {
    CurvePair p;
    p.surface = SurfaceKind::Annulus;
    p.alpha = {{rp(0, 1, 1, 2)}, {1, 0}};
    p.beta = {{rp(0, 1, 1, 4), rp(1, 2, 3, 4)}, {1, 0}};
    return p;
}

// nested bigons: parallel (1,0) curves, four crossings, hearts present
inline CurvePair nest() {
    CurvePair p;
    p.surface = SurfaceKind::Torus;
    p.alpha = {{rp(0, 1, 1, 2)}, {1, 0}};
    p.beta = {{rp(1, 8, 1, 8), rp(1, 8, 7, 8), rp(7, 8, 7, 8), rp(7, 8, 3, 8),
               rp(3, 4, 3, 8), rp(3, 4, 5, 8), rp(1, 2, 5, 8), rp(1, 2, 1, 8)},
              {1, 0}};
    return p;
}

// every torus fixture, for the corollary/property sweeps
inline std::vector<CurvePair> all_fixtures() {
    return {torus1(), torus2(), torus3(), torus4(), plane(), annulus(), nest()};
}

} // namespace cfh::fx

#endif // CFH_TESTS_FIXTURES_HPP
