#ifndef CFH_RAT_HPP
#define CFH_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cfh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(Rat const& r) { return r.sign(); }
inline int sgn(Int const& r) { return r.sign(); }

// "n" or "p/q"
Rat parse_rat(std::string const& s);
std::string rat_str(Rat const& r);

// floor of a rational as arbitrary-precision integer
Int rat_floor(Rat const& r);

struct Pt {
    Rat x, y;
    bool operator==(Pt const& o) const { return x == o.x && y == o.y; }
    bool operator!=(Pt const& o) const { return !(*this == o); }
};

inline Pt operator+(Pt const& a, Pt const& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt operator-(Pt const& a, Pt const& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator*(Rat const& s, Pt const& a) { return {s * a.x, s * a.y}; }
inline Rat cross(Pt const& a, Pt const& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(Pt const& a, Pt const& b) { return a.x * b.x + a.y * b.y; }

struct PtLess {
    bool operator()(Pt const& a, Pt const& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

std::string pt_str(Pt const& p);

} // namespace cfh

#endif // CFH_RAT_HPP
