#include "cfh/rat.hpp"
#include "cfh/errors.hpp"

namespace cfh {

Rat parse_rat(std::string const& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (std::exception const&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rat_str(Rat const& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(Rat const& r) {
    Int num = numerator(r), den = denominator(r);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

std::string pt_str(Pt const& p) {
    return "(" + rat_str(p.x) + "," + rat_str(p.y) + ")";
}

} // namespace cfh
