#ifndef CFH_IO_HPP
#define CFH_IO_HPP

#include <json.hpp>
#include <string>

#include "cfh/reduction.hpp"
#include "cfh/surface.hpp"

namespace cfh {

using ojson = nlohmann::ordered_json;

// curve-pair file: {"surface": name, "alpha"/"beta": {"vertices": [[rat,rat]...],
// "deck": [int,int]}}; rationals are strings "n" or "p/q"
ojson pair_to_json(CurvePair const& pair);
CurvePair pair_from_json(ojson const& j); // throws ParseError

// complex file: {"generators": [names], "nu": [[q,p,value]...],
// "mu": [ints], "order": [[p,q]...], "coeff": "z"|"f2"}; mu/order optional
ojson complex_to_json(ConnectionComplex const& cc);
ConnectionComplex complex_from_json(ojson const& j); // throws ParseError

CurvePair load_pair(std::string const& path);          // throws IoError/ParseError
ConnectionComplex load_complex(std::string const& path);
void save_text(std::string const& path, std::string const& text); // throws IoError

} // namespace cfh

#endif // CFH_IO_HPP
