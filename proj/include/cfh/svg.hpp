#ifndef CFH_SVG_HPP
#define CFH_SVG_HPP

#include <string>

#include "cfh/surface.hpp"

namespace cfh {

// deterministic figure: fundamental domain, alpha blue, beta red, crossings
// labeled with their signs; optionally the lune regions shaded with their
// winding numbers
std::string render_svg(PairCtx const& ctx, bool show_lunes);

} // namespace cfh

#endif // CFH_SVG_HPP
