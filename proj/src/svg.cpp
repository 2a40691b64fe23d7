#include "cfh/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cfh/lune.hpp"

namespace cfh {

namespace {

struct Frame {
    double sc, ox, oy;
    double px(Pt const& p) const { return ox + sc * p.x.convert_to<double>(); }
    double py(Pt const& p) const { return oy - sc * p.y.convert_to<double>(); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string xy(Frame const& fr, Pt const& p) {
    return num(fr.px(p)) + "," + num(fr.py(p));
}

void curve_paths(std::ostringstream& out, PairCtx const& ctx, int c, Frame const& fr,
                 std::string const& color) {
    Curve const& cv = ctx.curve(c);
    for (auto const& g : ctx.lattice_range(1)) {
        std::ostringstream d;
        for (size_t i = 0; i < cv.vertices.size(); i++)
            d << (i == 0 ? "M " : "L ") << xy(fr, cv.vertices[i] + g.vec()) << " ";
        Pt close = cv.vertices[0] + cv.deck.vec() + g.vec();
        if (cv.deck.zero())
            d << "Z";
        else
            d << "L " << xy(fr, close);
        out << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\"/>\n";
    }
}

} // namespace

std::string render_svg(PairCtx const& ctx, bool show_lunes) {
    // world box: both curves with one deck run, plus the fundamental domain
    Rat minx = 0, maxx = 1, miny = 0, maxy = 1;
    for (int c = 0; c < 2; c++) {
        Curve const& cv = ctx.curve(c);
        for (auto const& v : cv.vertices) {
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
        Pt close = cv.vertices[0] + cv.deck.vec();
        minx = std::min(minx, close.x);
        maxx = std::max(maxx, close.x);
        miny = std::min(miny, close.y);
        maxy = std::max(maxy, close.y);
    }
    double w = (maxx - minx).convert_to<double>(), h = (maxy - miny).convert_to<double>();
    double margin = 40, span = 520;
    double sc = span / std::max(std::max(w, h), 1e-9);
    Frame fr{sc, margin - sc * minx.convert_to<double>(),
             margin + sc * maxy.convert_to<double>()};
    double vw = sc * w + 2 * margin, vh = sc * h + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(vw)
        << "\" height=\"" << num(vh) << "\" viewBox=\"0 0 " << num(vw) << " " << num(vh)
        << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(vw) << "\" height=\"" << num(vh)
        << "\" fill=\"white\"/>\n";
    if (ctx.pair.surface == SurfaceKind::Torus || ctx.pair.surface == SurfaceKind::Annulus) {
        // fundamental domain outline
        Pt a{0, 0}, b{1, 1};
        out << "<rect x=\"" << num(fr.px(a)) << "\" y=\"" << num(fr.py(b)) << "\" width=\""
            << num(sc) << "\" height=\"" << num(sc)
            << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    }

    if (show_lunes) {
        char const* palette[4] = {"#ffd54f", "#81c784", "#4fc3f7", "#f48fb1"};
        int li = 0;
        for (auto const& [k, ls] : all_lunes(ctx))
            for (auto const& l : ls) {
                auto const& gm = l.trace.geom();
                std::string color = palette[li++ % 4];
                for (size_t f = 0; f < gm.arr.faces.size(); f++) {
                    int wv = gm.w[f] + l.trace.shift;
                    if (wv <= 0 || gm.arr.faces[f].unbounded) continue;
                    std::ostringstream d;
                    Rat cxs = 0, cys = 0;
                    int cnt = 0;
                    for (auto const& cyc : gm.arr.faces[f].cycles) {
                        for (size_t i = 0; i < cyc.size(); i++) {
                            Pt v = gm.arr.verts[gm.arr.he_src(cyc[i])];
                            d << (i == 0 ? "M " : "L ") << xy(fr, v) << " ";
                            cxs += v.x;
                            cys += v.y;
                            cnt++;
                        }
                        d << "Z ";
                    }
                    out << "<path d=\"" << d.str() << "\" fill=\"" << color
                        << "\" fill-opacity=\"0.45\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
                    Pt cen{cxs / cnt, cys / cnt};
                    out << "<text x=\"" << num(fr.px(cen)) << "\" y=\"" << num(fr.py(cen))
                        << "\" font-size=\"11\" fill=\"#555555\">" << wv << "</text>\n";
                }
            }
    }

    curve_paths(out, ctx, 0, fr, "blue");
    curve_paths(out, ctx, 1, fr, "red");

    for (auto const& p : ctx.pts) {
        out << "<circle cx=\"" << num(fr.px(p.pos)) << "\" cy=\"" << num(fr.py(p.pos))
            << "\" r=\"3\" fill=\"black\"/>\n";
        out << "<text x=\"" << num(fr.px(p.pos) + 5) << "\" y=\"" << num(fr.py(p.pos) - 5)
            << "\" font-size=\"12\" fill=\"black\">x" << p.id << "("
            << (p.eps > 0 ? "+" : "-") << ")</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace cfh
