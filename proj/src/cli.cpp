#include "cfh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>

#include "cfh/errors.hpp"
#include "cfh/floer.hpp"
#include "cfh/io.hpp"
#include "cfh/isotopy.hpp"
#include "cfh/lune.hpp"
#include "cfh/svg.hpp"

namespace cfh {

namespace {

ojson flags_json(Flags const& f) {
    ojson j;
    j["noncontractible_alpha"] = f.noncontractible_alpha;
    j["noncontractible_beta"] = f.noncontractible_beta;
    j["nonisotopic"] = f.nonisotopic;
    return j;
}

ojson report(std::string const& command, ojson const& flags, ojson const& payload,
             std::vector<std::string> const& warnings) {
    ojson j;
    j["schema"] = "cfh-report-1";
    j["command"] = command;
    j["flags"] = flags;
    j["payload"] = payload;
    j["warnings"] = warnings;
    return j;
}

void emit(std::ostream& out, ojson const& j) { out << j.dump(2) << "\n"; }

Coeff parse_coeff(std::string const& s) {
    if (s == "f2") return Coeff::F2;
    if (s == "z") return Coeff::Z;
    throw InputError("coeff must be f2 or z");
}

std::pair<int, int> parse_pair_opt(std::string const& s) {
    auto c = s.find(',');
    if (c == std::string::npos) throw InputError("expected I,J");
    try {
        return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
    } catch (std::exception const&) {
        throw InputError("expected integer pair I,J");
    }
}

ojson matrix_json(std::vector<std::vector<Int>> const& m) {
    ojson j = ojson::array();
    for (auto const& row : m) {
        ojson r = ojson::array();
        for (auto const& v : row) r.push_back(v.convert_to<long long>());
        j.push_back(r);
    }
    return j;
}

ojson lune_json(Lune const& l) {
    ojson j;
    j["sign"] = l.sign;
    j["primitive"] = l.primitive;
    j["area"] = rat_str(l.area);
    j["alpha_forward"] = l.trace.arc_alpha.forward;
    j["beta_forward"] = l.trace.arc_beta.forward;
    j["shift"] = l.trace.shift;
    return j;
}

int cmd_validate(std::string const& file, std::ostream& out) {
    auto pair = load_pair(file);
    auto errs = validate_pair(pair);
    ojson payload;
    payload["ok"] = errs.empty();
    payload["errors"] = errs;
    payload["surface"] = surface_name(pair.surface);
    if (errs.empty()) payload["num"] = (int)intersections(pair).size();
    emit(out, report("validate", flags_json(pair.flags), payload, {}));
    return errs.empty() ? 0 : 1;
}

int cmd_homology(std::string const& file, std::string const& coeff, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto cx = build_complex(ctx, parse_coeff(coeff));
    std::vector<std::string> warnings;
    ojson payload;
    payload["coeff"] = coeff;
    ojson gens = ojson::array();
    for (int i = 0; i < cx.n; i++) {
        ojson g;
        g["name"] = "x" + std::to_string(i);
        g["eps"] = ctx.pts[i].eps;
        g["component"] = cx.component[i];
        if (cx.graded) g["grade"] = cx.rel_grade[i];
        gens.push_back(g);
    }
    payload["generators"] = gens;
    payload["differential"] = matrix_json(cx.d);
    auto sq = d_squared(cx);
    payload["d_squared_zero"] = sq.zero;
    bool ident = !sq.zero;
    for (int i = 0; i < cx.n && ident; i++)
        for (int j = 0; j < cx.n && ident; j++)
            if (sq.m[i][j] != (i == j ? 1 : 0)) ident = false;
    payload["d_squared_identity"] = ident;
    if (sq.zero) {
        auto h = homology(cx);
        ojson hj;
        hj["dim"] = h.dim;
        ojson tor = ojson::array();
        for (auto const& t : h.torsion) tor.push_back(t.convert_to<long long>());
        hj["torsion"] = tor;
        hj["dim_by_grade"] = ojson::array({h.dim_by_grade[0], h.dim_by_grade[1]});
        payload["homology"] = hj;
        payload["euler"] = euler_characteristic(cx);
    } else {
        payload["homology"] = nullptr;
        warnings.push_back("homology refused: boundary does not square to zero");
    }
    try {
        payload["geo"] = geo_oracle(ctx);
    } catch (Unsupported const&) {
        payload["geo"] = nullptr;
    }
    emit(out, report("homology", flags_json(ctx.pair.flags), payload, warnings));
    return 0;
}

int cmd_intersections(std::string const& file, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    ojson payload;
    payload["num"] = ctx.num();
    payload["alg"] = ctx.alg();
    ojson pts = ojson::array();
    for (auto const& p : ctx.pts) {
        ojson j;
        j["id"] = p.id;
        j["pos"] = ojson::array({rat_str(p.pos.x), rat_str(p.pos.y)});
        j["eps"] = p.eps;
        j["along_alpha"] = rat_str(p.along_alpha);
        j["along_beta"] = rat_str(p.along_beta);
        pts.push_back(j);
    }
    payload["points"] = pts;
    emit(out, report("intersections", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_lunes(std::string const& file, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    ojson payload;
    ojson pairs = ojson::array();
    int total = 0;
    for (auto const& [k, ls] : all_lunes(ctx)) {
        ojson j;
        j["from"] = k.first;
        j["to"] = k.second;
        ojson arr = ojson::array();
        for (auto const& l : ls) arr.push_back(lune_json(l));
        j["lunes"] = arr;
        pairs.push_back(j);
        total += (int)ls.size();
    }
    payload["pairs"] = pairs;
    payload["total"] = total;
    emit(out, report("lunes", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_maslov(std::string const& file, int from, int to, std::string const& arcs,
               std::string const& wraps, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    if (from < 0 || to < 0 || from >= ctx.num() || to >= ctx.num())
        throw InputError("crossing id out of range");
    auto c = arcs.find(',');
    if (c == std::string::npos) throw InputError("expected --arcs fwd|bwd,fwd|bwd");
    auto dir = [](std::string const& s) {
        if (s == "fwd") return true;
        if (s == "bwd") return false;
        throw InputError("arc direction must be fwd or bwd");
    };
    ArcSpec sa{dir(arcs.substr(0, c)), 0}, sb{dir(arcs.substr(c + 1)), 0};
    if (!wraps.empty()) {
        auto [k, l] = parse_pair_opt(wraps);
        if (k < 0 || l < 0) throw InputError("wraps must be nonnegative");
        sa.extra_wraps = k;
        sb.extra_wraps = l;
    }
    auto t = trace_from_arcs(ctx, from, to, sa, sb);
    if (!t) throw InputError("the chosen arcs do not share an endpoint lift");
    ojson payload;
    payload["from"] = from;
    payload["to"] = to;
    int mx = m_at(*t, t->lift_x), my = m_at(*t, t->lift_y);
    payload["m_x"] = mx;
    payload["m_y"] = my;
    payload["maslov"] = maslov(*t);
    payload["arc_condition"] = satisfies_arc_condition(*t);
    if (satisfies_arc_condition(*t)) payload["planar_formula"] = maslov_plane_form(*t);
    payload["area"] = rat_str(trace_area(*t));
    auto sx = sector_values(*t, t->lift_x), sy = sector_values(*t, t->lift_y);
    payload["sectors_x"] = ojson::array({sx[0], sx[1], sx[2], sx[3]});
    payload["sectors_y"] = ojson::array({sy[0], sy[1], sy[2], sy[3]});
    emit(out, report("maslov", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_complex(std::string const& file, std::string const& coeff, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto cc = export_connection(build_complex(ctx, parse_coeff(coeff)));
    emit(out, report("complex", flags_json(ctx.pair.flags), complex_to_json(cc), {}));
    return 0;
}

int cmd_hearts(std::string const& file, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto hr = heart_pairing_check(ctx);
    ojson payload;
    payload["holds"] = hr.holds;
    payload["total"] = hr.total;
    payload["lines"] = hr.lines;
    std::vector<std::string> warnings;
    if (!hr.holds) warnings.push_back("hearts do not pair up; hypotheses not fully satisfied");
    emit(out, report("hearts", flags_json(ctx.pair.flags), payload, warnings));
    return 0;
}

int cmd_reduce(std::string const& file, std::string const& pivot, std::ostream& out) {
    auto cc = load_complex(file);
    auto [p, q] = parse_pair_opt(pivot);
    auto before = verify_connection(cc);
    auto red = reduce(cc, p, q);
    ojson payload;
    payload["input_ok"] = before.ok;
    payload["input_violations"] = before.violations;
    payload["pivot"] = ojson::array({p, q});
    payload["reduced"] = complex_to_json(red);
    auto dims = homology_dims(red);
    ojson dj;
    dj["total"] = dims.total;
    ojson by = ojson::array();
    for (auto const& [g, d] : dims.by_mu) by.push_back(ojson::array({g, d}));
    dj["by_mu"] = by;
    payload["homology"] = dj;
    emit(out, report("reduce", ojson::object(), payload, {}));
    return 0;
}

int cmd_cancel(std::string const& file, std::string const& pivot, std::string const& output,
               std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto [x, y] = parse_pair_opt(pivot);
    if (x < 0 || y < 0 || x >= ctx.num() || y >= ctx.num())
        throw InputError("crossing id out of range");
    Lune lune;
    bool found = false;
    for (auto const& l : find_lunes(ctx, x, y))
        if (l.primitive && !found) {
            lune = l;
            found = true;
        }
    if (!found) throw InputError("no primitive lune between the chosen crossings");
    auto np = cancel_pair(ctx, lune);
    save_text(output, pair_to_json(np).dump(2) + "\n");
    ojson payload;
    payload["cancelled"] = ojson::array({x, y});
    payload["num_before"] = ctx.num();
    payload["num_after"] = ctx.num() - 2;
    payload["output"] = output;
    emit(out, report("isotopy-cancel", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_create(std::string const& file, std::string const& anchor, std::string const& target,
               std::string const& output, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto np = create_pair(ctx, parse_rat(anchor), parse_rat(target));
    save_text(output, pair_to_json(np).dump(2) + "\n");
    ojson payload;
    payload["anchor"] = anchor;
    payload["target"] = target;
    payload["num_before"] = ctx.num();
    payload["num_after"] = ctx.num() + 2;
    payload["output"] = output;
    emit(out, report("isotopy-create", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_render(std::string const& file, std::string const& output, bool lunes,
               std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    auto svg = render_svg(ctx, lunes);
    save_text(output, svg);
    ojson payload;
    payload["output"] = output;
    payload["bytes"] = svg.size();
    payload["lunes"] = lunes;
    emit(out, report("render", flags_json(ctx.pair.flags), payload, {}));
    return 0;
}

int cmd_check(std::string const& file, std::ostream& out) {
    auto ctx = analyze(load_pair(file));
    bool full = ctx.pair.flags.all();
    ojson suites = ojson::array();
    bool all_ok = true;
    auto add = [&](std::string const& name, bool ok, std::string const& note) {
        ojson j;
        j["suite"] = name;
        j["ok"] = ok;
        j["note"] = note;
        suites.push_back(j);
        all_ok = all_ok && ok;
    };

    // index formula: trace formula equals the planar formula on arc traces
    int checked = 0;
    bool formula_ok = true;
    for (int x = 0; x < ctx.num(); x++)
        for (int y = 0; y < ctx.num(); y++) {
            if (x == y) continue;
            for (auto const& t : all_arc_traces(ctx, x, y))
                if (satisfies_arc_condition(t)) {
                    checked++;
                    if (maslov(t) != maslov_plane_form(t)) formula_ok = false;
                }
        }
    add("trace_formula", formula_ok, std::to_string(checked) + " arc traces");

    // translation invariance of the endpoint index sum
    bool cancel_ok = true;
    int cancels = 0;
    if (ctx.pair.surface == SurfaceKind::Annulus || ctx.pair.surface == SurfaceKind::Torus) {
        for (int x = 0; x < ctx.num() && cancel_ok; x++)
            for (int y = 0; y < ctx.num() && cancel_ok; y++) {
                if (x == y) continue;
                auto ts = all_arc_traces(ctx, x, y);
                if (ts.empty()) continue;
                for (auto const& g : ctx.lattice_range(2)) {
                    if (g.zero()) continue;
                    cancels++;
                    if (cancellation_defect(ts[0], g) != 0) cancel_ok = false;
                }
            }
    }
    add("cancellation", cancel_ok, std::to_string(cancels) + " translates");

    try {
        auto pr = primitive_existence_check(ctx);
        add("primitive_lunes", pr.holds, std::to_string(pr.total) + " lunes");
    } catch (InvariantViolated const& e) {
        add("primitive_lunes", false, e.what());
    }

    auto cx2 = build_complex(ctx, Coeff::F2);
    auto sq = d_squared(cx2);
    add("d_squared", sq.zero || !full, sq.zero ? "zero" : "nonzero (hypotheses not satisfied)");

    auto hr = heart_pairing_check(ctx);
    add("heart_pairing", hr.holds || !full,
        std::to_string(hr.total) + " hearts" + (hr.holds ? "" : ", unpaired"));

    auto ar = action_order_check(ctx);
    add("action_order", ar.holds || !full, ar.holds ? "strict order" : "not acyclic");

    auto nr = nolune_check(ctx);
    add("nolune", nr.holds || !full, std::to_string(nr.checked) + " triples");

    if (sq.zero) {
        bool euler_ok = euler_characteristic(cx2) == ctx.alg();
        add("euler", euler_ok, "euler vs signed count");
        bool conn_ok = true, red_ok = true;
        for (auto coeff : {Coeff::F2, Coeff::Z}) {
            auto cc = export_connection(build_complex(ctx, coeff));
            if (!verify_connection(cc).ok) conn_ok = false;
            auto dims = homology_dims(cc);
            for (int p = 0; p < cc.n(); p++)
                for (int q = 0; q < cc.n(); q++) {
                    Int v = cc.nu[q][p];
                    bool unit = cc.f2 ? v % 2 != 0 : (v == 1 || v == -1);
                    if (!unit) continue;
                    ConnectionComplex rc = cc;
                    rc.order.reset();
                    auto red = reduce(rc, p, q);
                    if (homology_dims(red).total != dims.total) red_ok = false;
                    if (!chain_maps(rc, p, q).ok) red_ok = false;
                }
        }
        add("connection_export", conn_ok, "both coefficient rings");
        add("reduction_invariance", red_ok, "all unit pivots");
    } else {
        add("connection_export", true, "skipped: no chain complex");
        add("reduction_invariance", true, "skipped: no chain complex");
    }

    try {
        long long geo = geo_oracle(ctx);
        bool no_lunes = all_lunes(ctx).empty();
        add("lune_corollaries", (geo == ctx.num()) == no_lunes, "minimal position vs lunes");
    } catch (Unsupported const&) {
        add("lune_corollaries", true, "skipped: oracle unavailable");
    }

    ojson payload;
    payload["ok"] = all_ok;
    payload["suites"] = suites;
    emit(out, report("check", flags_json(ctx.pair.flags), payload, {}));
    return all_ok ? 0 : 2;
}

} // namespace

int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial Floer homology for transverse curve pairs"};
    app.require_subcommand(1);

    std::string file, coeff = "f2", output, arcs = "fwd,fwd", wraps, pivot, anchor, target;
    int from = 0, to = 0;
    bool lunes_flag = false;

    auto add_file = [&](CLI::App* sc) {
        sc->add_option("file", file, "input file")->required();
    };
    auto* sc_validate = app.add_subcommand("validate", "parse and validate a curve pair");
    add_file(sc_validate);
    auto* sc_homology = app.add_subcommand("homology", "Floer complex and homology");
    add_file(sc_homology);
    sc_homology->add_option("--coeff", coeff, "f2 or z");
    auto* sc_inter = app.add_subcommand("intersections", "crossing inventory");
    add_file(sc_inter);
    auto* sc_lunes = app.add_subcommand("lunes", "lune inventory");
    add_file(sc_lunes);
    auto* sc_maslov = app.add_subcommand("maslov", "index of an arc trace");
    add_file(sc_maslov);
    sc_maslov->add_option("--from", from, "start crossing id")->required();
    sc_maslov->add_option("--to", to, "end crossing id")->required();
    sc_maslov->add_option("--arcs", arcs, "fwd|bwd,fwd|bwd");
    sc_maslov->add_option("--wraps", wraps, "extra wraps k,l");
    auto* sc_complex = app.add_subcommand("complex", "export the connection complex");
    add_file(sc_complex);
    sc_complex->add_option("--coeff", coeff, "f2 or z");
    auto* sc_hearts = app.add_subcommand("hearts", "broken-heart pairing report");
    add_file(sc_hearts);
    auto* sc_reduce = app.add_subcommand("reduce", "reduce a connection complex at a pivot");
    add_file(sc_reduce);
    sc_reduce->add_option("--pair", pivot, "pivot indices P,Q")->required();
    auto* sc_cancel = app.add_subcommand("isotopy-cancel", "cancel a crossing pair");
    add_file(sc_cancel);
    sc_cancel->add_option("--pair", pivot, "lune endpoints I,J")->required();
    sc_cancel->add_option("-o,--output", output, "output pair file")->required();
    auto* sc_create = app.add_subcommand("isotopy-create", "create a crossing pair");
    add_file(sc_create);
    sc_create->add_option("--anchor", anchor, "beta parameter")->required();
    sc_create->add_option("--target", target, "alpha parameter")->required();
    sc_create->add_option("-o,--output", output, "output pair file")->required();
    auto* sc_render = app.add_subcommand("render", "draw the pair as SVG");
    add_file(sc_render);
    sc_render->add_option("-o,--output", output, "output SVG file")->required();
    sc_render->add_flag("--lunes", lunes_flag, "shade lune regions");
    auto* sc_check = app.add_subcommand("check", "run every invariant suite");
    add_file(sc_check);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::ParseError const& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_validate->parsed()) return cmd_validate(file, out);
        if (sc_homology->parsed()) return cmd_homology(file, coeff, out);
        if (sc_inter->parsed()) return cmd_intersections(file, out);
        if (sc_lunes->parsed()) return cmd_lunes(file, out);
        if (sc_maslov->parsed()) return cmd_maslov(file, from, to, arcs, wraps, out);
        if (sc_complex->parsed()) return cmd_complex(file, coeff, out);
        if (sc_hearts->parsed()) return cmd_hearts(file, out);
        if (sc_reduce->parsed()) return cmd_reduce(file, pivot, out);
        if (sc_cancel->parsed()) return cmd_cancel(file, pivot, output, out);
        if (sc_create->parsed()) return cmd_create(file, anchor, target, output, out);
        if (sc_render->parsed()) return cmd_render(file, output, lunes_flag, out);
        if (sc_check->parsed()) return cmd_check(file, out);
    } catch (InputError const& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (InternalError const& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace cfh
