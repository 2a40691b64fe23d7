#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfh/errors.hpp"
#include "cfh/trace.hpp"
#include "fixtures.hpp"

using namespace cfh;

namespace {

// every zero-wrap trace of every ordered crossing pair, plus single-wrap
// self-traces where they close up
std::vector<Trace> trace_zoo(PairCtx const& ctx) {
    std::vector<Trace> out;
    for (int x = 0; x < ctx.num(); x++)
        for (int y = 0; y < ctx.num(); y++) {
            if (x != y)
                for (auto& t : all_arc_traces(ctx, x, y)) out.push_back(std::move(t));
            else
                for (bool fa : {true, false})
                    for (bool fb : {true, false})
                        if (auto t = trace_from_arcs(ctx, x, y, {fa, 1}, {fb, 1}))
                            out.push_back(std::move(*t));
        }
    return out;
}

} // namespace

TEST_CASE("mismatched arc lifts yield no trace") {
    auto c1 = analyze(fx::torus1());
    CHECK_FALSE(trace_from_arcs(c1, 0, 0, {true, 1}, {true, 1}).has_value());
}

TEST_CASE("wiggle fixture: the two thin traces") {
    auto c = analyze(fx::torus3());

    auto up = trace_from_arcs(c, 0, 1, {true, 0}, {true, 0});
    REQUIRE(up.has_value());
    CHECK(satisfies_arc_condition(*up));
    CHECK(m_at(*up, up->lift_x) == 1);
    CHECK(m_at(*up, up->lift_y) == 1);
    CHECK(maslov(*up) == 1);
    CHECK(maslov_plane_form(*up) == 1);
    CHECK(trace_area(*up) == Rat(1, 32));
    int pos = 0, zero = 0;
    for (size_t f = 0; f < up->geom().arr.faces.size(); f++) {
        int w = up->geom().w[f];
        CHECK(w >= 0);
        if (up->geom().arr.faces[f].unbounded) continue;
        (w > 0 ? pos : zero)++;
        if (w > 0) CHECK(up->geom().arr.faces[f].area == Rat(1, 32));
    }
    CHECK(pos == 1);

    auto low = trace_from_arcs(c, 2, 1, {false, 0}, {false, 0});
    REQUIRE(low.has_value());
    CHECK(satisfies_arc_condition(*low));
    CHECK(maslov(*low) == 1);
    CHECK(maslov_plane_form(*low) == 1);
    CHECK(trace_area(*low) == Rat(1, 64));
    CHECK(arc_dir(*low, 0) == -1);
    CHECK(arc_dir(*low, 1) == -1);

    auto sv = sector_values(*low, low->lift_x);
    int ones = 0;
    for (int v : sv) {
        CHECK((v == 0 || v == 1));
        ones += v;
    }
    CHECK(ones == 1);

    // the same endpoints with forward arcs bound the region the other way
    auto fwd = trace_from_arcs(c, 1, 2, {true, 0}, {true, 0});
    REQUIRE(fwd.has_value());
    CHECK(trace_area(*fwd) == Rat(-1, 64));
    CHECK(maslov(*fwd) == -1);
}

TEST_CASE("plane lens trace") {
    auto c = analyze(fx::plane());
    auto lens = trace_from_arcs(c, 0, 1, {true, 0}, {false, 0});
    REQUIRE(lens.has_value());
    CHECK(satisfies_arc_condition(*lens));
    CHECK(maslov(*lens) == 1);
    CHECK(maslov_plane_form(*lens) == 1);
    CHECK(trace_area(*lens) == Rat(4));
    CHECK(arc_dir(*lens, 0) == 1);
    CHECK(arc_dir(*lens, 1) == -1);
    CHECK(arc_points(*lens, 0) == std::set<int>{0, 1});

    // trivial lattice: every arc combination closes up
    CHECK(all_arc_traces(c, 0, 1).size() == 4);
    CHECK(all_arc_traces(c, 1, 0).size() == 4);
}

TEST_CASE("declared sphere shifts the measures by a constant two-chain") {
    auto c = analyze(fx::sphere());
    auto lens = trace_from_arcs(c, 0, 1, {true, 0}, {false, 0});
    REQUIRE(lens.has_value());
    Trace sh = *lens;
    sh.shift = 1;
    CHECK(maslov(sh) == maslov(*lens) + 4);
    CHECK(maslov_plane_form(sh) == maslov_plane_form(*lens) + 4);
    CHECK(m_at(sh, sh.lift_x) == m_at(*lens, lens->lift_x) + 4);
    auto sv = sector_values(sh, sh.lift_x);
    auto sv0 = sector_values(*lens, lens->lift_x);
    for (int i = 0; i < 4; i++) CHECK(sv[i] == sv0[i] + 1);
}

TEST_CASE("annulus full-wrap self-trace") {
    auto c = analyze(fx::annulus());
    auto t = trace_from_arcs(c, 0, 0, {true, 1}, {true, 1});
    REQUIRE(t.has_value());
    CHECK(t->lift_y == t->lift_x + fx::rp(1, 1, 0, 1));
    CHECK(maslov(*t) == 0);
    CHECK_FALSE(satisfies_arc_condition(*t));

    auto w = connecting_trace(c, 0, 0, 1, 1);
    CHECK(w.same_as(*t));
}

TEST_CASE("connecting traces close at the prescribed wrap counts") {
    auto c3 = analyze(fx::torus3());
    auto t = connecting_trace(c3, 0, 1, 0, 0);
    CHECK(t.lift_y == c3.pts[1].lift);
    auto b = boundary(t);
    CHECK(b.nu[0].size() == 1);
    CHECK(b.nu[1].size() == 1);

    auto cn = analyze(fx::nest());
    for (int x = 0; x < cn.num(); x++)
        for (int y = 0; y < cn.num(); y++) {
            auto s = same_component(cn, x, y);
            REQUIRE(s.has_value());
            auto w = connecting_trace(cn, x, y, s->first, s->second);
            CHECK(w.xid == x);
            CHECK(w.yid == y);
            CHECK((maslov(w) % 2 + 2) % 2 ==
                  ((cn.pts[x].eps != cn.pts[y].eps) ? 1 : 0));
        }
}

TEST_CASE("catenation adds chains and measures") {
    auto c = analyze(fx::nest());
    int joined = 0;
    auto zoo = trace_zoo(c);
    for (auto const& t1 : zoo)
        for (auto const& t2 : zoo) {
            if (t1.yid != t2.xid) continue;
            auto r = catenate(t1, t2);
            CHECK(r.xid == t1.xid);
            CHECK(r.yid == t2.yid);
            CHECK(maslov(r) == maslov(t1) + maslov(t2));
            joined++;
        }
    CHECK(joined > 0);

    auto bad1 = zoo.front();
    for (auto const& t : zoo)
        if (t.xid != bad1.yid) {
            CHECK_THROWS_AS(catenate(bad1, t), EndpointMismatch);
            break;
        }
}

TEST_CASE("catenating a trace with its reverse gives the constant trace") {
    auto c = analyze(fx::torus3());
    auto t = trace_from_arcs(c, 0, 1, {true, 0}, {true, 0});
    REQUIRE(t.has_value());
    auto r = catenate(*t, reverse_trace(*t));
    CHECK(r.cov.empty());
    CHECK(maslov(r) == 0);
    CHECK(r.same_as(constant_trace(c, 0)));
    CHECK_FALSE(satisfies_arc_condition(r));
}

TEST_CASE("reversal negates the measures") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        for (auto const& t : trace_zoo(ctx)) {
            auto r = reverse_trace(t);
            CHECK(maslov(r) == -maslov(t));
            CHECK(trace_area(r) == -trace_area(t));
            auto br = boundary(r);
            auto bt = boundary(t);
            for (int c = 0; c < 2; c++)
                for (auto const& [j, v] : bt.nu[c]) CHECK(br.nu[c].at(j) == -v);
        }
    }
}

TEST_CASE("trace formula agrees with the planar formula on every arc trace") {
    int checked = 0;
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        for (auto const& t : trace_zoo(ctx))
            if (satisfies_arc_condition(t)) {
                CHECK(maslov(t) == maslov_plane_form(t));
                checked++;
            }
    }
    CHECK(checked > 20);
}

TEST_CASE("translated endpoint measures cancel") {
    for (auto const& pr : fx::all_fixtures()) {
        if (pr.surface != SurfaceKind::Annulus && pr.surface != SurfaceKind::Torus)
            continue;
        auto ctx = analyze(pr);
        for (auto const& t : trace_zoo(ctx))
            for (auto const& g : ctx.lattice_range(2)) {
                if (g.zero()) continue;
                CHECK(cancellation_defect(t, g) == 0);
            }
    }
    auto cp = analyze(fx::plane());
    auto t = trace_from_arcs(cp, 0, 1, {true, 0}, {false, 0});
    CHECK_THROWS_AS(cancellation_defect(*t, {1, 0}), InputError);
}

TEST_CASE("boundary matches the covered intervals of each arc") {
    auto c = analyze(fx::torus3());
    auto t = trace_from_arcs(c, 0, 1, {true, 0}, {true, 0});
    REQUIRE(t.has_value());
    auto b = boundary(*t);
    int ix = c.idx_on[0][0], iy = c.idx_on[0][1];
    CHECK(b.nu[0].count(ix));
    CHECK(b.nu[0].at(ix) == 1);
    CHECK((int)b.nu[0].size() == (iy - ix + c.num()) % c.num());
    CHECK(arc_intervals(*t, 0) == std::set<int>{ix});
}

TEST_CASE("arc directions at the endpoints") {
    auto c = analyze(fx::torus3());
    auto low = trace_from_arcs(c, 2, 1, {false, 0}, {false, 0});
    REQUIRE(low.has_value());
    CHECK(arc_out_dir(*low, 0) == fx::rp(-1, 1, 0, 1));
    CHECK(arc_in_dir(*low, 0) == fx::rp(-1, 1, 0, 1));
    CHECK(cross(arc_out_dir(*low, 1), c.pts[2].dir_beta) == 0);
    CHECK(dot(arc_out_dir(*low, 1), c.pts[2].dir_beta) < 0);
}

TEST_CASE("trace geometry is deterministic") {
    auto c = analyze(fx::nest());
    auto z1 = trace_zoo(c);
    auto z2 = trace_zoo(c);
    REQUIRE(z1.size() == z2.size());
    for (size_t i = 0; i < z1.size(); i++) {
        CHECK(z1[i].same_as(z2[i]));
        CHECK(maslov(z1[i]) == maslov(z2[i]));
    }
}
