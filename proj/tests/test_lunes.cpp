#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cfh/errors.hpp"
#include "cfh/lune.hpp"
#include "fixtures.hpp"

using namespace cfh;

namespace {

bool has(std::vector<std::string> const& v, std::string const& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

int count_lunes(PairCtx const& ctx) {
    int n = 0;
    for (auto const& [k, ls] : all_lunes(ctx)) n += (int)ls.size();
    return n;
}

} // namespace

TEST_CASE("wiggle fixture lunes") {
    auto c = analyze(fx::torus3());
    auto l01 = find_lunes(c, 0, 1);
    REQUIRE(l01.size() == 1);
    CHECK(l01[0].sign == 1);
    CHECK(l01[0].area == Rat(1, 32));
    CHECK(l01[0].primitive);

    auto l21 = find_lunes(c, 2, 1);
    REQUIRE(l21.size() == 1);
    CHECK(l21[0].sign == -1);
    CHECK(l21[0].area == Rat(1, 64));
    CHECK(l21[0].primitive);

    CHECK(find_lunes(c, 1, 0).empty());
    CHECK(find_lunes(c, 1, 2).empty());
    CHECK(find_lunes(c, 0, 2).empty());
    CHECK(find_lunes(c, 2, 0).empty());
    CHECK(count_lunes(c) == 2);
}

TEST_CASE("verdicts carry the failed conditions") {
    auto c = analyze(fx::torus3());
    auto good = trace_from_arcs(c, 0, 1, {true, 0}, {true, 0});
    REQUIRE(good.has_value());
    CHECK(is_combinatorial_lune(*good).yes);

    auto rev = reverse_trace(*good);
    auto v = is_combinatorial_lune(rev);
    CHECK_FALSE(v.yes);
    CHECK(has(v.violations, "I"));
    CHECK(has(v.violations, "II"));

    auto cp = analyze(fx::plane());
    auto revlens = trace_from_arcs(cp, 1, 0, {false, 0}, {true, 0});
    REQUIRE(revlens.has_value());
    auto vl = is_combinatorial_lune(*revlens);
    CHECK_FALSE(vl.yes);
    CHECK(has(vl.violations, "I"));
    CHECK(has(vl.violations, "II"));

    auto wrap = trace_from_arcs(analyze(fx::annulus()), 0, 0, {true, 1}, {true, 1});
    REQUIRE(wrap.has_value());
    CHECK(has(is_combinatorial_lune(*wrap).violations, "arc"));
}

TEST_CASE("single straight crossings admit no lunes") {
    CHECK(count_lunes(analyze(fx::torus1())) == 0);
    CHECK(count_lunes(analyze(fx::torus2())) == 0);
}

TEST_CASE("plane squares: the lens and the two return crescents") {
    auto c = analyze(fx::plane());
    auto all = all_lunes(c);
    REQUIRE(all.count({0, 1}) == 1);
    REQUIRE(all[{0, 1}].size() == 1);
    CHECK(all[{0, 1}][0].area == Rat(4));
    CHECK(all[{0, 1}][0].primitive);

    // the long-way-around bigons between the lens corners are bounded lunes
    REQUIRE(all.count({1, 0}) == 1);
    REQUIRE(all[{1, 0}].size() == 2);
    CHECK(all[{1, 0}][0].area == Rat(12));
    CHECK(all[{1, 0}][1].area == Rat(12));
    CHECK(count_lunes(c) == 3);
}

TEST_CASE("contractible square on the torus gives one lune each way") {
    auto c = analyze(fx::torus4());
    auto all = all_lunes(c);
    CHECK(count_lunes(c) == 2);
    int fwd = (int)(all.count({0, 1}) ? all[{0, 1}].size() : 0);
    int bwd = (int)(all.count({1, 0}) ? all[{1, 0}].size() : 0);
    CHECK(fwd == 1);
    CHECK(bwd == 1);
}

TEST_CASE("sphere squares gain the complementary lunes") {
    auto c = analyze(fx::sphere());
    auto all = all_lunes(c);
    int xy = (int)(all.count({0, 1}) ? all[{0, 1}].size() : 0);
    int yx = (int)(all.count({1, 0}) ? all[{1, 0}].size() : 0);
    // the lens, both crescents, and the bigon through the far point
    CHECK(xy == 2);
    CHECK(yx == 2);
    int shifted = 0;
    for (auto const& [k, ls] : all)
        for (auto const& l : ls) {
            CHECK(maslov(l.trace) == 1);
            if (l.trace.shift != 0) shifted++;
        }
    CHECK(shifted == 1);
}

TEST_CASE("parallel annulus curves bound a bigon on each side") {
    auto c = analyze(fx::annulus());
    auto ls = find_lunes(c, 0, 1);
    REQUIRE(ls.size() == 2);
    std::set<int> signs{ls[0].sign, ls[1].sign};
    CHECK(signs == std::set<int>{-1, 1});
    CHECK(find_lunes(c, 1, 0).empty());
}

TEST_CASE("nested bigons") {
    auto c = analyze(fx::nest());
    auto all = all_lunes(c);
    auto n = [&](int x, int y) {
        return all.count({x, y}) ? (int)all[{x, y}].size() : 0;
    };
    CHECK(n(0, 3) == 2);
    CHECK(n(0, 1) == 2);
    CHECK(n(1, 2) == 1);
    CHECK(n(3, 2) == 1);
    CHECK(count_lunes(c) == 6);

    // the big outer lune passes over the inner crossings
    bool saw_nonprimitive = false;
    for (auto const& l : all[{0, 3}])
        if (!l.primitive) saw_nonprimitive = true;
    CHECK(saw_nonprimitive);
}

TEST_CASE("lune endpoints have opposite crossing signs and positive area") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        for (auto const& [k, ls] : all_lunes(ctx))
            for (auto const& l : ls) {
                CHECK(ctx.pts[k.first].eps == -ctx.pts[k.second].eps);
                CHECK(l.area > 0);
                CHECK(maslov(l.trace) == 1);
                CHECK(l.sign == arc_dir(l.trace, 0));
            }
    }
}

TEST_CASE("at most one lune per pair under the full hypotheses") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        if (!ctx.pair.flags.all()) continue;
        for (auto const& [k, ls] : all_lunes(ctx)) CHECK(ls.size() == 1);
    }
}

TEST_CASE("the lune relation is acyclic under the full hypotheses") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        if (!ctx.pair.flags.all()) continue;
        int m = ctx.num();
        // reachability closure over lune edges must stay irreflexive
        std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
        for (auto const& [k, ls] : all_lunes(ctx)) reach[k.first][k.second] = true;
        for (int t = 0; t < m; t++)
            for (int i = 0; i < m; i++)
                for (int j = 0; j < m; j++)
                    if (reach[i][t] && reach[t][j]) reach[i][j] = true;
        for (int i = 0; i < m; i++) CHECK_FALSE(reach[i][i]);
    }
}

TEST_CASE("a primitive lune exists whenever any lune does") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        auto r = primitive_existence_check(ctx);
        CHECK(r.holds);
        if (r.total > 0) CHECK_FALSE(r.primitive_pairs.empty());
    }
    auto cs = analyze(fx::sphere());
    CHECK(primitive_existence_check(cs).holds);
}
