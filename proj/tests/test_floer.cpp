#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfh/errors.hpp"
#include "cfh/floer.hpp"
#include "fixtures.hpp"

using namespace cfh;

TEST_CASE("boundary matrices of the basic fixtures") {
    auto c1 = analyze(fx::torus1());
    auto x1 = build_complex(c1, Coeff::F2);
    CHECK(x1.n == 1);
    CHECK(x1.d[0][0] == 0);

    auto c3 = analyze(fx::torus3());
    auto f = build_complex(c3, Coeff::F2);
    CHECK(f.d[0][1] == 1);
    CHECK(f.d[2][1] == 1);
    CHECK(f.d[1][0] == 0);
    CHECK(f.d[1][2] == 0);
    CHECK(f.d[0][2] == 0);

    auto z = build_complex(c3, Coeff::Z);
    CHECK(z.d[0][1] == 1);
    CHECK(z.d[2][1] == -1);
}

TEST_CASE("the boundary squares to zero except for the contractible square") {
    for (auto const& pr : fx::all_fixtures())
        for (auto coeff : {Coeff::F2, Coeff::Z}) {
            auto ctx = analyze(pr);
            auto cx = build_complex(ctx, coeff);
            bool torus_contractible = ctx.pair.surface == SurfaceKind::Torus &&
                                      !ctx.pair.flags.noncontractible_beta;
            CHECK(d_squared(cx).zero == !torus_contractible);
        }

    auto c4 = analyze(fx::torus4());
    auto cx4 = build_complex(c4, Coeff::F2);
    auto v = d_squared(cx4);
    CHECK_FALSE(v.zero);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++) CHECK(v.m[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("square of the boundary counts hearts mod two") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        auto v = d_squared(build_complex(ctx, Coeff::F2));
        for (int x = 0; x < ctx.num(); x++)
            for (int z = 0; z < ctx.num(); z++) {
                int hearts = (int)enumerate_hearts(ctx, x, z).size();
                CHECK(Int(hearts % 2) == v.m[x][z]);
            }
    }
}

TEST_CASE("nested bigons: hearts classify and pair up") {
    auto c = analyze(fx::nest());
    auto hs = enumerate_hearts(c, 0, 2);
    REQUIRE(hs.size() == 4);
    int na = 0, nc = 0, other = 0;
    for (auto const& h : hs) {
        CHECK(maslov(h.catenated) == 2);
        if (h.type == 'a') na++;
        else if (h.type == 'c') nc++;
        else other++;
    }
    CHECK(na == 2);
    CHECK(nc == 2);
    CHECK(other == 0);

    auto r = heart_pairing_check(c);
    CHECK(r.holds);
    CHECK(r.total == 4);
}

TEST_CASE("heart pairing fails honestly in the degenerate regimes") {
    CHECK_FALSE(heart_pairing_check(analyze(fx::torus4())).holds);
    for (auto const& name : {std::string("torus1"), std::string("torus3")}) {
        auto ctx = analyze(name == "torus1" ? fx::torus1() : fx::torus3());
        CHECK(heart_pairing_check(ctx).holds);
        CHECK(heart_pairing_check(ctx).total == 0);
    }
}

TEST_CASE("homology dimensions") {
    CHECK(homology(build_complex(analyze(fx::torus1()), Coeff::F2)).dim == 1);
    CHECK(homology(build_complex(analyze(fx::torus2()), Coeff::F2)).dim == 2);
    CHECK(homology(build_complex(analyze(fx::torus3()), Coeff::F2)).dim == 1);
    CHECK(homology(build_complex(analyze(fx::plane()), Coeff::F2)).dim == 0);
    CHECK(homology(build_complex(analyze(fx::nest()), Coeff::F2)).dim == 2);

    auto hz = homology(build_complex(analyze(fx::torus3()), Coeff::Z));
    CHECK(hz.dim == 1);
    CHECK(hz.torsion.empty());
    auto hp = homology(build_complex(analyze(fx::plane()), Coeff::Z));
    CHECK(hp.dim == 0);
    CHECK(hp.torsion.empty());

    CHECK_THROWS_AS(homology(build_complex(analyze(fx::torus4()), Coeff::F2)), NotAComplex);
}

TEST_CASE("euler characteristic equals the algebraic intersection number") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        auto cx = build_complex(ctx, Coeff::F2);
        if (!d_squared(cx).zero) continue;
        CHECK(euler_characteristic(cx) == ctx.alg());
    }
    auto cs = analyze(fx::sphere());
    CHECK(euler_characteristic(build_complex(cs, Coeff::F2)) == 0);
}

TEST_CASE("gradings") {
    for (auto const& pr : fx::all_fixtures()) {
        auto ctx = analyze(pr);
        auto cx = build_complex(ctx, Coeff::F2);
        for (int x = 0; x < cx.n; x++)
            for (int y = 0; y < cx.n; y++) {
                if (cx.d[x][y] == 0) continue;
                CHECK(cx.component[x] == cx.component[y]);
                CHECK(cx.mod2_grade[x] != cx.mod2_grade[y]);
                CHECK(ctx.pts[x].eps == -ctx.pts[y].eps);
                if (cx.graded) CHECK(cx.rel_grade[x] - cx.rel_grade[y] == 1);
            }
        if (cx.graded)
            for (int x = 0; x < cx.n; x++)
                for (int y = 0; y < cx.n; y++)
                    if (cx.component[x] == cx.component[y]) {
                        long long diff = cx.rel_grade[x] - cx.rel_grade[y];
                        CHECK((diff % 2 + 2) % 2 == (cx.mod2_grade[x] ^ cx.mod2_grade[y]));
                    }
    }
    auto c3 = analyze(fx::torus3());
    auto f3 = build_complex(c3, Coeff::F2);
    CHECK(f3.graded);
    CHECK(f3.component == std::vector<int>{0, 0, 0});
    CHECK(f3.rel_grade[0] == 1);
    CHECK(f3.rel_grade[1] == 0);
    CHECK(f3.rel_grade[2] == 1);

    // parallel isotopic curves still grade: the full-loop difference has
    // index zero, and the nested lune digraph fits grades 2,1,0,1
    auto fn = build_complex(analyze(fx::nest()), Coeff::F2);
    CHECK(fn.graded);
    CHECK(fn.rel_grade == std::vector<long long>{2, 1, 0, 1});
}

TEST_CASE("minimal intersection oracle") {
    CHECK(geo_oracle(analyze(fx::torus1())) == 1);
    CHECK(geo_oracle(analyze(fx::torus2())) == 2);
    CHECK(geo_oracle(analyze(fx::torus3())) == 1);
    CHECK(geo_oracle(analyze(fx::nest())) == 0);
    CHECK_THROWS_AS(geo_oracle(analyze(fx::plane())), Unsupported);
    CHECK_THROWS_AS(geo_oracle(analyze(fx::torus4())), Unsupported);
}

TEST_CASE("homology dimension matches the geometric count under full hypotheses") {
    for (auto const& pr : {fx::torus1(), fx::torus2(), fx::torus3()}) {
        auto ctx = analyze(pr);
        REQUIRE(ctx.pair.flags.all());
        CHECK(homology(build_complex(ctx, Coeff::F2)).dim == geo_oracle(ctx));
        CHECK(homology(build_complex(ctx, Coeff::Z)).dim == geo_oracle(ctx));
    }
}

TEST_CASE("crossing counts versus lunes") {
    // minimal position iff no lunes, on the straight fixtures
    for (auto const& pr : {fx::torus1(), fx::torus2()}) {
        auto ctx = analyze(pr);
        CHECK(ctx.num() == geo_oracle(ctx));
        CHECK(all_lunes(ctx).empty());
    }
    auto c3 = analyze(fx::torus3());
    CHECK(c3.num() > geo_oracle(c3));
    CHECK_FALSE(all_lunes(c3).empty());
}

TEST_CASE("action order report") {
    CHECK(action_order_check(analyze(fx::torus3())).holds);
    CHECK(action_order_check(analyze(fx::torus1())).holds);
    CHECK_FALSE(action_order_check(analyze(fx::torus4())).acyclic);
    CHECK_FALSE(action_order_check(analyze(fx::plane())).acyclic);
}
