#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cfh/errors.hpp"
#include "cfh/reduction.hpp"
#include "fixtures.hpp"

using namespace cfh;

namespace {

ConnectionComplex two_gen(Int pivot, bool f2 = false) {
    ConnectionComplex cc;
    cc.f2 = f2;
    cc.names = {"p", "q"};
    cc.nu.assign(2, std::vector<Int>(2, 0));
    cc.nu[1][0] = pivot; // dq = pivot * p
    return cc;
}

// random graded complex: elementary pairs plus free generators, conjugated by
// index-preserving unipotent base changes
ConnectionComplex random_cc(std::mt19937& rng, bool f2) {
    int npairs = 1 + (int)(rng() % 3), nfree = (int)(rng() % 3);
    int n = 2 * npairs + nfree;
    std::vector<long long> mu;
    IMat m(n, std::vector<Int>(n, 0)); // m[p][q]: coefficient of p in dq
    int idx = 0;
    for (int i = 0; i < npairs; i++) {
        long long g = (long long)(rng() % 4);
        mu.push_back(g + 1);
        mu.push_back(g);
        m[idx + 1][idx] = 1;
        idx += 2;
    }
    for (int i = 0; i < nfree; i++) mu.push_back((long long)(rng() % 5));
    for (int rep = 0; rep < 12; rep++) {
        int i = (int)(rng() % n), j = (int)(rng() % n);
        if (i == j || mu[i] != mu[j]) continue;
        Int c = Int(1 + (int)(rng() % 2)) * (rng() % 2 ? 1 : -1);
        for (int k = 0; k < n; k++) m[i][k] += c * m[j][k];
        for (int k = 0; k < n; k++) m[k][j] -= c * m[k][i];
    }
    ConnectionComplex cc;
    cc.f2 = f2;
    for (int i = 0; i < n; i++) cc.names.push_back("g" + std::to_string(i));
    cc.nu.assign(n, std::vector<Int>(n, 0));
    for (int q = 0; q < n; q++)
        for (int p = 0; p < n; p++) cc.nu[q][p] = m[p][q];
    cc.mu = mu;
    return cc;
}

std::map<long long, int> nonzero(std::map<long long, int> const& m) {
    std::map<long long, int> out;
    for (auto const& [g, d] : m)
        if (d != 0) out[g] = d;
    return out;
}

bool unit_entry(ConnectionComplex const& cc, int q, int p) {
    Int v = cc.nu[q][p];
    return cc.f2 ? v % 2 != 0 : (v == 1 || v == -1);
}

} // namespace

TEST_CASE("connection verification") {
    for (auto coeff : {Coeff::F2, Coeff::Z}) {
        auto cc = export_connection(build_complex(analyze(fx::torus3()), coeff));
        CHECK(verify_connection(cc).ok);
        CHECK(cc.mu.has_value());
        CHECK(cc.order.has_value());
    }

    ConnectionComplex bad;
    bad.names = {"a", "b", "c"};
    bad.nu.assign(3, std::vector<Int>(3, 0));
    bad.nu[1][0] = 1; // db = a
    bad.nu[2][1] = 1; // dc = b
    auto rep = verify_connection(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == "square (a,c)");

    CHECK(verify_connection(ConnectionComplex{}).ok);
}

TEST_CASE("reducing the elementary pair empties the complex") {
    auto cc = two_gen(1);
    auto r = reduce(cc, 0, 1);
    CHECK(r.n() == 0);
    CHECK(homology_dims(r).total == 0);
    CHECK(homology_dims(cc).total == 0);
}

TEST_CASE("pivot preconditions") {
    CHECK_THROWS_AS(reduce(two_gen(2), 0, 1), PivotNotUnit);
    CHECK_THROWS_AS(reduce(two_gen(0), 0, 1), PivotNotUnit);
    CHECK_THROWS_AS(reduce(two_gen(2, true), 0, 1), PivotNotUnit);
    CHECK(reduce(two_gen(-1), 0, 1).n() == 0);
    CHECK(reduce(two_gen(3, true), 0, 1).n() == 0);

    ConnectionComplex chain;
    chain.names = {"a", "b", "c"};
    chain.nu.assign(3, std::vector<Int>(3, 0));
    chain.nu[2][0] = 1; // dc = a
    std::vector<std::vector<bool>> le(3, std::vector<bool>(3, false));
    le[0][1] = le[1][2] = le[0][2] = true;
    for (int i = 0; i < 3; i++) le[i][i] = true;
    chain.order = le;
    CHECK_THROWS_AS(reduce(chain, 0, 2), PivotNotAdjacent);
    CHECK_THROWS_AS(reduce(chain, 2, 0), PivotNotAdjacent);
}

TEST_CASE("reduction of the wiggle complex") {
    auto cc = export_connection(build_complex(analyze(fx::torus3()), Coeff::Z));
    auto dims = homology_dims(cc);
    CHECK(dims.total == 1);
    CHECK(dims.by_mu == std::map<long long, int>{{0, 0}, {1, 1}});

    // pivot at the lune from x1 into x2
    auto r = reduce(cc, 1, 0);
    CHECK(r.names == std::vector<std::string>{"x2"});
    CHECK(r.nu[0][0] == 0);
    CHECK(homology_dims(r).total == 1);
    CHECK(verify_connection(r).ok);

    // the other lune enters with sign -1; the pivot is normalized
    auto r2 = reduce(cc, 1, 2);
    CHECK(homology_dims(r2).total == 1);
    CHECK(verify_connection(r2).ok);
}

TEST_CASE("chain maps and homotopy") {
    auto cm0 = chain_maps(two_gen(1), 0, 1);
    CHECK(cm0.ok);
    CHECK(cm0.t[1][0] == 1);

    auto cc = export_connection(build_complex(analyze(fx::torus3()), Coeff::Z));
    auto cm = chain_maps(cc, 1, 0);
    REQUIRE(cm.ok);
    // the survivor maps to itself plus the cancelled top generator
    CHECK(cm.phi[2][0] == 1);
    CHECK(cm.phi[0][0] == 1);
}

TEST_CASE("zero differential keeps every generator") {
    ConnectionComplex cc;
    for (int i = 0; i < 5; i++) cc.names.push_back("g" + std::to_string(i));
    cc.nu.assign(5, std::vector<Int>(5, 0));
    CHECK(homology_dims(cc).total == 5);
}

TEST_CASE("homology_dims refuses non-complexes") {
    ConnectionComplex bad;
    bad.names = {"a", "b", "c"};
    bad.nu.assign(3, std::vector<Int>(3, 0));
    bad.nu[1][0] = 1;
    bad.nu[2][1] = 1;
    CHECK_THROWS_AS(homology_dims(bad), NotAComplex);
}

TEST_CASE("random reductions preserve homology and the axioms") {
    std::mt19937 rng(20260823);
    int reduced = 0;
    for (int s = 0; s < 100; s++) {
        bool f2 = s % 2 == 0;
        auto cc = random_cc(rng, f2);
        REQUIRE(verify_connection(cc).ok);
        auto dims = homology_dims(cc);
        for (int p = 0; p < cc.n(); p++)
            for (int q = 0; q < cc.n(); q++) {
                if (!unit_entry(cc, q, p)) continue;
                auto r = reduce(cc, p, q);
                CHECK(verify_connection(r).ok);
                auto rd = homology_dims(r);
                CHECK(rd.total == dims.total);
                CHECK(nonzero(rd.by_mu) == nonzero(dims.by_mu));
                CHECK(chain_maps(cc, p, q).ok);
                reduced++;
            }
    }
    CHECK(reduced > 100);
}

TEST_CASE("the reduced order stays a poset") {
    std::mt19937 rng(7);
    int checked = 0;
    for (int s = 0; s < 60; s++) {
        auto cc = random_cc(rng, s % 2 == 0);
        // order generated by the differential entries
        int n = cc.n();
        std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
        for (int q = 0; q < n; q++)
            for (int p = 0; p < n; p++)
                if (cc.nu[q][p] != 0) le[p][q] = true;
        for (int i = 0; i < n; i++) le[i][i] = true;
        for (int t = 0; t < n; t++)
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    if (le[i][t] && le[t][j]) le[i][j] = true;
        cc.order = le;
        REQUIRE(verify_connection(cc).ok);
        for (int p = 0; p < n; p++)
            for (int q = 0; q < n; q++) {
                if (!unit_entry(cc, q, p)) continue;
                ConnectionComplex r;
                try {
                    r = reduce(cc, p, q);
                } catch (PivotNotAdjacent const&) {
                    continue;
                }
                CHECK(verify_connection(r).ok);
                checked++;
            }
    }
    CHECK(checked > 30);
}
