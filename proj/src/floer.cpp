#include "cfh/floer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cfh/errors.hpp"
#include "cfh/linalg.hpp"

namespace cfh {

namespace {

// nonzero lattice wrap pairs (k,l) with k*deck(alpha) = l*deck(beta),
// generators of the solution set
std::vector<std::pair<long long, long long>> homogeneous_wraps(PairCtx const& ctx) {
    IVec da = ctx.pair.alpha.deck, db = ctx.pair.beta.deck;
    bool za = da.zero(), zb = db.zero();
    if (za && zb) return {{1, 0}, {0, 1}};
    if (za) return {{1, 0}};
    if (zb) return {{0, 1}};
    if (da.u * db.v - da.v * db.u != 0) return {};
    long long g0 = std::gcd(std::abs(da.u), std::abs(da.v));
    long long pu = da.u / g0, pv = da.v / g0;
    long long b = pu != 0 ? db.u / pu : db.v / pv;
    long long g = std::gcd(std::abs(g0), std::abs(b));
    return {{b / g, g0 / g}};
}

char classify_heart(Lune const& l1, Lune const& l2, int y) {
    auto ia1 = arc_intervals(l1.trace, 0), ia2 = arc_intervals(l2.trace, 0);
    auto ib1 = arc_intervals(l1.trace, 1), ib2 = arc_intervals(l2.trace, 1);
    auto pa1 = arc_points(l1.trace, 0), pa2 = arc_points(l2.trace, 0);
    auto pb1 = arc_points(l1.trace, 1), pb2 = arc_points(l2.trace, 1);
    auto meet_only_mid = [&](std::set<int> const& i1, std::set<int> const& i2,
                             std::set<int> const& p1, std::set<int> const& p2) {
        for (int j : i1)
            if (i2.count(j)) return false;
        std::set<int> common;
        for (int p : p1)
            if (p2.count(p)) common.insert(p);
        return common == std::set<int>{y};
    };
    auto strict_subset = [](std::set<int> const& s, std::set<int> const& t) {
        return s.size() < t.size() &&
               std::includes(t.begin(), t.end(), s.begin(), s.end());
    };
    bool alpha_mid = meet_only_mid(ia1, ia2, pa1, pa2);
    bool beta_mid = meet_only_mid(ib1, ib2, pb1, pb2);
    int hits = 0;
    char type = '?';
    if (alpha_mid && strict_subset(ib2, ib1)) hits++, type = 'a';
    if (alpha_mid && strict_subset(ib1, ib2)) hits++, type = 'b';
    if (beta_mid && strict_subset(ia2, ia1)) hits++, type = 'c';
    if (beta_mid && strict_subset(ia1, ia2)) hits++, type = 'd';
    return hits == 1 ? type : '?';
}

} // namespace

FloerComplex build_complex(PairCtx const& ctx, Coeff coeff) {
    FloerComplex cx;
    cx.ctx = &ctx;
    cx.coeff = coeff;
    cx.n = ctx.num();
    cx.flags = ctx.pair.flags;
    cx.d.assign(cx.n, std::vector<Int>(cx.n, 0));
    for (auto const& [k, ls] : all_lunes(ctx)) {
        Int v = 0;
        for (auto const& l : ls) v += coeff == Coeff::Z ? Int(l.sign) : Int(1);
        if (coeff == Coeff::F2) v %= 2;
        cx.d[k.first][k.second] = v;
    }
    cx.mod2_grade.resize(cx.n);
    for (int i = 0; i < cx.n; i++) cx.mod2_grade[i] = ctx.pts[i].eps == 1 ? 0 : 1;

    cx.component.assign(cx.n, -1);
    int nc = 0;
    for (int i = 0; i < cx.n; i++) {
        if (cx.component[i] >= 0) continue;
        cx.component[i] = nc;
        for (int j = i + 1; j < cx.n; j++)
            if (cx.component[j] < 0 && same_component(ctx, i, j)) cx.component[j] = nc;
        nc++;
    }

    cx.rel_grade.assign(cx.n, 0);
    cx.graded = true;
    auto homog = homogeneous_wraps(ctx);
    for (int c = 0; c < nc && cx.graded; c++) {
        int rep = -1;
        for (int i = 0; i < cx.n && rep < 0; i++)
            if (cx.component[i] == c) rep = i;
        for (auto const& [k, l] : homog)
            if (maslov(connecting_trace(ctx, rep, rep, k, l)) != 0) cx.graded = false;
        if (!cx.graded) break;
        long long lo = 0;
        for (int i = 0; i < cx.n; i++) {
            if (cx.component[i] != c || i == rep) continue;
            auto s = same_component(ctx, rep, i);
            cx.rel_grade[i] = -maslov(connecting_trace(ctx, rep, i, s->first, s->second));
            lo = std::min(lo, cx.rel_grade[i]);
        }
        for (int i = 0; i < cx.n; i++)
            if (cx.component[i] == c) cx.rel_grade[i] -= lo;
    }
    if (!cx.graded) cx.rel_grade.assign(cx.n, 0);
    return cx;
}

SquareVerdict d_squared(FloerComplex const& cx) {
    SquareVerdict v;
    v.m.assign(cx.n, std::vector<Int>(cx.n, 0));
    for (int x = 0; x < cx.n; x++)
        for (int z = 0; z < cx.n; z++) {
            Int s = 0;
            for (int y = 0; y < cx.n; y++) s += cx.d[x][y] * cx.d[y][z];
            if (cx.coeff == Coeff::F2) s = ((s % 2) + 2) % 2;
            v.m[x][z] = s;
            if (s != 0) v.zero = false;
        }
    if (!v.zero && cx.flags.all())
        throw TheoremViolated("boundary does not square to zero under the full hypotheses");
    return v;
}

std::vector<BrokenHeart> enumerate_hearts(PairCtx const& ctx, int x, int z) {
    std::vector<BrokenHeart> out;
    for (int y = 0; y < ctx.num(); y++) {
        if (y == x || y == z) continue;
        auto l1s = find_lunes(ctx, x, y);
        if (l1s.empty()) continue;
        auto l2s = find_lunes(ctx, y, z);
        for (auto const& l1 : l1s)
            for (auto const& l2 : l2s) {
                BrokenHeart h;
                h.x = x;
                h.y = y;
                h.z = z;
                h.lune1 = l1;
                h.lune2 = l2;
                h.type = classify_heart(l1, l2, y);
                if (h.type == '?' && ctx.pair.flags.all())
                    throw ClassificationFailed("broken heart fits none or several alternatives");
                h.catenated = catenate(l1.trace, l2.trace);
                if (maslov(h.catenated) != 2)
                    throw InvariantViolated("catenated heart trace has index != 2");
                out.push_back(std::move(h));
            }
    }
    return out;
}

HeartReport heart_pairing_check(PairCtx const& ctx) {
    HeartReport r;
    for (int x = 0; x < ctx.num(); x++)
        for (int z = 0; z < ctx.num(); z++) {
            auto hs = enumerate_hearts(ctx, x, z);
            if (hs.empty()) continue;
            r.total += (int)hs.size();
            bool ok = hs.size() % 2 == 0;
            // group by the catenated trace and balance the paired types
            std::vector<bool> used(hs.size(), false);
            std::ostringstream line;
            line << "(" << x << "->" << z << "): " << hs.size() << " hearts";
            for (size_t i = 0; i < hs.size(); i++) {
                if (used[i]) continue;
                int cnt[5] = {0, 0, 0, 0, 0};
                for (size_t j = i; j < hs.size(); j++)
                    if (!used[j] && hs[j].catenated.same_as(hs[i].catenated)) {
                        used[j] = true;
                        char t = hs[j].type;
                        cnt[t == '?' ? 4 : t - 'a']++;
                    }
                if (cnt[4] != 0 || cnt[0] != cnt[2] || cnt[1] != cnt[3]) ok = false;
                line << " [a=" << cnt[0] << " b=" << cnt[1] << " c=" << cnt[2]
                     << " d=" << cnt[3] << "]";
            }
            if (!ok) {
                line << " UNPAIRED";
                r.holds = false;
            }
            r.lines.push_back(line.str());
        }
    if (!r.holds && ctx.pair.flags.all())
        throw InvariantViolated("broken hearts do not pair up");
    return r;
}

HomologyResult homology(FloerComplex const& cx) {
    if (!d_squared(cx).zero) throw NotAComplex("boundary does not square to zero");
    HomologyResult h;
    int rank = cx.coeff == Coeff::F2 ? f2_rank(cx.d) : q_rank(cx.d);
    h.dim = cx.n - 2 * rank;
    if (cx.coeff == Coeff::Z)
        for (auto const& f : smith_factors(cx.d))
            if (f > 1) h.torsion.push_back(f);
    // the boundary strictly swaps the two crossing-sign grades
    std::array<std::vector<std::vector<Int>>, 2> rows;
    std::array<int, 2> cnt{0, 0};
    for (int i = 0; i < cx.n; i++) {
        rows[cx.mod2_grade[i]].push_back(cx.d[i]);
        cnt[cx.mod2_grade[i]]++;
    }
    std::array<int, 2> rk{0, 0};
    for (int g = 0; g < 2; g++)
        rk[g] = cx.coeff == Coeff::F2 ? f2_rank(rows[g]) : q_rank(rows[g]);
    for (int g = 0; g < 2; g++) h.dim_by_grade[g] = cnt[g] - rk[g] - rk[1 - g];
    return h;
}

long long euler_characteristic(FloerComplex const& cx) {
    auto h = homology(cx);
    return h.dim_by_grade[0] - h.dim_by_grade[1];
}

long long geo_oracle(PairCtx const& ctx) {
    if (ctx.pair.surface != SurfaceKind::Torus || !ctx.pair.flags.noncontractible_alpha ||
        !ctx.pair.flags.noncontractible_beta)
        throw Unsupported("minimal intersection oracle needs homologically nonzero torus curves");
    IVec a = ctx.pair.alpha.deck, b = ctx.pair.beta.deck;
    return std::abs(a.u * b.v - a.v * b.u);
}

ActionReport action_order_check(PairCtx const& ctx) {
    ActionReport r;
    int n = ctx.num();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto const& [k, ls] : all_lunes(ctx)) {
        reach[k.first][k.second] = true;
        for (auto const& l : ls)
            if (!(l.area > 0)) r.positive_areas = false;
    }
    for (int t = 0; t < n; t++)
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                if (reach[i][t] && reach[t][j]) reach[i][j] = true;
    for (int i = 0; i < n; i++)
        if (reach[i][i]) r.acyclic = false;
    r.holds = r.positive_areas && r.acyclic;
    if (!r.holds && ctx.pair.flags.all())
        throw InvariantViolated("lune order is not a strict partial order");
    return r;
}

} // namespace cfh
