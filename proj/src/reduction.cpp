#include "cfh/reduction.hpp"

#include <algorithm>

#include "cfh/errors.hpp"

namespace cfh {

namespace {

Int norm(ConnectionComplex const& cc, Int const& v) {
    return cc.f2 ? ((v % 2) + 2) % 2 : v;
}

bool entry(ConnectionComplex const& cc, int q, int p) {
    return norm(cc, cc.nu[q][p]) != 0;
}

// matrix of the differential: column j holds the coefficients of d(gen j)
IMat d_matrix(ConnectionComplex const& cc) {
    int n = cc.n();
    IMat m(n, std::vector<Int>(n, 0));
    for (int q = 0; q < n; q++)
        for (int p = 0; p < n; p++) m[p][q] = cc.nu[q][p];
    return m;
}

void close_order(std::vector<std::vector<bool>>& le) {
    int n = (int)le.size();
    for (int i = 0; i < n; i++) le[i][i] = true;
    for (int t = 0; t < n; t++)
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++)
                if (le[i][t] && le[t][j]) le[i][j] = true;
}

// normalizes the pivot to +1 (negating generator qbar if needed) and checks
// unit/adjacency preconditions
ConnectionComplex pivot_ready(ConnectionComplex cc, int pbar, int qbar) {
    int n = cc.n();
    if (pbar < 0 || qbar < 0 || pbar >= n || qbar >= n || pbar == qbar)
        throw InputError("pivot indices out of range");
    if (cc.order) {
        if (!cc.leq(pbar, qbar)) throw PivotNotAdjacent("pivot pair is not ordered");
        for (int r = 0; r < n; r++)
            if (r != pbar && r != qbar && cc.leq(pbar, r) && cc.leq(r, qbar))
                throw PivotNotAdjacent("a generator lies strictly between the pivots");
    }
    if (cc.f2) {
        if (cc.nu[qbar][pbar] % 2 == 0) throw PivotNotUnit("pivot entry is even");
        return cc;
    }
    Int v = cc.nu[qbar][pbar];
    if (v == -1) {
        for (int i = 0; i < n; i++) {
            cc.nu[qbar][i] = -cc.nu[qbar][i];
            cc.nu[i][qbar] = -cc.nu[i][qbar];
        }
        v = cc.nu[qbar][pbar];
    }
    if (v != 1) throw PivotNotUnit("pivot entry is not a unit");
    return cc;
}

} // namespace

ConnectionReport verify_connection(ConnectionComplex const& cc) {
    ConnectionReport rep;
    int n = cc.n();
    auto flag = [&](std::string const& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    for (int r = 0; r < n; r++)
        for (int p = 0; p < n; p++) {
            Int s = 0;
            for (int q = 0; q < n; q++) s += cc.nu[r][q] * cc.nu[q][p];
            if (norm(cc, s) != 0)
                flag("square (" + cc.names[p] + "," + cc.names[r] + ")");
        }
    if (cc.mu)
        for (int q = 0; q < n; q++)
            for (int p = 0; p < n; p++) {
                if (!entry(cc, q, p)) continue;
                if ((*cc.mu)[q] - (*cc.mu)[p] != 1)
                    flag("index (" + cc.names[p] + "," + cc.names[q] + ")");
                if (cc.order && !cc.leq(p, q))
                    flag("order (" + cc.names[p] + "," + cc.names[q] + ")");
            }
    if (cc.order) {
        for (int p = 0; p < n; p++) {
            if (!cc.leq(p, p)) flag("reflexive " + cc.names[p]);
            for (int q = 0; q < n; q++) {
                if (p != q && cc.leq(p, q) && cc.leq(q, p))
                    flag("antisymmetry (" + cc.names[p] + "," + cc.names[q] + ")");
                if (p != q && cc.mu && cc.leq(p, q) && (*cc.mu)[p] >= (*cc.mu)[q])
                    flag("monotone (" + cc.names[p] + "," + cc.names[q] + ")");
                for (int r = 0; r < n; r++)
                    if (cc.leq(p, q) && cc.leq(q, r) && !cc.leq(p, r))
                        flag("transitive (" + cc.names[p] + "," + cc.names[r] + ")");
            }
        }
    }
    return rep;
}

ConnectionComplex reduce(ConnectionComplex const& cc0, int pbar, int qbar) {
    ConnectionComplex cc = pivot_ready(cc0, pbar, qbar);
    int n = cc.n();
    std::vector<int> keep;
    for (int i = 0; i < n; i++)
        if (i != pbar && i != qbar) keep.push_back(i);
    ConnectionComplex out;
    out.f2 = cc.f2;
    for (int i : keep) out.names.push_back(cc.names[i]);
    int m = (int)keep.size();
    out.nu.assign(m, std::vector<Int>(m, 0));
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++) {
            int q = keep[a], p = keep[b];
            out.nu[a][b] = norm(cc, cc.nu[q][p] - cc.nu[q][pbar] * cc.nu[qbar][p]);
        }
    if (cc.mu) {
        out.mu.emplace();
        for (int i : keep) out.mu->push_back((*cc.mu)[i]);
    }
    if (cc.order) {
        std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
        for (int a = 0; a < m; a++)
            for (int b = 0; b < m; b++) {
                int p = keep[a], q = keep[b];
                le[a][b] = cc.leq(p, q) || (cc.leq(pbar, q) && cc.leq(p, qbar));
            }
        close_order(le);
        out.order = std::move(le);
    }
    return out;
}

ChainMaps chain_maps(ConnectionComplex const& cc0, int pbar, int qbar) {
    ConnectionComplex cc = pivot_ready(cc0, pbar, qbar);
    int n = cc.n();
    std::vector<int> keep;
    for (int i = 0; i < n; i++)
        if (i != pbar && i != qbar) keep.push_back(i);
    int m = (int)keep.size();

    ChainMaps cm;
    auto reduced = reduce(cc0, pbar, qbar);
    cm.dprime = d_matrix(reduced);
    IMat d = d_matrix(cc);
    cm.phi.assign(n, std::vector<Int>(m, 0));
    for (int a = 0; a < m; a++) {
        cm.phi[keep[a]][a] = 1;
        cm.phi[qbar][a] = -cc.nu[keep[a]][pbar];
    }
    cm.psi.assign(m, std::vector<Int>(n, 0));
    for (int a = 0; a < m; a++) {
        cm.psi[a][keep[a]] = 1;
        cm.psi[a][pbar] = -cc.nu[qbar][keep[a]];
    }
    cm.t.assign(n, std::vector<Int>(n, 0));
    cm.t[qbar][pbar] = 1;

    auto check = [&](bool ok, std::string const& what) {
        if (!ok) {
            cm.ok = false;
            cm.failures.push_back(what);
        }
    };
    check(mat_eq(mat_mul(d, cm.phi), mat_mul(cm.phi, cm.dprime), cc.f2),
          "phi is not a chain map");
    check(mat_eq(mat_mul(cm.dprime, cm.psi), mat_mul(cm.psi, d), cc.f2),
          "psi is not a chain map");
    IMat idm(m, std::vector<Int>(m, 0));
    for (int a = 0; a < m; a++) idm[a][a] = 1;
    check(mat_eq(mat_mul(cm.psi, cm.phi), idm, cc.f2), "psi.phi is not the identity");
    IMat lhs(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; i++) lhs[i][i] = 1;
    IMat fp = mat_mul(cm.phi, cm.psi);
    for (int i = 0; i < (int)fp.size(); i++)
        for (int j = 0; j < (int)fp[i].size(); j++) lhs[i][j] -= fp[i][j];
    IMat rhs = mat_mul(d, cm.t);
    IMat td = mat_mul(cm.t, d);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) rhs[i][j] += td[i][j];
    check(mat_eq(lhs, rhs, cc.f2), "homotopy identity fails");
    return cm;
}

DimReport homology_dims(ConnectionComplex const& cc) {
    int n = cc.n();
    for (int r = 0; r < n; r++)
        for (int p = 0; p < n; p++) {
            Int s = 0;
            for (int q = 0; q < n; q++) s += cc.nu[r][q] * cc.nu[q][p];
            if (norm(cc, s) != 0) throw NotAComplex("differential does not square to zero");
        }
    DimReport rep;
    int rank = cc.f2 ? f2_rank(cc.nu) : q_rank(cc.nu);
    rep.total = n - 2 * rank;
    if (cc.mu) {
        std::map<long long, std::vector<int>> grades;
        for (int i = 0; i < n; i++) grades[(*cc.mu)[i]].push_back(i);
        auto rank_from = [&](long long g) {
            if (!grades.count(g)) return 0;
            IMat rows;
            for (int q : grades[g]) rows.push_back(cc.nu[q]);
            return cc.f2 ? f2_rank(rows) : q_rank(rows);
        };
        for (auto const& [g, gens] : grades)
            rep.by_mu[g] = (int)gens.size() - rank_from(g) - rank_from(g + 1);
    }
    return rep;
}

ConnectionComplex export_connection(FloerComplex const& cx) {
    ConnectionComplex cc;
    cc.f2 = cx.coeff == Coeff::F2;
    for (int i = 0; i < cx.n; i++) cc.names.push_back("x" + std::to_string(i));
    cc.nu = cx.d;
    if (cx.graded && cx.n > 0) {
        int ncomp = 1 + *std::max_element(cx.component.begin(), cx.component.end());
        std::vector<long long> base(ncomp, 0), span(ncomp, 0);
        for (int i = 0; i < cx.n; i++)
            span[cx.component[i]] = std::max(span[cx.component[i]], cx.rel_grade[i]);
        long long acc = 0;
        for (int c = 0; c < ncomp; c++) {
            base[c] = acc;
            acc += span[c] + 2;
        }
        cc.mu.emplace(cx.n);
        for (int i = 0; i < cx.n; i++)
            (*cc.mu)[i] = cx.rel_grade[i] + base[cx.component[i]];
    }
    std::vector<std::vector<bool>> le(cx.n, std::vector<bool>(cx.n, false));
    for (int q = 0; q < cx.n; q++)
        for (int p = 0; p < cx.n; p++)
            if (norm(cc, cc.nu[q][p]) != 0) le[p][q] = true;
    close_order(le);
    bool acyclic = true;
    for (int p = 0; p < cx.n; p++)
        for (int q = 0; q < cx.n; q++)
            if (p != q && le[p][q] && le[q][p]) acyclic = false;
    if (acyclic) cc.order = std::move(le);
    return cc;
}

} // namespace cfh
