#include "cfh/linalg.hpp"

#include <algorithm>

namespace cfh {

namespace {
Int iabs(Int const& v) { return v < 0 ? -v : v; }
} // namespace

int f2_rank(IMat m) {
    int R = (int)m.size();
    if (R == 0) return 0;
    int C = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < C && rank < R; c++) {
        int piv = -1;
        for (int r = rank; r < R; r++)
            if (m[r][c] % 2 != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < R; r++)
            if (r != rank && m[r][c] % 2 != 0)
                for (int j = 0; j < C; j++) m[r][j] += m[rank][j];
        rank++;
    }
    return rank;
}

int q_rank(IMat const& mi) {
    int R = (int)mi.size();
    if (R == 0) return 0;
    int C = (int)mi[0].size();
    std::vector<std::vector<Rat>> m(R, std::vector<Rat>(C));
    for (int r = 0; r < R; r++)
        for (int c = 0; c < C; c++) m[r][c] = Rat(mi[r][c]);
    int rank = 0;
    for (int c = 0; c < C && rank < R; c++) {
        int piv = -1;
        for (int r = rank; r < R; r++)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < R; r++)
            if (r != rank && m[r][c] != 0) {
                Rat f = m[r][c] / m[rank][c];
                for (int j = 0; j < C; j++) m[r][j] -= f * m[rank][j];
            }
        rank++;
    }
    return rank;
}

std::vector<Int> smith_factors(IMat a) {
    std::vector<Int> out;
    int R = (int)a.size();
    if (R == 0) return out;
    int C = (int)a[0].size();
    int t = 0;
    while (t < R && t < C) {
        int pi = -1, pj = -1;
        for (int i = t; i < R; i++)
            for (int j = t; j < C; j++)
                if (a[i][j] != 0 && (pi < 0 || iabs(a[i][j]) < iabs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < R; i++) std::swap(a[i][t], a[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < R; i++)
                if (a[i][t] != 0) {
                    Int q = a[i][t] / a[t][t];
                    for (int j = t; j < C; j++) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) {
                        std::swap(a[t], a[i]);
                        again = true;
                    }
                }
            for (int j = t + 1; j < C; j++)
                if (a[t][j] != 0) {
                    Int q = a[t][j] / a[t][t];
                    for (int i = t; i < R; i++) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (int i = 0; i < R; i++) std::swap(a[i][t], a[i][j]);
                        again = true;
                    }
                }
            if (!again) {
                for (int i = t + 1; i < R && !again; i++)
                    for (int j = t + 1; j < C && !again; j++)
                        if (a[i][j] % a[t][t] != 0) {
                            for (int jj = t; jj < C; jj++) a[t][jj] += a[i][jj];
                            again = true;
                        }
            }
        }
        out.push_back(iabs(a[t][t]));
        t++;
    }
    return out;
}

IMat mat_mul(IMat const& a, IMat const& b) {
    int R = (int)a.size();
    int K = R ? (int)a[0].size() : 0;
    int C = K && !b.empty() ? (int)b[0].size() : 0;
    IMat out(R, std::vector<Int>(C, 0));
    for (int i = 0; i < R; i++)
        for (int k = 0; k < K; k++) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < C; j++) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool mat_eq(IMat const& a, IMat const& b, bool mod2) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); j++) {
            Int d = a[i][j] - b[i][j];
            if (mod2 ? d % 2 != 0 : d != 0) return false;
        }
    }
    return true;
}

bool mat_zero(IMat const& a, bool mod2) {
    for (auto const& row : a)
        for (auto const& v : row)
            if (mod2 ? v % 2 != 0 : v != 0) return false;
    return true;
}

} // namespace cfh
