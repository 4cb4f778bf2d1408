#include "twocat/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace twocat {

void SparseMatrix::add(int r, int c, const Integer& v) {
    if (v == 0) return;
    auto& e = col[c][r];
    e += v;
    if (e == 0) col[c].erase(r);
}

DenseMatrix SparseMatrix::dense() const {
    DenseMatrix D(rows, std::vector<Integer>(cols));
    for (int c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[c]) D[r][c] = v;
    return D;
}

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.cols != B.rows) throw Error("DimensionMismatch", "matrix product");
    SparseMatrix P(A.rows, B.cols);
    for (int c = 0; c < B.cols; ++c)
        for (const auto& [k, b] : B.col[c])
            for (const auto& [r, a] : A.col[k]) P.add(r, c, a * b);
    return P;
}

bool is_zero(const SparseMatrix& M) {
    for (const auto& c : M.col)
        if (!c.empty()) return false;
    return true;
}

SmithResult smith_normal_form(const DenseMatrix& M) {
    SmithResult res;
    DenseMatrix D = M;
    int m = static_cast<int>(D.size());
    int n = m ? static_cast<int>(D[0].size()) : 0;
    auto swap_rows = [&](int a, int b) { std::swap(D[a], D[b]); };
    auto swap_cols = [&](int a, int b) {
        for (auto& row : D) std::swap(row[a], row[b]);
    };
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        int bi = -1, bj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (D[i][j] != 0 && (bi < 0 || abs(D[i][j]) < abs(D[bi][bj]))) bi = i, bj = j;
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                Integer q = D[i][t] / D[t][t];
                for (int j = t; j < n; ++j) D[i][j] -= q * D[t][j];
                if (D[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                Integer q = D[t][j] / D[t][t];
                for (int i = t; i < m; ++i) D[i][j] -= q * D[i][t];
                if (D[t][j] != 0) clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row t / column t to the pivot
                int pi = t, pj = t;
                for (int i = t + 1; i < m; ++i)
                    if (D[i][t] != 0 && abs(D[i][t]) < abs(D[pi][pj])) pi = i, pj = t;
                for (int j = t + 1; j < n; ++j)
                    if (D[t][j] != 0 && abs(D[t][j]) < abs(D[pi][pj])) pi = t, pj = j;
                swap_rows(t, pi);
                swap_cols(t, pj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < n; ++j) D[t][j] += D[bad][j];
        }
        if (D[t][t] < 0)
            for (int j = t; j < n; ++j) D[t][j] = -D[t][j];
        res.factors.push_back(D[t][t]);
    }
    res.rank = t;
    res.D = std::move(D);
    return res;
}

RankFactors invariant_factors(const SparseMatrix& M) {
    std::vector<std::map<int, Integer>> rows(M.rows);
    std::vector<std::set<int>> colrows(M.cols);
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.col[c]) {
            rows[r][c] = v;
            colrows[c].insert(r);
        }
    int units = 0;
    for (bool progress = true; progress;) {
        progress = false;
        std::vector<int> order;
        for (int r = 0; r < M.rows; ++r)
            if (!rows[r].empty()) order.push_back(r);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return rows[a].size() < rows[b].size(); });
        for (int r : order) {
            int pc = -1;
            for (const auto& [c, v] : rows[r])
                if ((v == 1 || v == -1) && (pc < 0 || colrows[c].size() < colrows[pc].size())) pc = c;
            if (pc < 0) continue;
            Integer pv = rows[r][pc];
            std::vector<int> others(colrows[pc].begin(), colrows[pc].end());
            for (int r2 : others) {
                if (r2 == r) continue;
                Integer f = rows[r2][pc] * pv;
                for (const auto& [c, v] : rows[r]) {
                    auto& e = rows[r2][c];
                    e -= f * v;
                    if (e == 0) {
                        rows[r2].erase(c);
                        colrows[c].erase(r2);
                    } else {
                        colrows[c].insert(r2);
                    }
                }
            }
            for (const auto& [c, v] : rows[r]) colrows[c].erase(r);
            rows[r].clear();
            ++units;
            progress = true;
        }
    }
    std::vector<int> live_rows, live_cols;
    std::vector<int> cpos(M.cols, -1);
    for (int r = 0; r < M.rows; ++r)
        if (!rows[r].empty()) live_rows.push_back(r);
    for (int c = 0; c < M.cols; ++c)
        if (!colrows[c].empty()) {
            cpos[c] = static_cast<int>(live_cols.size());
            live_cols.push_back(c);
        }
    RankFactors out;
    out.rank = units;
    out.factors.assign(units, Integer(1));
    if (!live_rows.empty()) {
        DenseMatrix D(live_rows.size(), std::vector<Integer>(live_cols.size()));
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[live_rows[i]]) D[i][cpos[c]] = v;
        SmithResult s = smith_normal_form(D);
        out.rank += s.rank;
        out.factors.insert(out.factors.end(), s.factors.begin(), s.factors.end());
    }
    return out;
}

ChainComplex chain_complex(const TruncSimplicialSet& S) {
    ValidationReport audit = audit_simplicial(S);
    if (!audit.ok()) throw Error("AuditFailed", audit.findings.front().kind + ": " + audit.findings.front().detail);
    ChainComplex C;
    C.cap = S.cap;
    C.basis.resize(S.cap + 1);
    C.position.resize(S.cap + 1);
    for (int n = 0; n <= S.cap; ++n) {
        C.basis[n] = S.nondegenerate(n);
        for (int k = 0; k < C.rank(n); ++k) C.position[n][C.basis[n][k]] = k;
    }
    C.boundary.resize(S.cap + 1);
    for (int n = 1; n <= S.cap; ++n) {
        SparseMatrix B(C.rank(n - 1), C.rank(n));
        for (int k = 0; k < C.rank(n); ++k)
            for (int i = 0; i <= n; ++i) {
                auto it = C.position[n - 1].find(S.d(n, i, C.basis[n][k]));
                if (it != C.position[n - 1].end()) B.add(it->second, k, i % 2 ? -1 : 1);
            }
        C.boundary[n] = std::move(B);
    }
    if (!boundary_squared_zero(C)) throw Error("AuditFailed", "boundary does not square to zero");
    return C;
}

bool boundary_squared_zero(const ChainComplex& C) {
    for (int n = 2; n <= C.cap; ++n)
        if (!is_zero(multiply(C.boundary[n - 1], C.boundary[n]))) return false;
    return true;
}

std::string to_string(const HomologyGroup& g) {
    std::vector<std::string> parts;
    if (g.betti == 1) parts.push_back("Z");
    if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
    for (const auto& t : g.torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

bool HomologyReport::is_point() const {
    for (size_t n = 0; n < groups.size(); ++n)
        if (groups[n] != HomologyGroup{n == 0 ? 1 : 0, {}}) return false;
    return true;
}

std::vector<std::string> HomologyReport::lines() const {
    std::vector<std::string> out;
    for (size_t n = 0; n < groups.size(); ++n) out.push_back("H_" + std::to_string(n) + " = " + to_string(groups[n]));
    out.push_back("valid through degree " + std::to_string(valid_through));
    return out;
}

HomologyGroup homology_at(int dim_n, const SparseMatrix* d_n, const SparseMatrix& d_n1) {
    HomologyGroup g;
    int r_n = d_n ? invariant_factors(*d_n).rank : 0;
    RankFactors up = invariant_factors(d_n1);
    g.betti = dim_n - r_n - up.rank;
    for (const auto& f : up.factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

HomologyReport homology(const ChainComplex& C) {
    HomologyReport R;
    R.cap = C.cap;
    R.valid_through = C.cap - 1;
    std::vector<RankFactors> rf(C.cap + 1);
    for (int n = 1; n <= C.cap; ++n) rf[n] = invariant_factors(C.boundary[n]);
    for (int n = 0; n < C.cap; ++n) {
        HomologyGroup g;
        g.betti = C.rank(n) - (n ? rf[n].rank : 0) - rf[n + 1].rank;
        for (const auto& f : rf[n + 1].factors)
            if (f > 1) g.torsion.push_back(f);
        R.groups.push_back(std::move(g));
    }
    return R;
}

HomologyReport homology(const TruncSimplicialSet& S) { return homology(chain_complex(S)); }

std::vector<int> components(const TruncSimplicialSet& S) {
    int n = S.size(0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    if (S.cap >= 1)
        for (int e = 0; e < S.size(1); ++e) {
            int a = find(S.d(1, 0, e)), b = find(S.d(1, 1, e));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> label(n, -1), root_label(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (root_label[r] < 0) root_label[r] = k++;
        label[x] = root_label[r];
    }
    return label;
}

int pi0(const TruncSimplicialSet& S) {
    auto l = components(S);
    return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

std::vector<SparseMatrix> chain_map(const SimplicialMap& f, const ChainComplex& CS, const ChainComplex& CT,
                                    const TruncSimplicialSet&) {
    int cap = std::min(CS.cap, CT.cap);
    std::vector<SparseMatrix> out;
    for (int n = 0; n <= cap; ++n) {
        SparseMatrix M(CT.rank(n), CS.rank(n));
        for (int k = 0; k < CS.rank(n); ++k) {
            auto it = CT.position[n].find(f.map[n][CS.basis[n][k]]);
            if (it != CT.position[n].end()) M.add(it->second, k, 1);
        }
        out.push_back(std::move(M));
    }
    return out;
}

bool EquivalenceReport::all_agree() const {
    auto good = [](const std::optional<bool>& b) { return !b || *b; };
    return groups_agree() && good(chain_map_ok) && good(h0_iso) && good(h1_iso);
}

std::vector<std::string> EquivalenceReport::lines() const {
    std::vector<std::string> out;
    auto tag = [](bool b) { return std::string(b ? "OK " : "FAIL "); };
    out.push_back(tag(pi0_a == pi0_b) + "pi0 " + std::to_string(pi0_a) + (pi0_a == pi0_b ? " = " : " != ") +
                  std::to_string(pi0_b));
    for (size_t n = 0; n < a.groups.size(); ++n) {
        bool eq = a.groups[n] == b.groups[n];
        out.push_back(tag(eq) + "H_" + std::to_string(n) + " " + to_string(a.groups[n]) + (eq ? " = " : " != ") +
                      to_string(b.groups[n]));
    }
    if (chain_map_ok) out.push_back(tag(*chain_map_ok) + "chain map commutes with boundaries");
    if (h0_iso) out.push_back(tag(*h0_iso) + "induced map on H_0 is an isomorphism");
    if (h1_iso) out.push_back(tag(*h1_iso) + "induced map on H_1 is an isomorphism");
    if (agree_through >= 0)
        out.push_back("INFO agree through degree " + std::to_string(agree_through));
    else
        out.push_back("INFO disagree in degree 0");
    return out;
}

EquivalenceReport homology_compare(const TruncSimplicialSet& S, const TruncSimplicialSet& T,
                                   const SimplicialMap* via) {
    if (S.cap != T.cap) throw Error("CapMismatch", std::to_string(S.cap) + " vs " + std::to_string(T.cap));
    EquivalenceReport R;
    R.cap = S.cap;
    ChainComplex CS = chain_complex(S), CT = chain_complex(T);
    R.a = homology(CS);
    R.b = homology(CT);
    R.pi0_a = pi0(S);
    R.pi0_b = pi0(T);
    for (size_t n = 0; n < R.a.groups.size() && R.a.groups[n] == R.b.groups[n]; ++n) R.agree_through = static_cast<int>(n);
    if (!via) return R;

    const SimplicialMap& f = *via;
    if (!validate_simplicial_map(S, T, f).ok()) {
        R.chain_map_ok = false;
        return R;
    }
    auto F = chain_map(f, CS, CT, T);
    bool ok = true;
    for (int n = 1; n <= R.cap; ++n) {
        SparseMatrix l = multiply(CT.boundary[n], F[n]), r = multiply(F[n - 1], CS.boundary[n]);
        if (l.col != r.col) ok = false;
    }
    R.chain_map_ok = ok;

    auto cs = components(S), ct = components(T);
    std::vector<int> image(R.pi0_a, -1);
    std::vector<char> hit(R.pi0_b, 0);
    for (int x = 0; x < S.size(0); ++x) image[cs[x]] = ct[f.map[0][x]];
    int distinct = 0;
    for (int c : image)
        if (!hit[c]) hit[c] = 1, ++distinct;
    R.h0_iso = R.pi0_a == R.pi0_b && distinct == R.pi0_b;

    if (R.cap >= 2) {
        // H_1 of the mapping cone Cone_n = T_n + S_{n-1}, d(t, s) = (dt + f s, -ds)
        int t0 = CT.rank(0), t1 = CT.rank(1), t2 = CT.rank(2), s0 = CS.rank(0), s1 = CS.rank(1);
        SparseMatrix d1(t0, t1 + s0), d2(t1 + s0, t2 + s1);
        for (int c = 0; c < t1; ++c)
            for (const auto& [r, v] : CT.boundary[1].col[c]) d1.add(r, c, v);
        for (int c = 0; c < s0; ++c)
            for (const auto& [r, v] : F[0].col[c]) d1.add(r, t1 + c, v);
        for (int c = 0; c < t2; ++c)
            for (const auto& [r, v] : CT.boundary[2].col[c]) d2.add(r, c, v);
        for (int c = 0; c < s1; ++c) {
            for (const auto& [r, v] : F[1].col[c]) d2.add(r, t2 + c, v);
            for (const auto& [r, v] : CS.boundary[1].col[c]) d2.add(t1 + r, t2 + c, -v);
        }
        HomologyGroup cone = homology_at(t1 + s0, &d1, d2);
        // H_1(f) is onto iff H_1(cone) is the free kernel of H_0(f); then iso iff the groups agree
        int kernel = R.pi0_a - distinct;
        bool onto = cone == HomologyGroup{kernel, {}};
        R.h1_iso = onto && R.a.groups.size() > 1 && R.a.groups[1] == R.b.groups[1];
    }
    return R;
}

}  // namespace twocat
