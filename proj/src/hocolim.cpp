#include "twocat/hocolim.hpp"

#include <algorithm>
#include <unordered_map>

namespace twocat {

namespace {

using KeyIndex = std::unordered_map<Key, int, KeyHash>;

void require_strict(const TwoDiagram& D, bool fibres_discrete, bool base_discrete) {
    ValidationReport rep = validate_two_diagram(D);
    if (!rep.ok()) throw Error("DiagramInvalid", rep.findings.front().kind + ": " + rep.findings.front().detail);
    const TwoCategory& C = *D.base;
    if (base_discrete)
        for (int a = 0; a < C.num_cells2(); ++a)
            if (!C.is_id2(a)) throw Error("BaseNotCategory", "base 2-cell " + C.cell2(a).name);
    if (fibres_discrete)
        for (int x = 0; x < C.num_objects(); ++x)
            for (int c = 0; c < D.F(x).num_cells2(); ++c)
                if (!D.F(x).is_id2(c)) throw Error("FibreNotCategory", "fibre over " + C.object_name(x) + " has 2-cell " + D.F(x).cell2(c).name);
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) {
            const TwoCategory& Fx = D.F(C.src1(v));
            for (int c : D.zeta.at(pair_key(u, v)))
                if (!Fx.is_id1(c)) throw Error("NonStrictDiagram", "zeta at (" + C.cell1(u).name + ", " + C.cell1(v).name + ")");
        }
}

// Strings (x_0, u_1, ..., u_q) of composable 1-cells, u_k: x_k -> x_{k-1}.
struct BaseStrings {
    std::vector<std::vector<Key>> keys;
    std::vector<KeyIndex> index;

    int find(int q, const Key& k) const {
        auto it = index[q].find(k);
        return it == index[q].end() ? -1 : it->second;
    }
};

BaseStrings base_strings(const TwoCategory& C, int cap) {
    BaseStrings B;
    B.keys.resize(cap + 1);
    B.index.resize(cap + 1);
    for (int x = 0; x < C.num_objects(); ++x) B.keys[0].push_back({x});
    for (int q = 1; q <= cap; ++q) {
        for (const Key& k : B.keys[q - 1]) {
            int last = q == 1 ? k[0] : C.src1(k.back());
            for (int u : C.cells1_into(last)) {
                Key e = k;
                e.push_back(u);
                B.keys[q].push_back(std::move(e));
            }
        }
        std::sort(B.keys[q].begin(), B.keys[q].end());
    }
    for (int q = 0; q <= cap; ++q)
        for (size_t s = 0; s < B.keys[q].size(); ++s) B.index[q][B.keys[q][s]] = static_cast<int>(s);
    return B;
}

int string_vertex(const TwoCategory& C, const Key& k, int i) { return i == 0 ? k[0] : C.src1(k[i]); }

// x_{i,j} = u_{i+1} o ... o u_j
int string_composite(const TwoCategory& C, const Key& k, int i, int j) {
    if (i == j) return C.id1(string_vertex(C, k, i));
    int c = k[i + 1];
    for (int t = i + 2; t <= j; ++t) c = C.hc1(c, k[t]);
    return c;
}

Key string_face(const TwoCategory& C, int n, int i, const Key& k) {
    Key out;
    if (i == 0) {
        out.push_back(string_vertex(C, k, 1));
        out.insert(out.end(), k.begin() + 2, k.end());
    } else if (i == n) {
        out.assign(k.begin(), k.end() - 1);
    } else {
        out.assign(k.begin(), k.begin() + i);
        out.push_back(C.hc1(k[i], k[i + 1]));
        out.insert(out.end(), k.begin() + i + 2, k.end());
    }
    return out;
}

Key string_degen(const TwoCategory& C, int i, const Key& k) {
    Key out = k;
    out.insert(out.begin() + i + 1, C.id1(string_vertex(C, k, i)));
    return out;
}

Key string_shift(const Key& k, int m, const TwoCategory& C) {
    Key out{string_vertex(C, k, m)};
    out.insert(out.end(), k.begin() + m + 1, k.end());
    return out;
}

GSimplex apply_functor(const TwoFunctor& F, const GSimplex& y) {
    GSimplex out(y.n);
    for (size_t i = 0; i < y.obj.size(); ++i) out.obj[i] = y.obj[i] < 0 ? -1 : F.obj[y.obj[i]];
    for (size_t i = 0; i < y.c1.size(); ++i) out.c1[i] = y.c1[i] < 0 ? -1 : F.c1[y.c1[i]];
    for (size_t i = 0; i < y.c2.size(); ++i) out.c2[i] = y.c2[i] < 0 ? -1 : F.c2[y.c2[i]];
    return out;
}

Key concat(Key a, const Key& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// A codiagonal simplex of transpose(N S) for a simplicial category S is fixed by the object
// t_0 in level p and the last arrow A_k of each t_k, an arrow of level p - k.
struct Staircase {
    int O = -1;
    std::vector<int> A;  // A[k], k = 1..p
};

struct ChainIndex {
    std::vector<std::vector<KeyIndex>> at;  // at[level][q]

    explicit ChainIndex(const TruncBisimplicialSet& B) : at(B.cap + 1, std::vector<KeyIndex>(B.cap + 1)) {
        for (int l = 0; l <= B.cap; ++l)
            for (int q = 0; q <= B.cap; ++q)
                for (int s = 0; s < B.size(l, q); ++s) at[l][q][B.keys[l][q][s]] = s;
    }
    int find(int l, int q, const Key& k) const {
        auto it = at[l][q].find(k);
        return it == at[l][q].end() ? -1 : it->second;
    }
};

Staircase decode(const TruncBisimplicialSet& B, const TruncSimplicialSet& W, int p, int s) {
    const Key& w = W.keys[p][s];
    Staircase st;
    st.O = B.keys[p][0][w[0]][0];
    st.A.assign(p + 1, -1);
    for (int k = 1; k <= p; ++k) st.A[k] = B.keys[p - k][k][w[k]].back();
    return st;
}

int encode(const SimplicialCategory& S, const ChainIndex& ci, const TruncSimplicialSet& W, int p, const Staircase& st) {
    Key w(p + 1);
    for (int m = 0; m <= p; ++m) {
        int o = st.O;
        for (int l = p; l > p - m; --l) o = S.face[l][0].obj[o];
        Key t{o};
        for (int k = 1; k <= m; ++k) {
            int a = st.A[k];
            for (int l = p - k; l > p - m; --l) a = S.face[l][0].arr[a];
            t.push_back(a);
        }
        w[m] = ci.find(p - m, m, t);
        if (w[m] < 0) return -1;
    }
    return W.find(p, w);
}

int lookup(const std::unordered_map<Key, int, KeyHash>& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? -1 : it->second;
}

void check_pair(ThomasonResult& R) {
    ValidationReport& r = R.report;
    for (int n = 0; n <= R.source.cap; ++n) {
        if (std::count(R.forward.map[n].begin(), R.forward.map[n].end(), -1))
            r.add("TargetSimplexMissing", "forward image missing in dimension " + std::to_string(n));
        if (std::count(R.backward.map[n].begin(), R.backward.map[n].end(), -1))
            r.add("TargetSimplexMissing", "backward image missing in dimension " + std::to_string(n));
    }
    if (!r.ok()) return;
    r.merge(validate_simplicial_map(R.source, R.target, R.forward), "forward: ");
    r.merge(validate_simplicial_map(R.target, R.source, R.backward), "backward: ");
    if (!r.ok()) return;
    if (!is_bijective(R.forward, R.source, R.target)) r.add("NotBijective", "forward map is not a bijection");
    for (int n = 0; n <= R.source.cap; ++n) {
        for (int s = 0; s < R.source.size(n); ++s)
            if (R.backward.map[n][R.forward.map[n][s]] != s) {
                r.add("RoundTripFailure", "backward after forward in dimension " + std::to_string(n));
                break;
            }
        for (int s = 0; s < R.target.size(n); ++s)
            if (R.forward.map[n][R.backward.map[n][s]] != s) {
                r.add("RoundTripFailure", "forward after backward in dimension " + std::to_string(n));
                break;
            }
    }
}

}  // namespace

SimplicialCategory hocolim_two_functor(const TwoDiagram& D, int cap) {
    require_strict(D, true, false);
    const TwoCategory& C = *D.base;
    SimplicialCategory NC = nerve_two_category(C, cap);
    SimplicialCategory S;
    S.cap = cap;
    S.levels.resize(cap + 1);
    S.obj_keys.resize(cap + 1);
    S.arr_keys.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
        Category& L = S.levels[n];
        auto& objs = S.obj_keys[n];
        KeyIndex oidx, aidx;
        for (const Key& bk : NC.obj_keys[n])
            for (int a = 0; a < D.F(bk[0]).num_objects(); ++a) {
                Key k = bk;
                k.insert(k.begin() + 1, a);
                oidx[k] = L.add_object();
                objs.push_back(std::move(k));
            }
        auto& arrs = S.arr_keys[n];
        arrs.resize(L.num_arrows());
        for (size_t o = 0; o < objs.size(); ++o) {
            const Key& k = objs[o];
            Key idk{k[0], D.F(k[0]).id1(k[1])};
            for (int i = 1; i <= n; ++i) idk.push_back(C.id2(k[1 + i]));
            int a = L.id(static_cast<int>(o));
            arrs[a] = idk;
            aidx[idk] = a;
        }
        for (const Key& bak : NC.arr_keys[n]) {
            const TwoCategory& F0 = D.F(bak[0]);
            for (int f = 0; f < F0.num_cells1(); ++f) {
                Key k = bak;
                k.insert(k.begin() + 1, f);
                if (aidx.count(k)) continue;
                Key sk{bak[0], F0.src1(f)}, tk{bak[0], F0.tgt1(f)};
                for (int i = 1; i <= n; ++i) {
                    sk.push_back(C.src2(bak[i]));
                    tk.push_back(C.tgt2(bak[i]));
                }
                aidx[k] = L.add_arrow("", oidx.at(sk), oidx.at(tk));
                arrs.push_back(std::move(k));
            }
        }
        for (int g = 0; g < L.num_arrows(); ++g)
            for (int f : L.into(L.src(g))) {
                const Key &gk = arrs[g], &fk = arrs[f];
                Key h{gk[0], D.F(gk[0]).hc1(gk[1], fk[1])};
                for (int i = 1; i <= n; ++i) h.push_back(C.vc(gk[1 + i], fk[1 + i]));
                L.set_comp(g, f, aidx.at(h));
            }
    }
    auto obj_face = [&](int n, int i, const Key& k) {
        Key out;
        if (i == 0) {
            int u = k[2];
            out = {C.src1(u), D.ustar[u].obj[k[1]]};
            out.insert(out.end(), k.begin() + 3, k.end());
        } else if (i == n) {
            out.assign(k.begin(), k.end() - 1);
        } else {
            out.assign(k.begin(), k.begin() + 1 + i);
            out.push_back(C.hc1(k[1 + i], k[2 + i]));
            out.insert(out.end(), k.begin() + 3 + i, k.end());
        }
        return out;
    };
    auto arr_face = [&](int n, int i, const Key& k) {
        Key out;
        if (i == 0) {
            // (al_1*_b o u_1* f, al_2, ...)
            int al = k[2], u = C.src2(al), x1 = C.src1(u);
            int b = D.F(k[0]).tgt1(k[1]);
            out = {x1, D.F(x1).hc1(D.astar[al][b], D.ustar[u].c1[k[1]])};
            out.insert(out.end(), k.begin() + 3, k.end());
        } else if (i == n) {
            out.assign(k.begin(), k.end() - 1);
        } else {
            out.assign(k.begin(), k.begin() + 1 + i);
            out.push_back(C.hc2(k[1 + i], k[2 + i]));
            out.insert(out.end(), k.begin() + 3 + i, k.end());
        }
        return out;
    };
    auto obj_degen = [&](int, int i, const Key& k) {
        Key out = k;
        int x = i == 0 ? k[0] : C.src1(k[1 + i]);
        out.insert(out.begin() + 2 + i, C.id1(x));
        return out;
    };
    auto arr_degen = [&](int, int i, const Key& k) {
        Key out = k;
        int x = i == 0 ? k[0] : C.src1(C.src2(k[1 + i]));
        out.insert(out.begin() + 2 + i, C.id2(C.id1(x)));
        return out;
    };
    link_simplicial_category(S, obj_face, arr_face, obj_degen, arr_degen);
    return S;
}

TruncBisimplicialSet hocolim_diagram_of_2cats(const TwoDiagram& D, int cap) {
    Budget b;
    return hocolim_diagram_of_2cats(D, cap, b);
}

TruncBisimplicialSet hocolim_diagram_of_2cats(const TwoDiagram& D, int cap, Budget& budget) {
    require_strict(D, false, true);
    const TwoCategory& C = *D.base;
    std::vector<TruncSimplicialSet> dF;
    for (int x = 0; x < C.num_objects(); ++x) dF.push_back(geometric_nerve(D.F(x), cap, budget));
    BaseStrings bs = base_strings(C, cap);
    TruncBisimplicialSet S;
    resize_bisimplicial(S, cap);
    // S_{p,q} lists, for each base string in order, all p-simplices of the fibre over its x_0
    std::vector<std::vector<std::vector<int>>> off(cap + 1, std::vector<std::vector<int>>(cap + 1));
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q)
            for (const Key& xk : bs.keys[q]) {
                off[p][q].push_back(S.size(p, q));
                for (const Key& yk : dF[xk[0]].keys[p]) S.keys[p][q].push_back(concat(xk, yk));
            }
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            int nx = static_cast<int>(bs.keys[q].size());
            auto each = [&](auto&& fn) {
                for (int xi = 0; xi < nx; ++xi) {
                    int x0 = bs.keys[q][xi][0];
                    for (int y = 0; y < dF[x0].size(p); ++y) fn(xi, x0, y, off[p][q][xi] + y);
                }
            };
            if (p >= 1) {
                S.hface[p][q].assign(p + 1, std::vector<int>(S.size(p, q)));
                for (int i = 0; i <= p; ++i)
                    each([&](int xi, int x0, int y, int s) { S.hface[p][q][i][s] = off[p - 1][q][xi] + dF[x0].d(p, i, y); });
            }
            if (p < cap) {
                S.hdeg[p][q].assign(p + 1, std::vector<int>(S.size(p, q)));
                for (int i = 0; i <= p; ++i)
                    each([&](int xi, int x0, int y, int s) { S.hdeg[p][q][i][s] = off[p + 1][q][xi] + dF[x0].s(p, i, y); });
            }
            if (q >= 1) {
                S.vface[p][q].assign(q + 1, std::vector<int>(S.size(p, q)));
                for (int j = 0; j <= q; ++j)
                    each([&](int xi, int x0, int y, int s) {
                        const Key& xk = bs.keys[q][xi];
                        int xf = bs.find(q - 1, string_face(C, q, j, xk));
                        int yy = y;
                        if (j == 0) {
                            int u = xk[1];
                            GSimplex moved = apply_functor(D.ustar[u], simplex_from_key(D.F(x0), p, dF[x0].keys[p][y]));
                            yy = dF[C.src1(u)].find(p, moved.key());
                            if (yy < 0) throw Error("TargetSimplexMissing", "vertical face d_0 leaves the fibre nerve");
                        }
                        S.vface[p][q][j][s] = off[p][q - 1][xf] + yy;
                    });
            }
            if (q < cap) {
                S.vdeg[p][q].assign(q + 1, std::vector<int>(S.size(p, q)));
                for (int j = 0; j <= q; ++j)
                    each([&](int xi, int, int y, int s) {
                        int xd = bs.find(q + 1, string_degen(C, j, bs.keys[q][xi]));
                        S.vdeg[p][q][j][s] = off[p][q + 1][xd] + y;
                    });
            }
        }
    return S;
}

TruncSimplicialSet hocolim_geometric(const TwoDiagram& D, int cap, Budget& budget) {
    require_strict(D, false, true);
    const TwoCategory& C = *D.base;
    BaseStrings bs = base_strings(C, cap);
    std::vector<TruncSimplicialSet> dF;
    for (int x = 0; x < C.num_objects(); ++x) dF.push_back(geometric_nerve(D.F(x), cap, budget));
    std::vector<std::vector<Key>> keys(cap + 1);
    for (int n = 0; n <= cap; ++n)
        for (const Key& xk : bs.keys[n])
            for (const Key& yk : dF[xk[0]].keys[n]) keys[n].push_back(concat(xk, yk));
    auto split = [&](int n, const Key& k) {
        Key xk(k.begin(), k.begin() + n + 1);
        GSimplex y = simplex_from_key(D.F(xk[0]), n, Key(k.begin() + n + 1, k.end()));
        return std::make_pair(xk, y);
    };
    auto face = [&](int n, int i, const Key& k) {
        auto [xk, y] = split(n, k);
        GSimplex yf = precompose(y, coface(n, i));
        if (i == 0) yf = apply_functor(D.ustar[xk[1]], yf);
        return concat(string_face(C, n, i, xk), yf.key());
    };
    auto degen = [&](int n, int i, const Key& k) {
        auto [xk, y] = split(n, k);
        return concat(string_degen(C, i, xk), precompose(y, codegeneracy(n, i)).key());
    };
    return assemble(cap, std::move(keys), face, degen);
}

GSimplex crossed_restrict(const TwoDiagram& D, const CrossedLaxFunctor& y, int m) {
    GSimplex out(m);
    auto pull = [&](int i) -> const TwoFunctor& { return D.ustar[y.x(i, m)]; };
    for (int i = 0; i <= m; ++i) out.x(i) = pull(i).obj[y.y(i)];
    for (int i = 0; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            out.x(i, j) = pull(j).c1[y.y(i, j)];
            for (int k = j; k <= m; ++k) out.x(i, j, k) = pull(k).c2[y.y(i, j, k)];
        }
    return out;
}

ValidationReport audit_crossed(const TwoDiagram& D, const CrossedLaxFunctor& y) {
    ValidationReport r;
    int p = y.p;
    for (int i = 0; i <= p; ++i) {
        const TwoCategory& Fi = D.F(D.base->src1(y.x(0, i)));
        if (y.y(i, i) != Fi.id1(y.y(i))) r.add("NormalizationViolation", "y'(" + std::to_string(i) + "," + std::to_string(i) + ")");
        for (int j = i; j <= p; ++j) {
            const TwoCategory& Fj = D.F(D.base->src1(y.x(0, j)));
            if (y.y(i, i, j) != Fj.id2(y.y(i, j)) || y.y(i, j, j) != Fj.id2(y.y(i, j)))
                r.add("NormalizationViolation", "degenerate 2-cell at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    if (!r.ok()) return r;
    // every square with last index l lives in F_{x_l}
    for (int l = 0; l <= p; ++l) r.merge(validate_simplex(D.F(D.base->src1(y.x(0, l))), crossed_restrict(D, y, l)), "in F_{x_" + std::to_string(l) + "}: ");
    return r;
}

std::vector<std::string> ThomasonResult::lines() const {
    std::vector<std::string> out;
    int cap = source.cap;
    std::string sizes;
    for (int n = 0; n <= cap; ++n) sizes += (n ? " " : "") + std::to_string(source.size(n));
    out.push_back("INFO simplices per dimension: " + sizes);
    if (report.ok()) {
        out.push_back("OK maps commute with all faces and degeneracies");
        out.push_back("OK round trip is the identity on both sides");
        out.push_back("OK bijection verified at all dimensions <= " + std::to_string(cap));
    } else {
        for (const auto& f : report.findings) out.push_back("FAIL " + f.kind + ": " + f.detail);
    }
    if (crossed_audited) out.push_back("INFO crossed lax functors audited: " + std::to_string(crossed_audited));
    return out;
}

ThomasonResult thomason_iso_i(const TwoDiagram& D, int cap) {
    if (cap < 1) throw Error("CapTooSmall", "Thomason bijection needs cap >= 1");
    const TwoCategory& C = *D.base;
    SimplicialCategory S1 = hocolim_two_functor(D, cap);
    Grothendieck G = grothendieck(D);
    const TwoCategory& I = G.cat();
    SimplicialCategory S2 = nerve_two_category(I, cap);
    TruncBisimplicialSet B1 = levelwise_nerve(S1), B2 = levelwise_nerve(S2);
    ThomasonResult R;
    R.source = codiagonal_wbar(transpose(B1));
    R.target = codiagonal_wbar(transpose(B2));
    ChainIndex c1(B1), c2(B2);
    R.forward.map.resize(cap + 1);
    R.backward.map.resize(cap + 1);

    for (int p = 0; p <= cap; ++p) {
        auto grid = [&] { return std::vector<std::vector<int>>(p + 1, std::vector<int>(p + 1, -1)); };
        for (int s = 0; s < R.source.size(p); ++s) {
            Staircase st = decode(B1, R.source, p, s);
            std::vector<int> x(p + 1), a(p + 1), g(p + 1, -1);
            auto u = grid(), al = grid(), f = grid(), P = grid();
            const Key& Ok = S1.obj_keys[p][st.O];
            x[0] = Ok[0];
            a[0] = Ok[1];
            for (int i = 1; i <= p; ++i) u[0][i] = Ok[1 + i];
            for (int k = 1; k <= p; ++k) {
                const Key& Ak = S1.arr_keys[p - k][st.A[k]];
                x[k] = Ak[0];
                g[k] = Ak[1];
                a[k] = D.F(x[k]).src1(g[k]);
                for (int i = k + 1; i <= p; ++i) {
                    al[k][i] = Ak[1 + i - k];
                    u[k][i] = C.src2(al[k][i]);
                }
            }
            // f^{m-1}_i = (al^m_i)*_{a_{i-1}} o f^m_i, starting from f^{i-1}_i = g_i
            for (int i = 1; i <= p; ++i) {
                f[i - 1][i] = g[i];
                for (int m = i - 1; m >= 1; --m)
                    f[m - 1][i] = D.F(x[i]).hc1(D.astar[al[m][i]][a[i - 1]], f[m][i]);
                for (int m = 0; m < i; ++m)
                    P[m][i] = G.K.c1({G.object(x[i], a[i]), G.object(x[i - 1], a[i - 1]), u[m][i], f[m][i]});
            }
            Staircase out;
            Key ok2{G.object(x[0], a[0])};
            for (int i = 1; i <= p; ++i) ok2.push_back(P[0][i]);
            out.O = lookup(S2.obj_index[p], ok2);
            out.A.assign(p + 1, -1);
            for (int k = 1; k <= p; ++k) {
                Key ak{G.object(x[k], a[k])};
                for (int i = k + 1; i <= p; ++i)
                    ak.push_back(G.K.c2({P[k][i], P[k - 1][i], al[k][i], D.F(x[i]).id2(f[k - 1][i])}));
                out.A[k] = lookup(S2.arr_index[p - k], ak);
            }
            R.forward.map[p].push_back(out.O < 0 ? -1 : encode(S2, c2, R.target, p, out));
        }
        for (int s = 0; s < R.target.size(p); ++s) {
            Staircase st = decode(B2, R.target, p, s);
            std::vector<int> o(p + 1), x(p + 1), a(p + 1);
            auto P = grid(), al = grid();
            const Key& Ok = S2.obj_keys[p][st.O];
            o[0] = Ok[0];
            for (int i = 1; i <= p; ++i) {
                P[0][i] = Ok[i];
                o[i] = I.src1(P[0][i]);
            }
            for (int k = 1; k <= p; ++k) {
                const Key& Ak = S2.arr_keys[p - k][st.A[k]];
                for (int i = k + 1; i <= p; ++i) {
                    P[k][i] = I.src2(Ak[i - k]);
                    al[k][i] = G.c2_base[Ak[i - k]];
                }
            }
            for (int i = 0; i <= p; ++i) x[i] = G.obj_base[o[i]], a[i] = G.obj_a[o[i]];
            Staircase out;
            Key ok1{x[0], a[0]};
            for (int i = 1; i <= p; ++i) ok1.push_back(G.c1_base[P[0][i]]);
            out.O = lookup(S1.obj_index[p], ok1);
            out.A.assign(p + 1, -1);
            for (int k = 1; k <= p; ++k) {
                Key ak{x[k], G.c1_f[P[k - 1][k]]};
                for (int i = k + 1; i <= p; ++i) ak.push_back(al[k][i]);
                out.A[k] = lookup(S1.arr_index[p - k], ak);
            }
            R.backward.map[p].push_back(out.O < 0 ? -1 : encode(S1, c1, R.source, p, out));
        }
    }
    check_pair(R);
    return R;
}

ThomasonResult thomason_iso_ii(const TwoDiagram& D, int cap) {
    Budget b;
    return thomason_iso_ii(D, cap, b);
}

ThomasonResult thomason_iso_ii(const TwoDiagram& D, int cap, Budget& budget) {
    if (cap < 1) throw Error("CapTooSmall", "Thomason bijection needs cap >= 1");
    const TwoCategory& C = *D.base;
    TruncBisimplicialSet S = hocolim_diagram_of_2cats(D, cap, budget);
    Grothendieck G = grothendieck(D);
    const TwoCategory& I = G.cat();
    ThomasonResult R;
    R.source = codiagonal_wbar(S);
    R.target = geometric_nerve(I, cap, budget);
    std::vector<std::vector<KeyIndex>> sidx(cap + 1, std::vector<KeyIndex>(cap + 1));
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q)
            for (int s = 0; s < S.size(p, q); ++s) sidx[p][q][S.keys[p][q][s]] = s;
    R.forward.map.resize(cap + 1);
    R.backward.map.resize(cap + 1);

    for (int p = 0; p <= cap; ++p) {
        // chi = (t_0, ..., t_p) |-> the simplex with objects (y^i_i, x_i), 1-cells (y^j_{i,j}, x_{i,j})
        // and 2-cells (y^k_{i,j,k}, 1)
        for (int s = 0; s < R.source.size(p); ++s) {
            const Key& w = R.source.keys[p][s];
            std::vector<GSimplex> ys;
            Key xk;
            for (int m = 0; m <= p; ++m) {
                const Key& k = S.keys[m][p - m][w[m]];
                if (m == 0) xk.assign(k.begin(), k.begin() + p + 1);
                int x_m = k[0];
                ys.push_back(simplex_from_key(D.F(x_m), m, Key(k.begin() + (p - m) + 1, k.end())));
            }
            GSimplex z(p);
            for (int i = 0; i <= p; ++i) z.x(i) = G.object(string_vertex(C, xk, i), ys[i].x(i));
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    z.x(i, j) = G.K.c1({z.x(j), z.x(i), string_composite(C, xk, i, j), ys[j].x(i, j)});
            fill_degenerate(I, z);
            bool ok = true;
            for (int i = 0; i <= p && ok; ++i)
                for (int j = i + 1; j <= p && ok; ++j)
                    for (int k = j + 1; k <= p && ok; ++k) {
                        if (z.x(i, j) < 0 || z.x(j, k) < 0 || z.x(i, k) < 0) {
                            ok = false;
                            break;
                        }
                        z.x(i, j, k) = G.K.c2({I.hc1(z.x(i, j), z.x(j, k)), z.x(i, k),
                                               C.id2(string_composite(C, xk, i, k)), ys[k].x(i, j, k)});
                    }
            R.forward.map[p].push_back(ok ? R.target.find(p, z.key()) : -1);
        }
        // z |-> (t_m = (y^m, x delta_0^m)) with y^m_i = x_{i,m}* y'_i
        for (int s = 0; s < R.target.size(p); ++s) {
            GSimplex z = simplex_from_key(I, p, R.target.keys[p][s]);
            CrossedLaxFunctor y;
            y.p = p;
            y.base.assign((p + 1) * (p + 1), -1);
            y.obj.assign(p + 1, -1);
            y.c1.assign((p + 1) * (p + 1), -1);
            y.c2.assign((p + 1) * (p + 1) * (p + 1), -1);
            for (int i = 0; i <= p; ++i) y.obj[i] = G.obj_a[z.x(i)];
            for (int i = 0; i <= p; ++i)
                for (int j = i; j <= p; ++j) {
                    y.base[i * (p + 1) + j] = G.c1_base[z.x(i, j)];
                    y.c1[i * (p + 1) + j] = G.c1_f[z.x(i, j)];
                    for (int k = j; k <= p; ++k) y.c2[(i * (p + 1) + j) * (p + 1) + k] = G.c2_phi[z.x(i, j, k)];
                }
            ValidationReport a = audit_crossed(D, y);
            ++R.crossed_audited;
            if (!a.ok()) {
                R.report.merge(a, "crossed lax functor in dimension " + std::to_string(p) + ": ");
                R.backward.map[p].push_back(-1);
                continue;
            }
            Key xk{G.obj_base[z.x(0)]};
            for (int i = 1; i <= p; ++i) xk.push_back(y.x(i - 1, i));
            Key w(p + 1);
            bool ok = true;
            for (int m = 0; m <= p && ok; ++m) {
                w[m] = lookup(sidx[m][p - m], concat(string_shift(xk, m, C), crossed_restrict(D, y, m).key()));
                ok = w[m] >= 0;
            }
            R.backward.map[p].push_back(ok ? R.source.find(p, w) : -1);
        }
    }
    check_pair(R);
    return R;
}

}  // namespace twocat
