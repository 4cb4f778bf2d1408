#include "twocat/nerves.hpp"

#include <algorithm>
#include <array>
#include <memory>

namespace twocat {

Key GSimplex::key() const {
    Key k;
    for (int i = 0; i <= n; ++i) k.push_back(x(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) k.push_back(x(i, j));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) k.push_back(x(i, j, l));
    return k;
}

GSimplex simplex_from_key(const TwoCategory& C, int n, const Key& k) {
    GSimplex s(n);
    size_t p = 0;
    for (int i = 0; i <= n; ++i) s.x(i) = k[p++];
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) s.x(i, j) = k[p++];
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l) s.x(i, j, l) = k[p++];
    fill_degenerate(C, s);
    return s;
}

void fill_degenerate(const TwoCategory& C, GSimplex& s) {
    for (int i = 0; i <= s.n; ++i)
        if (s.x(i) >= 0) s.x(i, i) = C.id1(s.x(i));
    for (int i = 0; i <= s.n; ++i)
        for (int j = i; j <= s.n; ++j) {
            int u = s.x(i, j);
            if (u < 0) continue;
            s.x(i, i, j) = C.id2(u);
            s.x(i, j, j) = C.id2(u);
        }
}

GSimplex precompose(const GSimplex& s, const std::vector<int>& xi) {
    int m = static_cast<int>(xi.size()) - 1;
    GSimplex y(m);
    for (int a = 0; a <= m; ++a) y.x(a) = s.x(xi[a]);
    for (int a = 0; a <= m; ++a)
        for (int b = a; b <= m; ++b) y.x(a, b) = s.x(xi[a], xi[b]);
    for (int a = 0; a <= m; ++a)
        for (int b = a; b <= m; ++b)
            for (int c = b; c <= m; ++c) y.x(a, b, c) = s.x(xi[a], xi[b], xi[c]);
    return y;
}

std::vector<int> coface(int n, int i) {
    std::vector<int> f;
    for (int j = 0; j < n; ++j) f.push_back(j < i ? j : j + 1);
    return f;
}

std::vector<int> codegeneracy(int n, int i) {
    std::vector<int> f;
    for (int j = 0; j <= n + 1; ++j) f.push_back(j <= i ? j : j - 1);
    return f;
}

namespace {

// x(i,j,l)(1 o x(j,k,l)) = x(i,k,l)(x(i,j,k) o 1)
bool tetrahedron_ok(const TwoCategory& C, const GSimplex& s, int i, int j, int k, int l) {
    int w1 = C.hcomp2(C.id2(s.x(i, j)), s.x(j, k, l));
    int w2 = C.hcomp2(s.x(i, j, k), C.id2(s.x(k, l)));
    if (w1 < 0 || w2 < 0) return false;
    int lhs = C.vcomp(s.x(i, j, l), w1);
    int rhs = C.vcomp(s.x(i, k, l), w2);
    return lhs >= 0 && lhs == rhs;
}

}  // namespace

ValidationReport validate_simplex(const TwoCategory& C, const GSimplex& s) {
    ValidationReport r;
    int n = s.n;
    auto at = [](std::initializer_list<int> v) {
        std::string out = "(";
        for (int a : v) out += (out.size() > 1 ? "," : "") + std::to_string(a);
        return out + ")";
    };
    for (int i = 0; i <= n; ++i)
        if (s.x(i) < 0 || s.x(i) >= C.num_objects()) {
            r.add("BoundaryMismatch", "object " + at({i}));
            return r;
        }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int u = s.x(i, j);
            if (u < 0 || C.src1(u) != s.x(j) || C.tgt1(u) != s.x(i)) r.add("BoundaryMismatch", "1-cell " + at({i, j}));
        }
    if (!r.ok()) return r;
    for (int i = 0; i <= n; ++i) {
        if (s.x(i, i) != C.id1(s.x(i))) r.add("NormalizationViolation", "x" + at({i, i}) + " is not an identity");
        for (int j = i; j <= n; ++j)
            if (s.x(i, i, j) != C.id2(s.x(i, j)) || s.x(i, j, j) != C.id2(s.x(i, j)))
                r.add("NormalizationViolation", "degenerate 2-cell at " + at({i, j}));
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                int a = s.x(i, j, k);
                int f = C.hcomp1(s.x(i, j), s.x(j, k));
                if (a < 0 || f < 0 || C.src2(a) != f || C.tgt2(a) != s.x(i, k))
                    r.add("BoundaryMismatch", "2-cell " + at({i, j, k}));
            }
    if (!r.ok()) return r;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (!tetrahedron_ok(C, s, i, j, k, l))
                        r.add("CocycleViolation", "tetrahedron " + at({i, j, k, l}));
    return r;
}

NormalLaxFunctor simplex_as_lax_functor(const TwoCategory& C, const GSimplex& s) {
    auto src = std::make_shared<TwoCategory>(from_category(ordinal(s.n)));
    NormalLaxFunctor F;
    F.src = src;
    F.tgt = std::shared_ptr<const TwoCategory>(&C, [](const TwoCategory*) {});
    for (int i = 0; i <= s.n; ++i) F.obj.push_back(s.x(i));
    for (int u = 0; u < src->num_cells1(); ++u) F.c1.push_back(s.x(src->tgt1(u), src->src1(u)));
    for (int a = 0; a < src->num_cells2(); ++a) F.c2.push_back(C.id2(F.c1[src->src2(a)]));
    for (int u = 0; u < src->num_cells1(); ++u)
        for (int v : src->cells1_into(src->src1(u)))
            F.constraint[pair_key(u, v)] = s.x(src->tgt1(u), src->src1(u), src->src1(v));
    return F;
}

void complete_simplex(const TwoCategory& C, const GSimplex& partial, Budget& budget,
                      const std::function<void(const GSimplex&)>& out) {
    int n = partial.n;
    struct Step {
        int kind;  // 0 object, 1 edge, 2 triangle
        int i, j, k;
        std::vector<std::array<int, 4>> tetras;
    };
    std::vector<Step> steps;
    std::vector<char> edge_known((n + 1) * (n + 1), 0), tri_known((n + 1) * (n + 1) * (n + 1), 0),
        tri_fixed(tri_known.size(), 0), tetra_done((n + 1) * (n + 1) * (n + 1) * (n + 1), 0);
    auto E = [&](int i, int j) { return i * (n + 1) + j; };
    auto T = [&](int i, int j, int k) { return (i * (n + 1) + j) * (n + 1) + k; };
    auto Q = [&](int i, int j, int k, int l) { return ((i * (n + 1) + j) * (n + 1) + k) * (n + 1) + l; };

    for (int i = 0; i <= n; ++i)
        if (partial.x(i) < 0) steps.push_back({0, i, -1, -1, {}});
    std::vector<std::pair<int, int>> open_edges;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (partial.x(i, j) >= 0)
                edge_known[E(i, j)] = 1;
            else
                open_edges.push_back({i, j});
        }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (partial.x(i, j, k) >= 0) tri_known[T(i, j, k)] = tri_fixed[T(i, j, k)] = 1;
    std::sort(open_edges.begin(), open_edges.end(), [](auto a, auto b) {
        return a.second != b.second ? a.second < b.second : a.first > b.first;
    });

    auto attach_tetras = [&](Step& st) {
        int tri[3] = {st.i, st.j, st.k};
        for (int l = 0; l <= n; ++l) {
            if (l == tri[0] || l == tri[1] || l == tri[2]) continue;
            std::array<int, 4> q = {tri[0], tri[1], tri[2], l};
            std::sort(q.begin(), q.end());
            if (tetra_done[Q(q[0], q[1], q[2], q[3])]) continue;
            if (tri_known[T(q[0], q[1], q[2])] && tri_known[T(q[0], q[1], q[3])] && tri_known[T(q[0], q[2], q[3])] &&
                tri_known[T(q[1], q[2], q[3])]) {
                tetra_done[Q(q[0], q[1], q[2], q[3])] = 1;
                st.tetras.push_back(q);
            }
        }
    };
    auto schedule_triangles = [&] {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    if (tri_known[T(i, j, k)]) continue;
                    if (!edge_known[E(i, j)] || !edge_known[E(j, k)] || !edge_known[E(i, k)]) continue;
                    tri_known[T(i, j, k)] = 1;
                    steps.push_back({2, i, j, k, {}});
                    attach_tetras(steps.back());
                }
    };
    schedule_triangles();
    for (auto [i, j] : open_edges) {
        edge_known[E(i, j)] = 1;
        steps.push_back({1, i, j, -1, {}});
        schedule_triangles();
    }

    GSimplex s = partial;
    std::function<void(size_t)> rec = [&](size_t at) {
        if (at == steps.size()) {
            GSimplex full = s;
            fill_degenerate(C, full);
            out(full);
            return;
        }
        const Step& st = steps[at];
        auto check = [&] {
            for (const auto& q : st.tetras)
                if (!tetrahedron_ok(C, s, q[0], q[1], q[2], q[3])) return false;
            return true;
        };
        if (st.kind == 0) {
            for (int x = 0; x < C.num_objects(); ++x) {
                budget.spend();
                s.x(st.i) = x;
                rec(at + 1);
            }
            s.x(st.i) = -1;
        } else if (st.kind == 1) {
            for (int u : C.hom(s.x(st.j), s.x(st.i))) {
                budget.spend();
                s.x(st.i, st.j) = u;
                rec(at + 1);
            }
            s.x(st.i, st.j) = -1;
        } else {
            int f = C.hcomp1(s.x(st.i, st.j), s.x(st.j, st.k));
            if (f < 0) return;
            for (int a : C.cells2_between(f, s.x(st.i, st.k))) {
                budget.spend();
                s.x(st.i, st.j, st.k) = a;
                if (check()) rec(at + 1);
            }
            s.x(st.i, st.j, st.k) = -1;
        }
    };
    rec(0);
}

TruncSimplicialSet geometric_nerve(const TwoCategory& C, int cap) {
    Budget b;
    return geometric_nerve(C, cap, b);
}

TruncSimplicialSet geometric_nerve(const TwoCategory& C, int cap, Budget& budget) {
    if (cap < 1) throw Error("CapTooSmall", "geometric nerve needs cap >= 1");
    std::vector<std::vector<Key>> keys(cap + 1);
    for (int x = 0; x < C.num_objects(); ++x) keys[0].push_back({x});
    for (int n = 1; n <= cap; ++n) {
        for (const Key& zk : keys[n - 1]) {
            GSimplex z = simplex_from_key(C, n - 1, zk);
            GSimplex p(n);
            for (int i = 0; i < n; ++i) p.x(i + 1) = z.x(i);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) p.x(i + 1, j + 1) = z.x(i, j);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) p.x(i + 1, j + 1, k + 1) = z.x(i, j, k);
            complete_simplex(C, p, budget, [&](const GSimplex& s) { keys[n].push_back(s.key()); });
        }
        std::sort(keys[n].begin(), keys[n].end());
    }
    auto face = [&](int n, int i, const Key& k) { return precompose(simplex_from_key(C, n, k), coface(n, i)).key(); };
    auto degen = [&](int n, int i, const Key& k) {
        return precompose(simplex_from_key(C, n, k), codegeneracy(n, i)).key();
    };
    return assemble(cap, std::move(keys), face, degen);
}

SimplicialMap geometric_nerve_map(const NormalLaxFunctor& F, const TruncSimplicialSet& dS,
                                  const TruncSimplicialSet& dT) {
    const TwoCategory& S = *F.src;
    const TwoCategory& T = *F.tgt;
    SimplicialMap f;
    int cap = std::min(dS.cap, dT.cap);
    for (int n = 0; n <= cap; ++n) {
        f.map.emplace_back();
        for (const Key& k : dS.keys[n]) {
            GSimplex x = simplex_from_key(S, n, k);
            GSimplex y(n);
            for (int i = 0; i <= n; ++i) y.x(i) = F.obj[x.x(i)];
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) y.x(i, j) = F.c1[x.x(i, j)];
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int l = j + 1; l <= n; ++l) {
                        int c = F.F_uv(x.x(i, j), x.x(j, l));
                        y.x(i, j, l) = c < 0 ? -1 : T.vcomp(F.c2[x.x(i, j, l)], c);
                    }
            int t = dT.find(n, y.key());
            if (t < 0) throw Error("TargetSimplexMissing", "image of a " + std::to_string(n) + "-simplex");
            f.map[n].push_back(t);
        }
    }
    return f;
}

TruncSimplicialSet nerve_category(const Category& C, int cap) {
    std::vector<std::vector<Key>> keys(cap + 1);
    for (int x = 0; x < C.num_objects(); ++x) keys[0].push_back({x});
    for (int n = 1; n <= cap; ++n) {
        for (const Key& k : keys[n - 1]) {
            int last = n == 1 ? k[0] : C.src(k.back());
            for (int a : C.into(last)) {
                Key e = k;
                e.push_back(a);
                keys[n].push_back(std::move(e));
            }
        }
        std::sort(keys[n].begin(), keys[n].end());
    }
    auto vertex = [&](const Key& k, int i) { return i == 0 ? k[0] : C.src(k[i]); };
    auto face = [&](int n, int i, const Key& k) {
        Key out;
        if (i == 0) {
            out.push_back(vertex(k, 1));
            out.insert(out.end(), k.begin() + 2, k.end());
        } else if (i == n) {
            out.assign(k.begin(), k.end() - 1);
        } else {
            out.assign(k.begin(), k.begin() + i);
            int g = C.comp(k[i], k[i + 1]);
            if (g < 0) throw Error("MissingTableEntry", "composite in nerve face");
            out.push_back(g);
            out.insert(out.end(), k.begin() + i + 2, k.end());
        }
        return out;
    };
    auto degen = [&](int, int i, const Key& k) {
        Key out = k;
        out.insert(out.begin() + i + 1, C.id(vertex(k, i)));
        return out;
    };
    return assemble(cap, std::move(keys), face, degen);
}

void link_simplicial_category(SimplicialCategory& S, const KeyMap& obj_face, const KeyMap& arr_face,
                              const KeyMap& obj_degen, const KeyMap& arr_degen) {
    int cap = S.cap;
    S.obj_index.assign(cap + 1, {});
    S.arr_index.assign(cap + 1, {});
    for (int n = 0; n <= cap; ++n) {
        for (size_t o = 0; o < S.obj_keys[n].size(); ++o) S.obj_index[n][S.obj_keys[n][o]] = static_cast<int>(o);
        for (size_t a = 0; a < S.arr_keys[n].size(); ++a) S.arr_index[n][S.arr_keys[n][a]] = static_cast<int>(a);
    }
    auto look = [](const std::unordered_map<Key, int, KeyHash>& m, const Key& k) {
        auto it = m.find(k);
        if (it == m.end()) throw Error("TargetSimplexMissing", "simplicial category operator leaves its level");
        return it->second;
    };
    auto make = [&](int n, int i, int to, const KeyMap& of, const KeyMap& af) {
        CatFunctor F;
        for (const Key& k : S.obj_keys[n]) F.obj.push_back(look(S.obj_index[to], of(n, i, k)));
        for (const Key& k : S.arr_keys[n]) F.arr.push_back(look(S.arr_index[to], af(n, i, k)));
        return F;
    };
    S.face.assign(cap + 1, {});
    S.degen.assign(cap + 1, {});
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i) S.face[n].push_back(make(n, i, n - 1, obj_face, arr_face));
    for (int n = 0; n < cap; ++n)
        for (int i = 0; i <= n; ++i) S.degen[n].push_back(make(n, i, n + 1, obj_degen, arr_degen));
}

ValidationReport validate_simplicial_category(const SimplicialCategory& S) {
    ValidationReport r;
    for (int n = 0; n <= S.cap; ++n) r.merge(validate_category(S.levels[n]), "level " + std::to_string(n) + ": ");
    auto check_functor = [&](const CatFunctor& F, const Category& A, const Category& B, const std::string& what) {
        for (int f = 0; f < A.num_arrows(); ++f)
            if (B.src(F.arr[f]) != F.obj[A.src(f)] || B.tgt(F.arr[f]) != F.obj[A.tgt(f)])
                r.add("BoundaryMismatch", what + " on arrow " + std::to_string(f));
        for (int x = 0; x < A.num_objects(); ++x)
            if (F.arr[A.id(x)] != B.id(F.obj[x])) r.add("FunctorialityViolation", what + " identity");
        for (int g = 0; g < A.num_arrows(); ++g)
            for (int f : A.into(A.src(g)))
                if (F.arr[A.comp(g, f)] != B.comp(F.arr[g], F.arr[f]))
                    r.add("FunctorialityViolation", what + " composite");
    };
    for (int n = 1; n <= S.cap; ++n)
        for (int i = 0; i <= n; ++i)
            check_functor(S.face[n][i], S.levels[n], S.levels[n - 1],
                          "d" + std::to_string(i) + " at level " + std::to_string(n));
    for (int n = 0; n < S.cap; ++n)
        for (int i = 0; i <= n; ++i)
            check_functor(S.degen[n][i], S.levels[n], S.levels[n + 1],
                          "s" + std::to_string(i) + " at level " + std::to_string(n));
    r.merge(audit_simplicial_family(
                S.cap, [&](int n) { return S.levels[n].num_objects(); },
                [&](int n, int i, int x) { return S.face[n][i].obj[x]; },
                [&](int n, int i, int x) { return S.degen[n][i].obj[x]; }),
            "objects: ");
    r.merge(audit_simplicial_family(
                S.cap, [&](int n) { return S.levels[n].num_arrows(); },
                [&](int n, int i, int x) { return S.face[n][i].arr[x]; },
                [&](int n, int i, int x) { return S.degen[n][i].arr[x]; }),
            "arrows: ");
    return r;
}

SimplicialCategory nerve_two_category(const TwoCategory& C, int cap) {
    SimplicialCategory S;
    S.cap = cap;
    S.levels.resize(cap + 1);
    S.obj_keys.resize(cap + 1);
    S.arr_keys.resize(cap + 1);
    std::vector<std::vector<int>> out2(C.num_cells1());
    for (int a = 0; a < C.num_cells2(); ++a) out2[C.src2(a)].push_back(a);

    for (int p = 0; p <= cap; ++p) {
        auto& objs = S.obj_keys[p];
        if (p == 0) {
            for (int x = 0; x < C.num_objects(); ++x) objs.push_back({x});
        } else {
            for (const Key& k : S.obj_keys[p - 1]) {
                int last = p == 1 ? k[0] : C.src1(k.back());
                for (int u : C.cells1_into(last)) {
                    Key e = k;
                    e.push_back(u);
                    objs.push_back(std::move(e));
                }
            }
            std::sort(objs.begin(), objs.end());
        }
        Category& L = S.levels[p];
        std::unordered_map<Key, int, KeyHash> oidx;
        for (const Key& k : objs) oidx[k] = L.add_object();
        auto& arrs = S.arr_keys[p];
        arrs.resize(L.num_arrows());
        std::unordered_map<Key, int, KeyHash> aidx;
        for (const Key& k : objs) {
            // identity tuple goes to the automatic identity arrow
            Key idk{k[0]};
            for (int i = 1; i <= p; ++i) idk.push_back(C.id2(k[i]));
            int o = oidx[k];
            arrs[L.id(o)] = idk;
            aidx[idk] = L.id(o);
            Key cur{k[0]};
            std::function<void(int)> rec = [&](int i) {
                if (i > p) {
                    if (aidx.count(cur)) return;
                    Key tk{k[0]};
                    for (int j = 1; j <= p; ++j) tk.push_back(C.tgt2(cur[j]));
                    int a = L.add_arrow("", o, oidx.at(tk));
                    arrs.push_back(cur);
                    aidx[cur] = a;
                    return;
                }
                for (int al : out2[k[i]]) {
                    cur.push_back(al);
                    rec(i + 1);
                    cur.pop_back();
                }
            };
            rec(1);
        }
        for (int g = 0; g < L.num_arrows(); ++g)
            for (int f : L.into(L.src(g))) {
                Key h{arrs[g][0]};
                for (int i = 1; i <= p; ++i) h.push_back(C.vc(arrs[g][i], arrs[f][i]));
                L.set_comp(g, f, aidx.at(h));
            }
    }
    // x_i of an object key, or of an arrow key through the source of its 2-cells
    auto obj_vertex = [&](const Key& k, int i) { return i == 0 ? k[0] : C.src1(k[i]); };
    auto arr_vertex = [&](const Key& k, int i) { return i == 0 ? k[0] : C.src1(C.src2(k[i])); };
    auto face_with = [](auto vertex, auto comp) {
        return [vertex, comp](int n, int i, const Key& k) {
            Key out;
            if (i == 0) {
                out.push_back(vertex(k, 1));
                out.insert(out.end(), k.begin() + 2, k.end());
            } else if (i == n) {
                out.assign(k.begin(), k.end() - 1);
            } else {
                out.assign(k.begin(), k.begin() + i);
                out.push_back(comp(k[i], k[i + 1]));
                out.insert(out.end(), k.begin() + i + 2, k.end());
            }
            return out;
        };
    };
    auto obj_face = face_with(obj_vertex, [&](int u, int v) { return C.hc1(u, v); });
    auto arr_face = face_with(arr_vertex, [&](int a, int b) { return C.hc2(a, b); });
    auto obj_degen = [&](int, int i, const Key& k) {
        Key out = k;
        out.insert(out.begin() + i + 1, C.id1(obj_vertex(k, i)));
        return out;
    };
    auto arr_degen = [&](int, int i, const Key& k) {
        Key out = k;
        out.insert(out.begin() + i + 1, C.id2(C.id1(arr_vertex(k, i))));
        return out;
    };
    link_simplicial_category(S, obj_face, arr_face, obj_degen, arr_degen);
    return S;
}

TruncBisimplicialSet levelwise_nerve(const SimplicialCategory& S) {
    int cap = S.cap;
    std::vector<TruncSimplicialSet> N;
    for (int p = 0; p <= cap; ++p) N.push_back(nerve_category(S.levels[p], cap));
    TruncBisimplicialSet B;
    resize_bisimplicial(B, cap);
    auto apply = [](const CatFunctor& F, const Key& k) {
        Key out{F.obj[k[0]]};
        for (size_t j = 1; j < k.size(); ++j) out.push_back(F.arr[k[j]]);
        return out;
    };
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            B.keys[p][q] = N[p].keys[q];
            if (q >= 1) B.vface[p][q] = N[p].face[q];
            if (q < cap) B.vdeg[p][q] = N[p].degen[q];
            int sz = N[p].size(q);
            if (p >= 1) {
                B.hface[p][q].assign(p + 1, std::vector<int>(sz));
                for (int i = 0; i <= p; ++i)
                    for (int s = 0; s < sz; ++s) {
                        int t = N[p - 1].find(q, apply(S.face[p][i], N[p].keys[q][s]));
                        if (t < 0) throw Error("TargetSimplexMissing", "horizontal face");
                        B.hface[p][q][i][s] = t;
                    }
            }
            if (p < cap) {
                B.hdeg[p][q].assign(p + 1, std::vector<int>(sz));
                for (int i = 0; i <= p; ++i)
                    for (int s = 0; s < sz; ++s) {
                        int t = N[p + 1].find(q, apply(S.degen[p][i], N[p].keys[q][s]));
                        if (t < 0) throw Error("TargetSimplexMissing", "horizontal degeneracy");
                        B.hdeg[p][q][i][s] = t;
                    }
            }
        }
    return B;
}

TruncBisimplicialSet double_nerve(const TwoCategory& C, int cap) {
    return levelwise_nerve(nerve_two_category(C, cap));
}

Cylinder cylinder_lax_functor(const LaxTransformation& t) {
    if (!validate_lax_transformation(t).ok())
        throw Error("InvalidTransformation", "cylinder needs a valid transformation");
    const NormalLaxFunctor& F = t.F;
    const NormalLaxFunctor& G = t.G;
    const TwoCategory& B = *F.src;
    const TwoCategory& C = *F.tgt;
    Category I = ordinal(1);
    const int id0 = I.id(0), id1 = I.id(1), cross = 2;  // cross: 1 -> 0
    ProductIndex ix;
    auto P = std::make_shared<TwoCategory>(product_with_category(B, I, &ix));
    Cylinder cyl;
    NormalLaxFunctor& H = cyl.H;
    H.src = P;
    H.tgt = F.tgt;
    H.obj.assign(P->num_objects(), -1);
    H.c1.assign(P->num_cells1(), -1);
    H.c2.assign(P->num_cells2(), -1);
    for (int x = 0; x < B.num_objects(); ++x) {
        H.obj[ix.obj[x * 2 + 0]] = G.obj[x];
        H.obj[ix.obj[x * 2 + 1]] = F.obj[x];
    }
    auto w = [&](int b, int a) { return C.hc2(b, a); };
    auto I2 = [&](int u) { return C.id2(u); };
    for (int u = 0; u < B.num_cells1(); ++u) {
        int x = B.src1(u), y = B.tgt1(u);
        H.c1[ix.c1[u * 3 + id0]] = G.c1[u];
        H.c1[ix.c1[u * 3 + id1]] = F.c1[u];
        H.c1[ix.c1[u * 3 + cross]] = t.oplax ? C.hc1(t.comp1[y], F.c1[u]) : C.hc1(G.c1[u], t.comp1[x]);
    }
    for (int a = 0; a < B.num_cells2(); ++a) {
        int u = B.src2(a);
        int x = B.src1(u), y = B.tgt1(u);
        H.c2[ix.c2[a * 3 + id0]] = G.c2[a];
        H.c2[ix.c2[a * 3 + id1]] = F.c2[a];
        H.c2[ix.c2[a * 3 + cross]] = t.oplax ? w(I2(t.comp1[y]), F.c2[a]) : w(G.c2[a], I2(t.comp1[x]));
    }
    // constraints for (u, f) o (v, g), u: y -> z, v: x -> y
    for (int u = 0; u < B.num_cells1(); ++u)
        for (int v : B.cells1_into(B.src1(u))) {
            int x = B.src1(v), z = B.tgt1(u);
            int ax = t.comp1[x], az = t.comp1[z];
            auto set = [&](int f, int g, int c) { H.constraint[pair_key(ix.c1[u * 3 + f], ix.c1[v * 3 + g])] = c; };
            set(id1, id1, F.F_uv(u, v));
            set(id0, id0, G.F_uv(u, v));
            if (!t.oplax) {
                set(id0, cross, w(G.F_uv(u, v), I2(ax)));
                set(cross, id1, C.vc(w(G.F_uv(u, v), I2(ax)), w(I2(G.c1[u]), t.comp2[v])));
            } else {
                set(cross, id1, w(I2(az), F.F_uv(u, v)));
                set(id0, cross, C.vc(w(I2(az), F.F_uv(u, v)), w(t.comp2[u], I2(F.c1[v]))));
            }
        }
    auto inclusion = [&](int end) {
        TwoFunctor J{F.src, P, {}, {}, {}};
        int f = end == 0 ? id0 : id1;
        for (int x = 0; x < B.num_objects(); ++x) J.obj.push_back(ix.obj[x * 2 + end]);
        for (int u = 0; u < B.num_cells1(); ++u) J.c1.push_back(ix.c1[u * 3 + f]);
        for (int a = 0; a < B.num_cells2(); ++a) J.c2.push_back(ix.c2[a * 3 + f]);
        return J;
    };
    cyl.incl0 = inclusion(0);
    cyl.incl1 = inclusion(1);
    return cyl;
}

}  // namespace twocat
