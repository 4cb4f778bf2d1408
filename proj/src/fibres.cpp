#include "twocat/fibres.hpp"

#include <algorithm>

namespace twocat {

namespace {

// base, base', base'', ... so that enumeration order fixes every name
std::string fresh1(const TwoCategory& C, const std::string& base) {
    std::string n = base;
    while (C.find_cell1(n) || C.find_object(n) || C.find_cell2(n)) n += "'";
    return n;
}

std::string fresh2(const TwoCategory& C, const std::string& base) { return fresh1(C, base); }

Key cat_key(Key head, const Key& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

// Writes s into p along the vertex map m: [dim s] -> [dim p].
void embed(GSimplex& p, const GSimplex& s, const std::vector<int>& m) {
    for (int a = 0; a <= s.n; ++a) p.x(m[a]) = s.x(a);
    for (int a = 0; a <= s.n; ++a)
        for (int b = a + 1; b <= s.n; ++b) p.x(m[a], m[b]) = s.x(a, b);
    for (int a = 0; a <= s.n; ++a)
        for (int b = a + 1; b <= s.n; ++b)
            for (int c = b + 1; c <= s.n; ++c) p.x(m[a], m[b], m[c]) = s.x(a, b, c);
}

std::vector<int> shift(int n, int by) {
    std::vector<int> m;
    for (int a = 0; a <= n; ++a) m.push_back(a + by);
    return m;
}

std::vector<int> skip(int n, int i) { return coface(n + 1, i); }

}  // namespace

ObjectFibre object_fibre(const TwoFunctor& F, int z, Side side) {
    const TwoCategory& B = *F.src;
    const TwoCategory& C = *F.tgt;
    if (z < 0 || z >= C.num_objects()) throw Error("UnknownObject", "fibre base object");
    bool over = side == Side::over;
    ObjectFibre fib;
    fib.side = side;
    fib.z = z;
    KeyedTwoCategory& K = fib.K;
    TwoCategory& T = *K.cat;

    for (int x = 0; x < B.num_objects(); ++x) {
        const auto& vs = over ? C.hom(z, F.obj[x]) : C.hom(F.obj[x], z);
        for (int v : vs) {
            int o = K.add_object({x, v}, "(" + B.object_name(x) + "," + C.cell1(v).name + ")");
            K.alias_cell1({o, o, B.id1(x), C.id2(v)}, T.id1(o));
        }
    }
    int nobj = T.num_objects();
    for (int o = 0; o < nobj; ++o)
        for (int o2 = 0; o2 < nobj; ++o2) {
            int x = K.obj_keys[o][0], v = K.obj_keys[o][1];
            int x2 = K.obj_keys[o2][0], v2 = K.obj_keys[o2][1];
            for (int u : B.hom(x, x2)) {
                int s = over ? C.hcomp1(F.c1[u], v) : C.hcomp1(v2, F.c1[u]);
                int t = over ? v2 : v;
                for (int b : C.cells2_between(s, t)) {
                    Key k{o, o2, u, b};
                    if (K.c1(k) >= 0) continue;
                    K.add_cell1(k, o, o2, fresh1(T, "(" + B.cell1(u).name + "," + C.cell2(b).name + ")"));
                }
            }
        }
    int n1 = T.num_cells1();
    for (int p = 0; p < n1; ++p)
        for (int p2 : T.hom(T.src1(p), T.tgt1(p))) {
            const Key &kp = K.c1_keys[p], &kp2 = K.c1_keys[p2];
            int v = K.obj_keys[kp[0]][1], v2 = K.obj_keys[kp[1]][1];
            for (int al : B.cells2_between(kp[2], kp2[2])) {
                int lhs = over ? C.vcomp(kp2[3], C.hcomp2(F.c2[al], C.id2(v)))
                               : C.vcomp(kp2[3], C.hcomp2(C.id2(v2), F.c2[al]));
                if (lhs != kp[3]) continue;
                Key k{p, p2, al};
                if (p == p2 && B.is_id2(al)) {
                    K.alias_cell2(k, T.id2(p));
                    continue;
                }
                K.add_cell2(k, p, p2,
                            fresh2(T, "[" + B.cell2(al).name + ";" + T.cell1(p).name + ";" + T.cell1(p2).name + "]"));
            }
        }
    K.fill_tables(
        [&](int P2, int P) {
            const Key &a = K.c1_keys[P], &b = K.c1_keys[P2];
            int u = a[2], u2 = b[2];
            int fu = F.c1[u], fu2 = F.c1[u2];
            int beta = over ? C.vc(b[3], C.hc2(C.id2(fu2), a[3])) : C.vc(a[3], C.hc2(b[3], C.id2(fu)));
            return Key{a[0], b[1], B.hc1(u2, u), beta};
        },
        [&](int bb, int aa) { return Key{K.c2_keys[aa][0], K.c2_keys[bb][1], B.vc(K.c2_keys[bb][2], K.c2_keys[aa][2])}; },
        [&](int bb, int aa) {
            const Key &a = K.c2_keys[aa], &b = K.c2_keys[bb];
            return Key{T.hcomp1(b[0], a[0]), T.hcomp1(b[1], a[1]), B.hc2(b[2], a[2])};
        });
    for (const Key& k : K.obj_keys) fib.obj_base.push_back(k[0]), fib.obj_v.push_back(k[1]);
    for (const Key& k : K.c1_keys) fib.c1_base.push_back(k[2]), fib.c1_beta.push_back(k[3]);
    for (const Key& k : K.c2_keys) fib.c2_base.push_back(k[2]);
    return fib;
}

ObjectFibre fibre_over(const TwoFunctor& F, int z) { return object_fibre(F, z, Side::over); }
ObjectFibre fibre_under(const TwoFunctor& F, int z) { return object_fibre(F, z, Side::under); }

namespace {

// Vertex maps of an object witness v: [q+1] and a 1-cell witness y: [q+2] relative to z.
struct Frame {
    bool over;
    int q;
    // z inside v
    std::vector<int> z_in_v() const { return over ? shift(q, 1) : shift(q, 0); }
    int base_vertex() const { return over ? 0 : q + 1; }
    // src and tgt object witnesses inside y
    std::vector<int> src_in_y() const { return over ? skip(q + 1, 0) : skip(q + 1, q + 1); }
    std::vector<int> tgt_in_y() const { return over ? skip(q + 1, 1) : skip(q + 1, q + 2); }
    int ya() const { return over ? 0 : q + 1; }  // y(ya, yb) = Fu
    int yb() const { return over ? 1 : q + 2; }
    std::vector<int> identity_degeneracy() const { return codegeneracy(q + 1, over ? 0 : q + 1); }
    // the free 2-cells of y, y(0,1,k) or y(i,q+1,q+2), indexed by i = 0..q
    int& free_cell(GSimplex& y, int i) const { return over ? y.x(0, 1, i + 2) : y.x(i, q + 1, q + 2); }
    int free_cell(const GSimplex& y, int i) const { return over ? y.x(0, 1, i + 2) : y.x(i, q + 1, q + 2); }
};

std::string witness_name(const TwoCategory& C, const GSimplex& v, const Frame& fr) {
    std::string s;
    int q = fr.q;
    auto add = [&](const std::string& n) { s += "," + n; };
    if (fr.over) {
        for (int i = 1; i <= q + 1; ++i) add(C.cell1(v.x(0, i)).name);
        for (int i = 1; i <= q + 1; ++i)
            for (int j = i + 1; j <= q + 1; ++j) add(C.cell2(v.x(0, i, j)).name);
    } else {
        for (int i = 0; i <= q; ++i) add(C.cell1(v.x(i, q + 1)).name);
        for (int i = 0; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j) add(C.cell2(v.x(i, j, q + 1)).name);
    }
    return s;
}

std::string simplex_label(const TwoCategory& C, const GSimplex& z) {
    std::string s;
    for (int i = 0; i <= z.n; ++i) s += (i ? "," : "") + C.object_name(z.x(i));
    for (int i = 0; i <= z.n; ++i)
        for (int j = i + 1; j <= z.n; ++j) s += "," + C.cell1(z.x(i, j)).name;
    for (int i = 0; i <= z.n; ++i)
        for (int j = i + 1; j <= z.n; ++j)
            for (int k = j + 1; k <= z.n; ++k) s += "," + C.cell2(z.x(i, j, k)).name;
    return "<" + s + ">";
}

SimplexFibre build_simplex_fibre(const TwoFunctor& F, std::vector<GSimplex> zs, int q, Side side, bool label_z,
                                 Budget& budget) {
    const TwoCategory& B = *F.src;
    const TwoCategory& C = *F.tgt;
    Frame fr{side == Side::over, q};
    SimplexFibre fib;
    fib.side = side;
    fib.q = q;
    fib.zs = std::move(zs);
    KeyedTwoCategory& K = fib.K;
    TwoCategory& T = *K.cat;

    for (int zi = 0; zi < static_cast<int>(fib.zs.size()); ++zi) {
        const GSimplex& z = fib.zs[zi];
        if (z.n != q || !validate_simplex(C, z).ok()) throw Error("InvalidSimplex", "fibre base simplex");
        for (int x = 0; x < B.num_objects(); ++x) {
            GSimplex p(q + 1);
            embed(p, z, fr.z_in_v());
            p.x(fr.base_vertex()) = F.obj[x];
            complete_simplex(C, p, budget, [&](const GSimplex& v) {
                std::string name = "(" + B.object_name(x) + witness_name(C, v, fr) + ")";
                if (label_z) name += "@" + simplex_label(C, z);
                int o = K.add_object(cat_key({zi, x}, v.key()), name);
                fib.obj_label.push_back(zi);
                fib.obj_base.push_back(x);
                fib.obj_witness.push_back(v);
                GSimplex y = precompose(v, fr.identity_degeneracy());
                K.alias_cell1(cat_key({o, o, B.id1(x)}, y.key()), T.id1(o));
            });
        }
    }
    int nobj = T.num_objects();
    for (int o = 0; o < nobj; ++o)
        for (int o2 = 0; o2 < nobj; ++o2) {
            if (fib.obj_label[o] != fib.obj_label[o2]) continue;
            for (int u : B.hom(fib.obj_base[o], fib.obj_base[o2])) {
                GSimplex p(q + 2);
                embed(p, fib.obj_witness[o], fr.src_in_y());
                embed(p, fib.obj_witness[o2], fr.tgt_in_y());
                p.x(fr.ya(), fr.yb()) = F.c1[u];
                complete_simplex(C, p, budget, [&](const GSimplex& y) {
                    Key k = cat_key({o, o2, u}, y.key());
                    if (K.c1(k) >= 0) return;
                    std::string name = "(" + B.cell1(u).name;
                    for (int i = 0; i <= q; ++i) name += "," + C.cell2(fr.free_cell(y, i)).name;
                    K.add_cell1(k, o, o2, fresh1(T, name + ")"));
                });
            }
        }
    // decode 1-cell witnesses
    auto witness1 = [&](int P) {
        const Key& k = K.c1_keys[P];
        return simplex_from_key(C, q + 2, Key(k.begin() + 3, k.end()));
    };
    int n1 = T.num_cells1();
    std::vector<GSimplex> ys;
    for (int P = 0; P < n1; ++P) ys.push_back(witness1(P));
    for (int P = 0; P < n1; ++P)
        for (int P2 : T.hom(T.src1(P), T.tgt1(P))) {
            int u = K.c1_keys[P][2], u2 = K.c1_keys[P2][2];
            for (int al : B.cells2_between(u, u2)) {
                bool ok = true;
                for (int i = 0; i <= q && ok; ++i) {
                    int lhs;
                    if (fr.over)
                        lhs = C.vcomp(fr.free_cell(ys[P2], i), C.hcomp2(F.c2[al], C.id2(ys[P].x(1, i + 2))));
                    else
                        lhs = C.vcomp(fr.free_cell(ys[P2], i), C.hcomp2(C.id2(ys[P].x(i, q + 1)), F.c2[al]));
                    ok = lhs == fr.free_cell(ys[P], i);
                }
                if (!ok) continue;
                Key k{P, P2, al};
                if (P == P2 && B.is_id2(al)) {
                    K.alias_cell2(k, T.id2(P));
                    continue;
                }
                K.add_cell2(k, P, P2,
                            fresh2(T, "[" + B.cell2(al).name + ";" + T.cell1(P).name + ";" + T.cell1(P2).name + "]"));
            }
        }
    K.fill_tables(
        [&](int P2, int P) {
            const GSimplex &y = ys[P], &y2 = ys[P2];
            int o = T.src1(P), o3 = T.tgt1(P2);
            int u = K.c1_keys[P][2], u2 = K.c1_keys[P2][2];
            int uu = B.hc1(u2, u);
            GSimplex c(q + 2);
            embed(c, fib.obj_witness[o], fr.src_in_y());
            embed(c, fib.obj_witness[o3], fr.tgt_in_y());
            c.x(fr.ya(), fr.yb()) = F.c1[uu];
            for (int i = 0; i <= q; ++i) {
                if (fr.over)
                    fr.free_cell(c, i) = C.vc(fr.free_cell(y2, i), C.hc2(C.id2(F.c1[u2]), fr.free_cell(y, i)));
                else
                    fr.free_cell(c, i) = C.vc(fr.free_cell(y, i), C.hc2(fr.free_cell(y2, i), C.id2(F.c1[u])));
            }
            fill_degenerate(C, c);
            return cat_key({o, o3, uu}, c.key());
        },
        [&](int bb, int aa) { return Key{K.c2_keys[aa][0], K.c2_keys[bb][1], B.vc(K.c2_keys[bb][2], K.c2_keys[aa][2])}; },
        [&](int bb, int aa) {
            const Key &a = K.c2_keys[aa], &b = K.c2_keys[bb];
            return Key{T.hcomp1(b[0], a[0]), T.hcomp1(b[1], a[1]), B.hc2(b[2], a[2])};
        });
    fib.c1_witness = std::move(ys);
    for (const Key& k : K.c1_keys) fib.c1_base.push_back(k[2]);
    for (const Key& k : K.c2_keys) fib.c2_base.push_back(k[2]);
    return fib;
}

}  // namespace

SimplexFibre simplex_fibre(const TwoFunctor& F, const GSimplex& z, Side side, Budget& budget) {
    return build_simplex_fibre(F, {z}, z.n, side, false, budget);
}

SimplexFibre simplex_fibre(const TwoFunctor& F, const GSimplex& z, Side side) {
    Budget b;
    return simplex_fibre(F, z, side, b);
}

SimplexFibre whole_simplex_fibre(const TwoFunctor& F, int q, Side side, Budget& budget) {
    const TwoCategory& C = *F.tgt;
    TruncSimplicialSet N = geometric_nerve(C, std::max(q, 1), budget);
    std::vector<GSimplex> zs;
    for (const Key& k : N.keys[q]) zs.push_back(simplex_from_key(C, q, k));
    return build_simplex_fibre(F, std::move(zs), q, side, true, budget);
}

TwoFunctor phi_forget(const TwoFunctor& F, const SimplexFibre& fib) {
    return TwoFunctor{fib.ptr(), F.src, fib.obj_base, fib.c1_base, fib.c2_base};
}

TwoFunctor phi_forget(const TwoFunctor& F, const ObjectFibre& fib) {
    return TwoFunctor{fib.ptr(), F.src, fib.obj_base, fib.c1_base, fib.c2_base};
}

const std::vector<int>& psi_label(const SimplexFibre& fib) { return fib.obj_label; }

namespace {

int need(int r, const char* what) {
    if (r < 0) throw Error("TargetCellMissing", what);
    return r;
}

// Maps 2-cells of a fibre whose keys are (src 1-cell, tgt 1-cell, alpha) given the 1-cell map.
void map_fibre_cells2(TwoFunctor& G, const KeyedTwoCategory& from, const KeyedTwoCategory& to) {
    for (const Key& k : from.c2_keys) G.c2.push_back(need(to.c2({G.c1[k[0]], G.c1[k[1]], k[2]}), "2-cell image"));
}

}  // namespace

TwoFunctor w_star(const TwoFunctor& F, const ObjectFibre& from, const ObjectFibre& to, int w) {
    const TwoCategory& C = *F.tgt;
    if (w < 0 || w >= C.num_cells1()) throw Error("UnknownCell", "w");
    bool over = from.side == Side::over;
    if (from.side != to.side) throw Error("SideMismatch", "w*");
    if (over ? (C.tgt1(w) != from.z || C.src1(w) != to.z) : (C.src1(w) != from.z || C.tgt1(w) != to.z))
        throw Error("BoundaryMismatch", "w does not connect the fibre bases");
    TwoFunctor G{from.ptr(), to.ptr(), {}, {}, {}};
    for (const Key& k : from.K.obj_keys)
        G.obj.push_back(need(to.K.obj({k[0], over ? C.hc1(k[1], w) : C.hc1(w, k[1])}), "object image"));
    for (const Key& k : from.K.c1_keys) {
        int b = over ? C.hc2(k[3], C.id2(w)) : C.hc2(C.id2(w), k[3]);
        G.c1.push_back(need(to.K.c1({G.obj[k[0]], G.obj[k[1]], k[2], b}), "1-cell image"));
    }
    map_fibre_cells2(G, from.K, to.K);
    return G;
}

bool is_monotone(const std::vector<int>& xi, int n) {
    for (size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] < 0 || xi[i] > n) return false;
        if (i && xi[i] < xi[i - 1]) return false;
    }
    return !xi.empty();
}

GSimplex restrict_simplex(const GSimplex& z, const std::vector<int>& xi) { return precompose(z, xi); }

TwoFunctor xi_star(const TwoFunctor& F, const SimplexFibre& from, const SimplexFibre& to,
                   const std::vector<int>& xi) {
    int n = from.q, m = static_cast<int>(xi.size()) - 1;
    if (!is_monotone(xi, n)) throw Error("NonMonotone", "xi");
    if (from.zs.size() != 1 || to.zs.size() != 1 || to.q != m || from.side != to.side)
        throw Error("InvalidSimplex", "xi* needs single-simplex fibres of matching shape");
    if (restrict_simplex(from.zs[0], xi).key() != to.zs[0].key())
        throw Error("InvalidSimplex", "target fibre is not over z xi");
    bool over = from.side == Side::over;
    std::vector<int> x1, x2;
    if (over) {
        x1.push_back(0);
        x2 = {0, 1};
        for (int a : xi) x1.push_back(a + 1), x2.push_back(a + 2);
    } else {
        x1 = x2 = xi;
        x1.push_back(n + 1);
        x2.push_back(n + 1);
        x2.push_back(n + 2);
    }
    TwoFunctor G{from.ptr(), to.ptr(), {}, {}, {}};
    for (size_t o = 0; o < from.obj_witness.size(); ++o)
        G.obj.push_back(need(to.K.obj(cat_key({0, from.obj_base[o]}, precompose(from.obj_witness[o], x1).key())),
                             "object image"));
    for (size_t P = 0; P < from.c1_witness.size(); ++P) {
        const Key& k = from.K.c1_keys[P];
        G.c1.push_back(need(to.K.c1(cat_key({G.obj[k[0]], G.obj[k[1]], k[2]}, precompose(from.c1_witness[P], x2).key())),
                            "1-cell image"));
    }
    map_fibre_cells2(G, from.K, to.K);
    (void)F;
    return G;
}

GammaTheta gamma_theta(const TwoFunctor& F, const SimplexFibre& fib) {
    if (fib.zs.size() != 1) throw Error("InvalidSimplex", "gamma_theta needs a single-simplex fibre");
    const TwoCategory& B = *F.src;
    const TwoCategory& C = *F.tgt;
    const GSimplex& z = fib.zs[0];
    int q = fib.q;
    bool over = fib.side == Side::over;
    Frame fr{over, q};
    GammaTheta g;
    int e = over ? 0 : q;
    g.end = simplex_fibre(F, restrict_simplex(z, {e}), fib.side);
    g.theta = xi_star(F, fib, g.end, {e});

    // Gamma on objects: v^z
    auto extend = [&](int x, int v) {
        GSimplex w(q + 1);
        embed(w, z, fr.z_in_v());
        w.x(fr.base_vertex()) = F.obj[x];
        for (int i = 0; i <= q; ++i) {
            if (over)
                w.x(0, i + 1) = C.hc1(v, z.x(0, i));
            else
                w.x(i, q + 1) = C.hc1(z.x(i, q), v);
        }
        for (int i = 0; i <= q; ++i)
            for (int j = i + 1; j <= q; ++j) {
                if (over)
                    w.x(0, i + 1, j + 1) = C.hc2(C.id2(v), z.x(0, i, j));
                else
                    w.x(i, j, q + 1) = C.hc2(z.x(i, j, q), C.id2(v));
            }
        fill_degenerate(C, w);
        return w;
    };
    const SimplexFibre& E = g.end;
    TwoFunctor Gm{E.ptr(), fib.ptr(), {}, {}, {}};
    for (size_t o = 0; o < E.obj_witness.size(); ++o) {
        int x = E.obj_base[o];
        int v = E.obj_witness[o].x(0, 1);
        Gm.obj.push_back(need(fib.K.obj(cat_key({0, x}, extend(x, v).key())), "Gamma object"));
    }
    auto one_cell = [&](int src, int tgt, int u, auto free) {
        GSimplex y(q + 2);
        embed(y, fib.obj_witness[src], fr.src_in_y());
        embed(y, fib.obj_witness[tgt], fr.tgt_in_y());
        y.x(fr.ya(), fr.yb()) = F.c1[u];
        for (int i = 0; i <= q; ++i) fr.free_cell(y, i) = free(i);
        fill_degenerate(C, y);
        return need(fib.K.c1(cat_key({src, tgt, u}, y.key())), "fibre 1-cell");
    };
    for (size_t P = 0; P < E.c1_witness.size(); ++P) {
        const Key& k = E.K.c1_keys[P];
        int beta = E.c1_witness[P].x(0, 1, 2);
        Gm.c1.push_back(one_cell(Gm.obj[k[0]], Gm.obj[k[1]], k[2], [&](int i) {
            return over ? C.hc2(beta, C.id2(z.x(0, i))) : C.hc2(C.id2(z.x(i, q)), beta);
        }));
    }
    map_fibre_cells2(Gm, E.K, fib.K);
    g.gamma = Gm;

    TwoFunctor GT = compose(g.gamma, g.theta);
    TwoFunctor I = identity_functor(fib.ptr());
    std::vector<int> comp1;
    for (size_t o = 0; o < fib.obj_witness.size(); ++o) {
        int x = fib.obj_base[o];
        const GSimplex& v = fib.obj_witness[o];
        if (over)
            comp1.push_back(one_cell(GT.obj[o], static_cast<int>(o), B.id1(x), [&](int i) { return v.x(0, 1, i + 1); }));
        else
            comp1.push_back(one_cell(static_cast<int>(o), GT.obj[o], B.id1(x), [&](int i) { return v.x(i, q, q + 1); }));
    }
    g.r = over ? two_natural(GT, I, comp1) : two_natural(I, GT, comp1);
    return g;
}

CommaContraction comma_contraction(const TwoFunctor& F, const ObjectFibre& fib) {
    if (fib.side != Side::over) throw Error("SideMismatch", "comma contraction is built on z//C");
    const TwoCategory& C = *F.tgt;
    const TwoCategory& T = fib.cat();
    const KeyedTwoCategory& K = fib.K;
    int z = fib.z;
    int oz = need(K.obj({z, C.id1(z)}), "(z, 1_z)");
    CommaContraction out;
    TwoFunctor& Ct = out.constant;
    Ct = TwoFunctor{fib.ptr(), fib.ptr(), {}, {}, {}};
    Ct.obj.assign(T.num_objects(), oz);
    Ct.c1.assign(T.num_cells1(), T.id1(oz));
    Ct.c2.assign(T.num_cells2(), T.id2(T.id1(oz)));
    std::vector<int> comp1, comp2;
    for (int o = 0; o < T.num_objects(); ++o) {
        int v = fib.obj_v[o];
        comp1.push_back(need(K.c1({oz, o, v, C.id2(v)}), "component (v, 1_v)"));
    }
    // at (u, b): (x, v) -> (x', v') the component is b: (uv, b) => (v', 1)
    for (int P = 0; P < T.num_cells1(); ++P) {
        int from = T.hc1(P, comp1[T.src1(P)]);
        int to = comp1[T.tgt1(P)];
        comp2.push_back(need(K.c2({from, to, fib.c1_beta[P]}), "component b"));
    }
    out.t = LaxTransformation{as_lax(Ct), as_lax(identity_functor(fib.ptr())), true, comp1, comp2};
    return out;
}

}  // namespace twocat

namespace twocat {

bool FibreAudit::all_equivalences() const {
    for (const auto& e : entries)
        if (!e.report.all_agree()) return false;
    return true;
}

std::vector<std::string> FibreAudit::lines() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        bool ok = e.report.all_agree();
        out.push_back(std::string(ok ? "OK " : "FAIL ") + "w* for " + e.name + " is a homology equivalence through degree " +
                      std::to_string(e.report.a.valid_through));
        for (const auto& l : e.report.lines()) out.push_back("INFO   " + l);
    }
    return out;
}

FibreAudit audit_w_star(const TwoFunctor& F, int cap, Budget& budget) {
    const TwoCategory& C = *F.tgt;
    FibreAudit out;
    out.cap = cap;
    std::vector<ObjectFibre> fib;
    std::vector<TruncSimplicialSet> nerve;
    for (int z = 0; z < C.num_objects(); ++z) {
        fib.push_back(fibre_over(F, z));
        nerve.push_back(geometric_nerve(fib.back().cat(), cap, budget));
    }
    for (int w = 0; w < C.num_cells1(); ++w) {
        int z1 = C.src1(w), z0 = C.tgt1(w);
        TwoFunctor ws = w_star(F, fib[z0], fib[z1], w);
        SimplicialMap m = geometric_nerve_map(as_lax(ws), nerve[z0], nerve[z1]);
        out.entries.push_back({w, C.cell1(w).name, homology_compare(nerve[z0], nerve[z1], &m)});
    }
    return out;
}

}  // namespace twocat
