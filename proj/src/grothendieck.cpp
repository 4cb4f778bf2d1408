#include "twocat/grothendieck.hpp"

#include <algorithm>

namespace twocat {

namespace {

std::string fresh(const TwoCategory& C, const std::string& base) {
    std::string n = base;
    while (C.find_cell1(n) || C.find_object(n) || C.find_cell2(n)) n += "'";
    return n;
}

int need(int r, const std::string& what) {
    if (r < 0) throw Error("TargetCellMissing", what);
    return r;
}

}  // namespace

int TwoDiagram::zeta_at(int u, int v, int a) const {
    auto it = zeta.find(pair_key(u, v));
    if (it == zeta.end() || a < 0 || a >= static_cast<int>(it->second.size())) return -1;
    return it->second[a];
}

void fill_diagram_defaults(TwoDiagram& D) {
    const TwoCategory& C = *D.base;
    D.ustar.resize(C.num_cells1());
    D.astar.resize(C.num_cells2());
    for (int x = 0; x < C.num_objects(); ++x)
        if (!D.ustar[C.id1(x)].src) D.ustar[C.id1(x)] = identity_functor(D.fibre[x]);
    for (int u = 0; u < C.num_cells1(); ++u) {
        const TwoFunctor& us = D.ustar[u];
        if (!us.src) continue;
        const TwoCategory& Fy = D.F(C.src1(u));
        int al = C.id2(u);
        if (D.astar[al].empty())
            for (int a : us.obj) D.astar[al].push_back(Fy.id1(a));
    }
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) {
            if (D.zeta.count(pair_key(u, v))) continue;
            const TwoFunctor &us = D.ustar[u], &vs = D.ustar[v];
            int uv = C.hcomp1(u, v);
            if (uv < 0 || !us.src || !vs.src || !D.ustar[uv].src) continue;
            std::vector<int> comps;
            bool ok = true;
            for (int a = 0; a < D.F(C.tgt1(u)).num_objects() && ok; ++a) {
                int s = vs.obj[us.obj[a]], t = D.ustar[uv].obj[a];
                ok = s == t;
                comps.push_back(D.F(C.src1(v)).id1(s));
            }
            if (ok) D.zeta[pair_key(u, v)] = comps;
        }
}

ValidationReport validate_two_diagram(const TwoDiagram& D) {
    ValidationReport r;
    const TwoCategory& C = *D.base;
    auto n1 = [&](int u) { return C.cell1(u).name; };
    auto n2 = [&](int a) { return C.cell2(a).name; };
    if (static_cast<int>(D.fibre.size()) != C.num_objects()) {
        r.add("MissingTableEntry", "one fibre per base object");
        return r;
    }
    if (static_cast<int>(D.ustar.size()) != C.num_cells1() || static_cast<int>(D.astar.size()) != C.num_cells2()) {
        r.add("MissingTableEntry", "u* per 1-cell and al* per 2-cell");
        return r;
    }
    for (int u = 0; u < C.num_cells1(); ++u) {
        const TwoFunctor& us = D.ustar[u];
        if (!us.src || us.src.get() != D.fibre[C.tgt1(u)].get() || us.tgt.get() != D.fibre[C.src1(u)].get()) {
            r.add("BoundaryMismatch", "u* for " + n1(u) + " must go from the fibre over its target to the fibre over its source");
            continue;
        }
        r.merge(validate_two_functor(us), n1(u) + "*: ");
    }
    if (!r.ok()) return r;

    for (int x = 0; x < C.num_objects(); ++x)
        if (!same_functor(D.ustar[C.id1(x)], identity_functor(D.fibre[x])))
            r.add("UnitViolation", "(1_" + C.object_name(x) + ")* is not the identity");

    // al* components and their 2-naturality
    for (int al = 0; al < C.num_cells2(); ++al) {
        int u = C.src2(al), u2 = C.tgt2(al);
        const TwoCategory &Fx = D.F(C.tgt1(u)), &Fy = D.F(C.src1(u));
        const TwoFunctor &us = D.ustar[u], &us2 = D.ustar[u2];
        const auto& comp = D.astar[al];
        if (static_cast<int>(comp.size()) != Fx.num_objects()) {
            r.add("MissingTableEntry", n2(al) + "* components");
            continue;
        }
        bool bounds = true;
        for (int a = 0; a < Fx.num_objects(); ++a)
            if (comp[a] < 0 || comp[a] >= Fy.num_cells1() || Fy.src1(comp[a]) != us.obj[a] || Fy.tgt1(comp[a]) != us2.obj[a]) {
                r.add("BoundaryMismatch", n2(al) + "* at " + Fx.object_name(a));
                bounds = false;
            }
        if (!bounds) continue;
        if (C.is_id2(al))
            for (int a = 0; a < Fx.num_objects(); ++a)
                if (comp[a] != Fy.id1(us.obj[a])) r.add("UnitViolation", n2(al) + "* is not the identity");
        for (int f = 0; f < Fx.num_cells1(); ++f) {
            int a = Fx.src1(f), b = Fx.tgt1(f);
            if (Fy.hcomp1(comp[b], us.c1[f]) != Fy.hcomp1(us2.c1[f], comp[a]) || Fy.hcomp1(comp[b], us.c1[f]) < 0)
                r.add("NaturalityViolation", n2(al) + "* not natural at " + Fx.cell1(f).name);
        }
        for (int ph = 0; ph < Fx.num_cells2(); ++ph) {
            int f = Fx.src2(ph);
            int a = Fx.src1(f), b = Fx.tgt1(f);
            int lhs = Fy.hcomp2(Fy.id2(comp[b]), us.c2[ph]), rhs = Fy.hcomp2(us2.c2[ph], Fy.id2(comp[a]));
            if (lhs < 0 || lhs != rhs) r.add("NaturalityViolation", n2(al) + "* not natural at " + Fx.cell2(ph).name);
        }
    }
    // zeta components and their 2-naturality
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) {
            std::string at = "(" + n1(u) + ", " + n1(v) + ")";
            auto it = D.zeta.find(pair_key(u, v));
            const TwoCategory &Fz = D.F(C.tgt1(u)), &Fx = D.F(C.src1(v));
            if (it == D.zeta.end() || static_cast<int>(it->second.size()) != Fz.num_objects()) {
                r.add("MissingTableEntry", "zeta at " + at);
                continue;
            }
            const auto& comp = it->second;
            const TwoFunctor &us = D.ustar[u], &vs = D.ustar[v], &uvs = D.ustar[C.hc1(u, v)];
            bool bounds = true;
            for (int a = 0; a < Fz.num_objects(); ++a)
                if (comp[a] < 0 || comp[a] >= Fx.num_cells1() || Fx.src1(comp[a]) != vs.obj[us.obj[a]] ||
                    Fx.tgt1(comp[a]) != uvs.obj[a]) {
                    r.add("BoundaryMismatch", "zeta at " + at + " component " + Fz.object_name(a));
                    bounds = false;
                }
            if (!bounds) continue;
            if (C.is_id1(u) || C.is_id1(v))
                for (int a = 0; a < Fz.num_objects(); ++a)
                    if (comp[a] != Fx.id1(uvs.obj[a])) r.add("UnitViolation", "zeta at " + at + " is not the identity");
            for (int f = 0; f < Fz.num_cells1(); ++f) {
                int a = Fz.src1(f), b = Fz.tgt1(f);
                int lhs = Fx.hcomp1(comp[b], vs.c1[us.c1[f]]), rhs = Fx.hcomp1(uvs.c1[f], comp[a]);
                if (lhs < 0 || lhs != rhs) r.add("NaturalityViolation", "zeta at " + at + " not natural at " + Fz.cell1(f).name);
            }
            for (int ph = 0; ph < Fz.num_cells2(); ++ph) {
                int f = Fz.src2(ph);
                int a = Fz.src1(f), b = Fz.tgt1(f);
                int lhs = Fx.hcomp2(Fx.id2(comp[b]), vs.c2[us.c2[ph]]), rhs = Fx.hcomp2(uvs.c2[ph], Fx.id2(comp[a]));
                if (lhs < 0 || lhs != rhs) r.add("NaturalityViolation", "zeta at " + at + " not natural at " + Fz.cell2(ph).name);
            }
        }
    if (!r.ok()) return r;

    // (al' al)* = al'* al*
    std::vector<std::vector<int>> out2(C.num_cells1());
    for (int a = 0; a < C.num_cells2(); ++a) out2[C.src2(a)].push_back(a);
    for (int al = 0; al < C.num_cells2(); ++al)
        for (int al2 : out2[C.tgt2(al)]) {
            int u = C.src2(al);
            const TwoCategory &Fx = D.F(C.tgt1(u)), &Fy = D.F(C.src1(u));
            int c = C.vc(al2, al);
            for (int a = 0; a < Fx.num_objects(); ++a)
                if (D.astar[c][a] != Fy.hcomp1(D.astar[al2][a], D.astar[al][a]))
                    r.add("VerticalFunctorialityViolation", "(" + n2(al2) + " . " + n2(al) + ")* at " + Fx.object_name(a));
        }
    // zeta_{u',v'} b*_{u'a} v*(a*_a) = (a o b)*_a zeta_{u,v}
    for (int al = 0; al < C.num_cells2(); ++al) {
        int u = C.src2(al), u2 = C.tgt2(al);
        for (int be = 0; be < C.num_cells2(); ++be) {
            int v = C.src2(be), v2 = C.tgt2(be);
            if (C.tgt1(v) != C.src1(u)) continue;
            const TwoCategory &Fz = D.F(C.tgt1(u)), &Fx = D.F(C.src1(v));
            int ab = C.hc2(al, be);
            for (int a = 0; a < Fz.num_objects(); ++a) {
                int u2a = D.ustar[u2].obj[a];
                int lhs = Fx.hcomp1(D.zeta_at(u2, v2, a),
                                    Fx.hcomp1(D.astar[be][u2a], D.ustar[v].c1[D.astar[al][a]]));
                int rhs = Fx.hcomp1(D.astar[ab][a], D.zeta_at(u, v, a));
                if (lhs < 0 || lhs != rhs)
                    r.add("HorizontalSquareViolation", "(" + n2(al) + ", " + n2(be) + ") at " + Fz.object_name(a));
            }
        }
    }
    // zeta_{u,vw} zeta_{v,w} u* = zeta_{uv,w} w*(zeta_{u,v}), w: x -> y, v: y -> z, u: z -> t
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u)))
            for (int w : C.cells1_into(C.src1(v))) {
                const TwoCategory &Ft = D.F(C.tgt1(u)), &Fx = D.F(C.src1(w));
                int vw = C.hc1(v, w), uv = C.hc1(u, v);
                for (int a = 0; a < Ft.num_objects(); ++a) {
                    int lhs = Fx.hcomp1(D.zeta_at(u, vw, a), D.zeta_at(v, w, D.ustar[u].obj[a]));
                    int rhs = Fx.hcomp1(D.zeta_at(uv, w, a), D.ustar[w].c1[D.zeta_at(u, v, a)]);
                    if (lhs < 0 || lhs != rhs)
                        r.add("ZetaCocycleViolation", "(" + n1(u) + ", " + n1(v) + ", " + n1(w) + ") at " + Ft.object_name(a));
                }
            }
    return r;
}

Grothendieck grothendieck(const TwoDiagram& D) {
    ValidationReport rep = validate_two_diagram(D);
    if (!rep.ok()) throw Error("DiagramInvalid", rep.findings.front().kind + ": " + rep.findings.front().detail);
    const TwoCategory& C = *D.base;
    Grothendieck G;
    KeyedTwoCategory& K = G.K;
    TwoCategory& T = *K.cat;

    for (int x = 0; x < C.num_objects(); ++x)
        for (int a = 0; a < D.F(x).num_objects(); ++a) {
            int o = K.add_object({x, a}, "(" + D.F(x).object_name(a) + "," + C.object_name(x) + ")");
            K.alias_cell1({o, o, C.id1(x), D.F(x).id1(a)}, T.id1(o));
        }
    int nobj = T.num_objects();
    for (int o = 0; o < nobj; ++o)
        for (int o2 = 0; o2 < nobj; ++o2) {
            int y = K.obj_keys[o][0], b = K.obj_keys[o][1];
            int x = K.obj_keys[o2][0], a = K.obj_keys[o2][1];
            const TwoCategory& Fy = D.F(y);
            for (int u : C.hom(y, x))
                for (int f : Fy.hom(b, D.ustar[u].obj[a])) {
                    Key k{o, o2, u, f};
                    if (K.c1(k) >= 0) continue;
                    K.add_cell1(k, o, o2, fresh(T, "(" + Fy.cell1(f).name + "," + C.cell1(u).name + ")"));
                }
        }
    int n1 = T.num_cells1();
    for (int P = 0; P < n1; ++P)
        for (int P2 : T.hom(T.src1(P), T.tgt1(P))) {
            const Key &kp = K.c1_keys[P], &kp2 = K.c1_keys[P2];
            int y = K.obj_keys[kp[0]][0];
            int a = K.obj_keys[kp[1]][1];
            const TwoCategory& Fy = D.F(y);
            for (int al : C.cells2_between(kp[2], kp2[2])) {
                int s = Fy.hcomp1(D.astar[al][a], kp[3]);
                if (s < 0) continue;
                for (int ph : Fy.cells2_between(s, kp2[3])) {
                    Key k{P, P2, al, ph};
                    if (P == P2 && C.is_id2(al) && Fy.is_id2(ph)) {
                        K.alias_cell2(k, T.id2(P));
                        continue;
                    }
                    K.add_cell2(k, P, P2,
                                fresh(T, "[" + Fy.cell2(ph).name + "," + C.cell2(al).name + ";" + T.cell1(P).name +
                                             ";" + T.cell1(P2).name + "]"));
                }
            }
        }
    auto obj_x = [&](int o) { return K.obj_keys[o][0]; };
    auto obj_a = [&](int o) { return K.obj_keys[o][1]; };
    K.fill_tables(
        [&](int P2, int P) {
            // (f, u) o (g, v) = (zeta_{u,v,a} o v*f o g, u o v)
            const Key &g = K.c1_keys[P], &f = K.c1_keys[P2];
            int u = f[2], v = g[2];
            int z = obj_x(g[0]);
            const TwoCategory& Fz = D.F(z);
            int a = obj_a(f[1]);
            int h = Fz.hc1(D.zeta_at(u, v, a), Fz.hc1(D.ustar[v].c1[f[3]], g[3]));
            return Key{g[0], f[1], C.hc1(u, v), h};
        },
        [&](int bb, int aa) {
            // (phi', al') . (phi, al) = (phi' (1 o phi), al' al)
            const Key &k1 = K.c2_keys[aa], &k2 = K.c2_keys[bb];
            int P = k1[0];
            int y = obj_x(T.src1(P));
            int a = obj_a(T.tgt1(P));
            const TwoCategory& Fy = D.F(y);
            int ph = Fy.vc(k2[3], Fy.hc2(Fy.id2(D.astar[k2[2]][a]), k1[3]));
            return Key{P, k2[1], C.vc(k2[2], k1[2]), ph};
        },
        [&](int bb, int aa) {
            // (phi, al) o (psi, be) with (phi, al): (f, u) => (f', u'), (psi, be): (g, v) => (g', v')
            const Key &kb = K.c2_keys[bb], &ka = K.c2_keys[aa];
            const Key &F1 = K.c1_keys[kb[0]], &F2 = K.c1_keys[kb[1]];
            const Key &G1 = K.c1_keys[ka[0]], &G2 = K.c1_keys[ka[1]];
            int al = kb[2], phi = kb[3], be = ka[2], psi = ka[3];
            int v = G1[2], u2 = F2[2], v2 = G2[2];
            int z = obj_x(G1[0]);
            int a = obj_a(F1[1]);
            const TwoCategory& Fz = D.F(z);
            int zeta2 = D.zeta_at(u2, v2, a);
            int left = Fz.hc1(zeta2, D.ustar[v2].c1[F2[3]]);
            int right = Fz.hc1(zeta2, D.astar[be][D.ustar[u2].obj[a]]);
            int step1 = Fz.hc2(Fz.hc2(Fz.id2(right), D.ustar[v].c2[phi]), Fz.id2(G1[3]));
            int step2 = Fz.hc2(Fz.id2(left), psi);
            return Key{T.hcomp1(kb[0], ka[0]), T.hcomp1(kb[1], ka[1]), C.hc2(al, be), Fz.vc(step2, step1)};
        });
    for (const Key& k : K.obj_keys) G.obj_base.push_back(k[0]), G.obj_a.push_back(k[1]);
    for (const Key& k : K.c1_keys) G.c1_base.push_back(k[2]), G.c1_f.push_back(k[3]);
    for (const Key& k : K.c2_keys) G.c2_base.push_back(k[2]), G.c2_phi.push_back(k[3]);
    return G;
}

TwoFunctor projection(const TwoDiagram& D, const Grothendieck& G) {
    return TwoFunctor{G.ptr(), D.base, G.obj_base, G.c1_base, G.c2_base};
}

TwoFunctor fibre_embedding(const TwoDiagram& D, const Grothendieck& G, int z) {
    const TwoCategory& C = *D.base;
    if (z < 0 || z >= C.num_objects()) throw Error("UnknownObject", "fibre embedding base object");
    const TwoCategory& Fz = D.F(z);
    TwoFunctor j{D.fibre[z], G.ptr(), {}, {}, {}};
    for (int a = 0; a < Fz.num_objects(); ++a) j.obj.push_back(G.object(z, a));
    for (int f = 0; f < Fz.num_cells1(); ++f)
        j.c1.push_back(need(G.K.c1({j.obj[Fz.src1(f)], j.obj[Fz.tgt1(f)], C.id1(z), f}), "j on 1-cells"));
    for (int ph = 0; ph < Fz.num_cells2(); ++ph)
        j.c2.push_back(need(G.K.c2({j.c1[Fz.src2(ph)], j.c1[Fz.tgt2(ph)], C.id2(C.id1(z)), ph}), "j on 2-cells"));
    return j;
}

IotaP iota_p_pair(const TwoDiagram& D, const Grothendieck& G, int z) {
    const TwoCategory& C = *D.base;
    const TwoCategory& Fz = D.F(z);
    IotaP out;
    TwoFunctor pi = projection(D, G);
    out.comma = fibre_over(pi, z);
    const ObjectFibre& Q = out.comma;
    const TwoCategory& Qc = Q.cat();
    TwoFunctor j = fibre_embedding(D, G, z);
    int one = C.id1(z);

    TwoFunctor& i = out.i;
    i = TwoFunctor{D.fibre[z], Q.ptr(), {}, {}, {}};
    for (int a = 0; a < Fz.num_objects(); ++a) i.obj.push_back(need(Q.K.obj({j.obj[a], one}), "i on objects"));
    for (int f = 0; f < Fz.num_cells1(); ++f)
        i.c1.push_back(need(Q.K.c1({i.obj[Fz.src1(f)], i.obj[Fz.tgt1(f)], j.c1[f], C.id2(one)}), "i on 1-cells"));
    for (int ph = 0; ph < Fz.num_cells2(); ++ph)
        i.c2.push_back(need(Q.K.c2({i.c1[Fz.src2(ph)], i.c1[Fz.tgt2(ph)], j.c2[ph]}), "i on 2-cells"));

    TwoFunctor& p = out.p;
    p = TwoFunctor{Q.ptr(), D.fibre[z], {}, {}, {}};
    auto fa = [&](int o) { return G.obj_a[Q.obj_base[o]]; };
    for (int o = 0; o < Qc.num_objects(); ++o) p.obj.push_back(D.ustar[Q.obj_v[o]].obj[fa(o)]);
    for (int P = 0; P < Qc.num_cells1(); ++P) {
        int U = Q.c1_base[P], be = Q.c1_beta[P];
        int u = G.c1_base[U], f = G.c1_f[U];
        int v = Q.obj_v[Qc.src1(P)];
        int a = fa(Qc.tgt1(P));
        // be*_a o zeta_{u,v,a} o v*f
        p.c1.push_back(Fz.hc1(D.astar[be][a], Fz.hc1(D.zeta_at(u, v, a), D.ustar[v].c1[f])));
    }
    for (int A = 0; A < Qc.num_cells2(); ++A) {
        int P2 = Qc.tgt2(A);
        int Phi = Q.c2_base[A];
        int be2 = Q.c1_beta[P2];
        int u2 = G.c1_base[Q.c1_base[P2]];
        int v = Q.obj_v[Qc.src1(P2)];
        int a = fa(Qc.tgt1(P2));
        int head = Fz.hc1(D.astar[be2][a], D.zeta_at(u2, v, a));
        p.c2.push_back(Fz.hc2(Fz.id2(head), D.ustar[v].c2[G.c2_phi[Phi]]));
    }

    TwoFunctor ip = compose(i, p);
    std::vector<int> comp1, comp2;
    for (int o = 0; o < Qc.num_objects(); ++o) {
        int v = Q.obj_v[o];
        int X = Q.obj_base[o];
        int va = p.obj[o];
        int U = need(G.K.c1({G.object(z, va), X, v, Fz.id1(va)}), "theta 1-cell (1, v)");
        comp1.push_back(need(Q.K.c1({ip.obj[o], o, U, C.id2(v)}), "theta component"));
    }
    for (int P = 0; P < Qc.num_cells1(); ++P) {
        int from = Qc.hc1(P, comp1[Qc.src1(P)]);
        int to = Qc.hc1(comp1[Qc.tgt1(P)], ip.c1[P]);
        int U1 = Q.c1_base[from], U2 = Q.c1_base[to];
        int Phi = need(G.K.c2({U1, U2, Q.c1_beta[P], Fz.id2(G.c1_f[U2])}), "theta 2-cell (1, be)");
        comp2.push_back(need(Q.K.c2({from, to, Phi}), "theta component at a 1-cell"));
    }
    out.theta = LaxTransformation{as_lax(ip), as_lax(identity_functor(Q.ptr())), true, comp1, comp2};
    return out;
}

TwoDiagram constant_diagram(const TwoCatPtr& C, const TwoCatPtr& A) {
    TwoDiagram D;
    D.base = C;
    D.fibre.assign(C->num_objects(), A);
    D.ustar.assign(C->num_cells1(), identity_functor(A));
    std::vector<int> ids;
    for (int a = 0; a < A->num_objects(); ++a) ids.push_back(A->id1(a));
    D.astar.assign(C->num_cells2(), ids);
    for (int u = 0; u < C->num_cells1(); ++u)
        for (int v : C->cells1_into(C->src1(u))) D.zeta[pair_key(u, v)] = ids;
    return D;
}

TwoDiagram hom_diagram(const TwoCatPtr& Cp, int x) {
    const TwoCategory& C = *Cp;
    if (x < 0 || x >= C.num_objects()) throw Error("UnknownObject", "hom diagram target");
    int n = C.num_objects();
    TwoDiagram D;
    D.base = Cp;
    std::vector<std::unordered_map<int, int>> obj_of(n), c1_of(n);
    for (int z = 0; z < n; ++z) {
        auto Fz = std::make_shared<TwoCategory>();
        for (int f : C.hom(z, x)) obj_of[z][f] = Fz->add_object(C.cell1(f).name);
        for (int f : C.hom(z, x))
            for (int g : C.hom(z, x))
                for (int al : C.cells2_between(f, g))
                    c1_of[z][al] = C.is_id2(al) ? Fz->id1(obj_of[z][f]) : Fz->add_cell1(C.cell2(al).name, obj_of[z][f], obj_of[z][g]);
        for (auto [al, c] : c1_of[z])
            for (auto [be, d] : c1_of[z])
                if (C.src2(be) == C.tgt2(al)) Fz->set_hcomp1(d, c, c1_of[z].at(C.vc(be, al)));
        Fz->fill_units();
        D.fibre.push_back(Fz);
    }
    for (int u = 0; u < C.num_cells1(); ++u) {
        int y = C.src1(u), z = C.tgt1(u);
        const TwoCategory &Fz = *D.fibre[z], &Fy = *D.fibre[y];
        TwoFunctor us{D.fibre[z], D.fibre[y], std::vector<int>(Fz.num_objects()), std::vector<int>(Fz.num_cells1()),
                      std::vector<int>(Fz.num_cells2())};
        for (auto [f, o] : obj_of[z]) us.obj[o] = obj_of[y].at(C.hc1(f, u));
        for (auto [al, c] : c1_of[z]) us.c1[c] = c1_of[y].at(C.hc2(al, C.id2(u)));
        for (int c = 0; c < Fz.num_cells1(); ++c) us.c2[Fz.id2(c)] = Fy.id2(us.c1[c]);
        D.ustar.push_back(std::move(us));
    }
    for (int al = 0; al < C.num_cells2(); ++al) {
        int u = C.src2(al);
        int y = C.src1(u), z = C.tgt1(u);
        std::vector<int> comp(D.fibre[z]->num_objects());
        for (auto [f, o] : obj_of[z]) comp[o] = c1_of[y].at(C.hc2(C.id2(f), al));
        D.astar.push_back(std::move(comp));
    }
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) {
            const TwoCategory& Fx = *D.fibre[C.src1(v)];
            const TwoFunctor& uvs = D.ustar[C.hc1(u, v)];
            std::vector<int> comp;
            for (int a : uvs.obj) comp.push_back(Fx.id1(a));
            D.zeta[pair_key(u, v)] = comp;
        }
    return D;
}

bool is_isomorphism(const TwoFunctor& F) {
    auto bij = [](const std::vector<int>& m, int n) {
        if (static_cast<int>(m.size()) != n) return false;
        std::vector<char> hit(n, 0);
        for (int y : m) {
            if (y < 0 || y >= n || hit[y]) return false;
            hit[y] = 1;
        }
        return true;
    };
    return validate_two_functor(F).ok() && F.src->num_objects() == F.tgt->num_objects() &&
           bij(F.obj, F.tgt->num_objects()) && bij(F.c1, F.tgt->num_cells1()) && bij(F.c2, F.tgt->num_cells2());
}

HomDiagramIso hom_diagram_iso(const TwoCatPtr& Cp, int x) {
    const TwoCategory& C = *Cp;
    auto Cco = std::make_shared<TwoCategory>(coopposite(C));
    TwoDiagram D = hom_diagram(Cco, x);
    Grothendieck G = grothendieck(D);
    auto T = std::make_shared<TwoCategory>(coopposite(G.cat()));
    HomDiagramIso out;
    out.integral_co = T;
    out.comma = fibre_under(identity_functor(Cp), x);
    const ObjectFibre& Q = out.comma;
    const TwoCategory& I = G.cat();
    // a 1-cell of the fibre over y is a 2-cell of C^co, an object is a 1-cell of C^co
    auto fibre_obj = [&](int y, int a) { return C.c1(D.F(y).object_name(a)); };
    auto fibre_c1 = [&](int y, int f) {
        const TwoCategory& Fy = D.F(y);
        return Fy.is_id1(f) ? C.id2(fibre_obj(y, Fy.src1(f))) : C.c2(Fy.cell1(f).name);
    };
    TwoFunctor& J = out.iso;
    J = TwoFunctor{T, Q.ptr(), {}, {}, {}};
    for (int o = 0; o < T->num_objects(); ++o) {
        int g = I.object(T->object_name(o));
        J.obj.push_back(Q.K.obj({G.obj_base[g], fibre_obj(G.obj_base[g], G.obj_a[g])}));
    }
    for (int P = 0; P < T->num_cells1(); ++P) {
        const std::string& nm = T->cell1(P).name;
        int g = T->is_id1(P) ? I.id1(I.object(T->object_name(T->src1(P)))) : I.c1(nm);
        int y = G.obj_base[I.src1(g)];
        int u = C.c1(Cco->cell1(G.c1_base[g]).name);
        J.c1.push_back(Q.K.c1({J.obj[T->src1(P)], J.obj[T->tgt1(P)], u, fibre_c1(y, G.c1_f[g])}));
    }
    for (int A = 0; A < T->num_cells2(); ++A) {
        int src = T->src2(A), tgt = T->tgt2(A);
        int g = T->is_id2(A) ? -1 : I.c2(T->cell2(A).name);
        int al = g < 0 ? C.id2(C.c1(Cco->cell1(G.c1_base[I.c1(T->cell1(src).name)]).name))
                       : C.c2(Cco->cell2(G.c2_base[g]).name);
        if (g < 0 && T->is_id1(src)) al = C.id2(C.id1(G.obj_base[I.object(T->object_name(T->src1(src)))]));
        J.c2.push_back(Q.K.c2({J.c1[src], J.c1[tgt], al}));
    }
    auto missing = [](const std::vector<int>& m) { return std::find(m.begin(), m.end(), -1) != m.end(); };
    if (missing(J.obj) || missing(J.c1) || missing(J.c2)) {
        out.report.add("TargetCellMissing", "some cell has no counterpart in C//x");
        return out;
    }
    out.report.merge(validate_two_functor(J), "iso: ");
    if (!is_isomorphism(J)) out.report.add("NotBijective", "the cellwise map is not a bijection");
    return out;
}

int MonoidalAction::obj(int a, int m) const {
    auto it = act_obj.find(pair_key(a, m));
    return it == act_obj.end() ? -1 : it->second;
}

int MonoidalAction::arr(int f, int phi) const {
    auto it = act_arr.find(pair_key(f, phi));
    return it == act_arr.end() ? -1 : it->second;
}

ValidationReport validate_action(const MonoidalAction& A) {
    ValidationReport r;
    const Category &N = A.N, &M = A.M.cat;
    r.merge(validate_category(N), "module: ");
    r.merge(validate_category(M), "monoid: ");
    if (!r.ok()) return r;
    auto bad = [&](const std::string& d) { r.add("ActionAxiomViolation", d); };
    for (int a = 0; a < N.num_objects(); ++a) {
        if (A.obj(a, A.M.unit) != a) bad("a (x) I != a at " + N.object_name(a));
        for (int m = 0; m < M.num_objects(); ++m)
            for (int k = 0; k < M.num_objects(); ++k) {
                int am = A.obj(a, m);
                int mk = A.M.tensor_objects(m, k);
                if (am < 0 || mk < 0 || A.obj(am, k) < 0 || A.obj(am, k) != A.obj(a, mk))
                    bad("(a (x) m) (x) k != a (x) (m (x) k) at " + N.object_name(a));
            }
    }
    if (!r.ok()) return r;
    for (int f = 0; f < N.num_arrows(); ++f)
        for (int ph = 0; ph < M.num_arrows(); ++ph) {
            int c = A.arr(f, ph);
            if (c < 0 || N.src(c) != A.obj(N.src(f), M.src(ph)) || N.tgt(c) != A.obj(N.tgt(f), M.tgt(ph))) {
                bad("f (x) phi has the wrong boundary at " + N.arrow_name(f));
                continue;
            }
            if (ph == M.id(A.M.unit) && c != f) bad("f (x) 1_I != f at " + N.arrow_name(f));
            for (int ps = 0; ps < M.num_arrows(); ++ps) {
                int t = A.M.tensor_arrows(ph, ps);
                if (t < 0 || A.arr(c, ps) != A.arr(f, t)) bad("arrow associativity at " + N.arrow_name(f));
            }
        }
    for (int a = 0; a < N.num_objects(); ++a)
        for (int m = 0; m < M.num_objects(); ++m)
            if (A.arr(N.id(a), M.id(m)) != N.id(A.obj(a, m))) bad("1 (x) 1 != 1 at " + N.object_name(a));
    for (int g = 0; g < N.num_arrows(); ++g)
        for (int f : N.into(N.src(g)))
            for (int ps = 0; ps < M.num_arrows(); ++ps)
                for (int ph : M.into(M.src(ps))) {
                    int lhs = A.arr(N.comp(g, f), M.comp(ps, ph));
                    int rhs = N.comp(A.arr(g, ps), A.arr(f, ph));
                    if (lhs < 0 || lhs != rhs) bad("interchange fails at (" + N.arrow_name(g) + ", " + N.arrow_name(f) + ")");
                }
    return r;
}

TwoDiagram action_diagram(const MonoidalAction& A) {
    ValidationReport rep = validate_action(A);
    if (!rep.ok()) throw Error("ActionAxiomViolation", rep.findings.front().detail);
    const Category &N = A.N, &M = A.M.cat;
    auto base = std::make_shared<TwoCategory>(one_object_from_monoidal(A.M));
    auto F = std::make_shared<TwoCategory>(from_category(N));
    auto n_obj = [&](int a) { return *F->find_object(N.object_name(a)); };
    auto n_arr = [&](int f) { return N.is_id(f) ? F->id1(n_obj(N.src(f))) : *F->find_cell1(N.arrow_name(f)); };
    std::vector<int> m_of(base->num_cells1(), -1), ph_of(base->num_cells2(), -1);
    for (int m = 0; m < M.num_objects(); ++m)
        m_of[m == A.M.unit ? base->id1(0) : base->c1(M.object_name(m))] = m;
    for (int ph = 0; ph < M.num_arrows(); ++ph) {
        int c = M.is_id(ph) ? base->id2(M.src(ph) == A.M.unit ? base->id1(0) : base->c1(M.object_name(M.src(ph))))
                            : base->c2(M.arrow_name(ph));
        ph_of[c] = ph;
    }
    std::vector<int> obj_back(F->num_objects()), arr_back(F->num_cells1());
    for (int a = 0; a < N.num_objects(); ++a) obj_back[n_obj(a)] = a;
    for (int f = 0; f < N.num_arrows(); ++f) arr_back[n_arr(f)] = f;

    TwoDiagram D;
    D.base = base;
    D.fibre = {F};
    for (int u = 0; u < base->num_cells1(); ++u) {
        int m = m_of[u];
        TwoFunctor us{F, F, {}, {}, {}};
        for (int o = 0; o < F->num_objects(); ++o) us.obj.push_back(n_obj(A.obj(obj_back[o], m)));
        for (int c = 0; c < F->num_cells1(); ++c) us.c1.push_back(n_arr(A.arr(arr_back[c], M.id(m))));
        for (int c = 0; c < F->num_cells2(); ++c) us.c2.push_back(F->id2(us.c1[F->src2(c)]));
        D.ustar.push_back(std::move(us));
    }
    for (int al = 0; al < base->num_cells2(); ++al) {
        std::vector<int> comp;
        for (int o = 0; o < F->num_objects(); ++o) comp.push_back(n_arr(A.arr(N.id(obj_back[o]), ph_of[al])));
        D.astar.push_back(std::move(comp));
    }
    fill_diagram_defaults(D);
    return D;
}

Grothendieck action_grothendieck(const MonoidalAction& A) { return grothendieck(action_diagram(A)); }

}  // namespace twocat
