#include "twocat/functors.hpp"

namespace twocat {

namespace {

// Composition helpers that propagate -1 for undefined results.
struct Ops {
    const TwoCategory& C;
    int h1(int u, int v) const { return (u < 0 || v < 0) ? -1 : C.hcomp1(u, v); }
    int v2(int b, int a) const { return (a < 0 || b < 0) ? -1 : C.vcomp(b, a); }
    int h2(int b, int a) const { return (a < 0 || b < 0) ? -1 : C.hcomp2(b, a); }
    int i2(int u) const { return u < 0 ? -1 : C.id2(u); }
};

std::string nm1(const TwoCategory& C, int u) { return C.cell1(u).name; }
std::string nm2(const TwoCategory& C, int a) { return C.cell2(a).name; }

template <class Map>
ValidationReport check_maps(const TwoCategory& S, const TwoCategory& T, const Map& F) {
    ValidationReport r;
    if (static_cast<int>(F.obj.size()) != S.num_objects() || static_cast<int>(F.c1.size()) != S.num_cells1() ||
        static_cast<int>(F.c2.size()) != S.num_cells2()) {
        r.add("BoundaryMismatch", "cell maps do not cover the source");
        return r;
    }
    for (int u = 0; u < S.num_cells1(); ++u) {
        int fu = F.c1[u];
        if (fu < 0 || T.src1(fu) != F.obj[S.src1(u)] || T.tgt1(fu) != F.obj[S.tgt1(u)])
            r.add("BoundaryMismatch", "image of 1-cell " + nm1(S, u));
    }
    for (int a = 0; a < S.num_cells2(); ++a) {
        int fa = F.c2[a];
        if (fa < 0 || T.src2(fa) != F.c1[S.src2(a)] || T.tgt2(fa) != F.c1[S.tgt2(a)])
            r.add("BoundaryMismatch", "image of 2-cell " + nm2(S, a));
    }
    for (int x = 0; x < S.num_objects(); ++x)
        if (F.c1[S.id1(x)] != T.id1(F.obj[x]))
            r.add("NormalizationViolation", "identity of " + S.object_name(x) + " not preserved");
    for (int u = 0; u < S.num_cells1(); ++u)
        if (F.c1[u] >= 0 && F.c2[S.id2(u)] != T.id2(F.c1[u]))
            r.add("NormalizationViolation", "identity 2-cell of " + nm1(S, u) + " not preserved");
    Ops t{T};
    for (auto [k, c] : S.vcomp_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        if (t.v2(F.c2[b], F.c2[a]) != F.c2[c])
            r.add("FunctorialityViolation", "vertical composite " + nm2(S, b) + " . " + nm2(S, a));
    }
    return r;
}

}  // namespace

ValidationReport validate_two_functor(const TwoFunctor& F) {
    const TwoCategory& S = *F.src;
    const TwoCategory& T = *F.tgt;
    ValidationReport r = check_maps(S, T, F);
    if (r.has("BoundaryMismatch")) return r;
    Ops t{T};
    for (auto [k, w] : S.hcomp1_table()) {
        int u = static_cast<int>(k >> 32), v = static_cast<int>(k & 0xffffffffu);
        if (t.h1(F.c1[u], F.c1[v]) != F.c1[w])
            r.add("FunctorialityViolation", "composite " + nm1(S, u) + " o " + nm1(S, v));
    }
    for (auto [k, c] : S.hcomp2_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        if (t.h2(F.c2[b], F.c2[a]) != F.c2[c])
            r.add("FunctorialityViolation", "horizontal composite " + nm2(S, b) + " o " + nm2(S, a));
    }
    return r;
}

TwoFunctor identity_functor(const TwoCatPtr& C) {
    TwoFunctor F{C, C, {}, {}, {}};
    for (int x = 0; x < C->num_objects(); ++x) F.obj.push_back(x);
    for (int u = 0; u < C->num_cells1(); ++u) F.c1.push_back(u);
    for (int a = 0; a < C->num_cells2(); ++a) F.c2.push_back(a);
    return F;
}

TwoFunctor compose(const TwoFunctor& G, const TwoFunctor& F) {
    TwoFunctor H{F.src, G.tgt, {}, {}, {}};
    for (int x : F.obj) H.obj.push_back(G.obj[x]);
    for (int u : F.c1) H.c1.push_back(G.c1[u]);
    for (int a : F.c2) H.c2.push_back(G.c2[a]);
    return H;
}

bool same_functor(const TwoFunctor& F, const TwoFunctor& G) {
    return F.obj == G.obj && F.c1 == G.c1 && F.c2 == G.c2;
}

int NormalLaxFunctor::F_uv(int u, int v) const {
    auto it = constraint.find(pair_key(u, v));
    if (it != constraint.end()) return it->second;
    int w = src->hcomp1(u, v);
    return w < 0 ? -1 : tgt->id2(c1[w]);
}

NormalLaxFunctor as_lax(const TwoFunctor& F) { return {F.src, F.tgt, F.obj, F.c1, F.c2, {}}; }

ValidationReport validate_lax_functor(const NormalLaxFunctor& F) {
    const TwoCategory& S = *F.src;
    const TwoCategory& T = *F.tgt;
    ValidationReport r = check_maps(S, T, F);
    if (r.has("BoundaryMismatch")) return r;
    Ops t{T};
    auto pair_str = [&](int u, int v) { return "(" + nm1(S, u) + ", " + nm1(S, v) + ")"; };

    for (int u = 0; u < S.num_cells1(); ++u)
        for (int v : S.cells1_into(S.src1(u))) {
            int w = S.hcomp1(u, v), k = F.F_uv(u, v);
            if (w < 0 || k < 0 || T.src2(k) != t.h1(F.c1[u], F.c1[v]) || T.tgt2(k) != F.c1[w]) {
                r.add("BoundaryMismatch", "constraint at " + pair_str(u, v));
                continue;
            }
            if ((S.is_id1(u) || S.is_id1(v)) && k != T.id2(F.c1[w]))
                r.add("NormalizationViolation", "constraint at " + pair_str(u, v) + " is not an identity");
        }
    if (r.has("BoundaryMismatch")) return r;

    // Naturality: F_{u',v'} (Fa o Fb) = F(a o b) F_{u,v}.
    for (auto [k, c] : S.hcomp2_table()) {
        int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
        int u = S.src2(a), u2 = S.tgt2(a), v = S.src2(b), v2 = S.tgt2(b);
        int lhs = t.v2(F.F_uv(u2, v2), t.h2(F.c2[a], F.c2[b]));
        int rhs = t.v2(F.c2[c], F.F_uv(u, v));
        if (lhs < 0 || lhs != rhs)
            r.add("NaturalityViolation", "constraint not natural at (" + nm2(S, a) + ", " + nm2(S, b) + ")");
    }
    // Cocycle: F_{u,vw} (1 o F_{v,w}) = F_{uv,w} (F_{u,v} o 1).
    for (int u = 0; u < S.num_cells1(); ++u)
        for (int v : S.cells1_into(S.src1(u)))
            for (int w : S.cells1_into(S.src1(v))) {
                int vw = S.hcomp1(v, w), uv = S.hcomp1(u, v);
                int lhs = t.v2(F.F_uv(u, vw), t.h2(T.id2(F.c1[u]), F.F_uv(v, w)));
                int rhs = t.v2(F.F_uv(uv, w), t.h2(F.F_uv(u, v), T.id2(F.c1[w])));
                if (lhs < 0 || lhs != rhs)
                    r.add("CocycleViolation",
                          "cocycle fails at (" + nm1(S, u) + ", " + nm1(S, v) + ", " + nm1(S, w) + ")");
            }
    return r;
}

NormalLaxFunctor compose(const TwoFunctor& G, const NormalLaxFunctor& F) {
    NormalLaxFunctor H{F.src, G.tgt, {}, {}, {}, {}};
    for (int x : F.obj) H.obj.push_back(G.obj[x]);
    for (int u : F.c1) H.c1.push_back(G.c1[u]);
    for (int a : F.c2) H.c2.push_back(G.c2[a]);
    for (auto [k, c] : F.constraint) H.constraint[k] = G.c2[c];
    return H;
}

NormalLaxFunctor compose(const NormalLaxFunctor& F, const TwoFunctor& J) {
    NormalLaxFunctor H{J.src, F.tgt, {}, {}, {}, {}};
    for (int x : J.obj) H.obj.push_back(F.obj[x]);
    for (int u : J.c1) H.c1.push_back(F.c1[u]);
    for (int a : J.c2) H.c2.push_back(F.c2[a]);
    const TwoCategory& S = *J.src;
    for (int u = 0; u < S.num_cells1(); ++u)
        for (int v : S.cells1_into(S.src1(u))) H.constraint[pair_key(u, v)] = F.F_uv(J.c1[u], J.c1[v]);
    return H;
}

bool same_lax_functor(const NormalLaxFunctor& F, const NormalLaxFunctor& G) {
    if (F.obj != G.obj || F.c1 != G.c1 || F.c2 != G.c2) return false;
    const TwoCategory& S = *F.src;
    for (int u = 0; u < S.num_cells1(); ++u)
        for (int v : S.cells1_into(S.src1(u)))
            if (F.F_uv(u, v) != G.F_uv(u, v)) return false;
    return true;
}

ValidationReport validate_lax_transformation(const LaxTransformation& t) {
    ValidationReport r;
    const NormalLaxFunctor& F = t.F;
    const NormalLaxFunctor& G = t.G;
    const TwoCategory& S = *F.src;
    const TwoCategory& T = *F.tgt;
    Ops o{T};
    if (static_cast<int>(t.comp1.size()) != S.num_objects() || static_cast<int>(t.comp2.size()) != S.num_cells1()) {
        r.add("BoundaryMismatch", "components do not cover the source");
        return r;
    }
    for (int x = 0; x < S.num_objects(); ++x) {
        int a = t.comp1[x];
        if (a < 0 || T.src1(a) != F.obj[x] || T.tgt1(a) != G.obj[x])
            r.add("BoundaryMismatch", "component at object " + S.object_name(x));
    }
    if (!r.ok()) return r;
    // Domain and codomain of the 2-cell component at u: x -> y.
    auto ends = [&](int u) {
        int x = S.src1(u), y = S.tgt1(u);
        int fside = o.h1(t.comp1[y], F.c1[u]);
        int gside = o.h1(G.c1[u], t.comp1[x]);
        return t.oplax ? std::pair{gside, fside} : std::pair{fside, gside};
    };
    for (int u = 0; u < S.num_cells1(); ++u) {
        auto [s, e] = ends(u);
        int c = t.comp2[u];
        if (c < 0 || s < 0 || e < 0 || T.src2(c) != s || T.tgt2(c) != e)
            r.add("BoundaryMismatch", "component at 1-cell " + nm1(S, u));
    }
    if (!r.ok()) return r;
    for (int x = 0; x < S.num_objects(); ++x)
        if (t.comp2[S.id1(x)] != T.id2(t.comp1[x]))
            r.add("UnitViolation", "component at the identity of " + S.object_name(x));

    for (int th = 0; th < S.num_cells2(); ++th) {
        int u = S.src2(th), u2 = S.tgt2(th);
        int x = S.src1(u), y = S.tgt1(u);
        int fth = o.h2(T.id2(t.comp1[y]), F.c2[th]);
        int gth = o.h2(G.c2[th], T.id2(t.comp1[x]));
        int lhs, rhs;
        if (!t.oplax) {
            lhs = o.v2(t.comp2[u2], fth);
            rhs = o.v2(gth, t.comp2[u]);
        } else {
            lhs = o.v2(fth, t.comp2[u]);
            rhs = o.v2(t.comp2[u2], gth);
        }
        if (lhs < 0 || lhs != rhs) r.add("NaturalityViolation", "component not natural at " + nm2(S, th));
    }

    for (int u = 0; u < S.num_cells1(); ++u)
        for (int v : S.cells1_into(S.src1(u))) {
            int x = S.src1(v), z = S.tgt1(u);
            int uv = S.hcomp1(u, v);
            int az = t.comp1[z], ax = t.comp1[x];
            int lhs, rhs;
            if (!t.oplax) {
                // a_{uv} (1 o F_{u,v}) = (G_{u,v} o 1)(1 o a_v)(a_u o 1)
                lhs = o.v2(t.comp2[uv], o.h2(T.id2(az), F.F_uv(u, v)));
                int s1 = o.h2(t.comp2[u], T.id2(F.c1[v]));
                int s2 = o.h2(T.id2(G.c1[u]), t.comp2[v]);
                int s3 = o.h2(G.F_uv(u, v), T.id2(ax));
                rhs = o.v2(s3, o.v2(s2, s1));
            } else {
                // (1 o F_{u,v})(a_u o 1)(1 o a_v) = a_{uv} (G_{u,v} o 1)
                int s1 = o.h2(T.id2(G.c1[u]), t.comp2[v]);
                int s2 = o.h2(t.comp2[u], T.id2(F.c1[v]));
                int s3 = o.h2(T.id2(az), F.F_uv(u, v));
                lhs = o.v2(s3, o.v2(s2, s1));
                rhs = o.v2(t.comp2[uv], o.h2(G.F_uv(u, v), T.id2(ax)));
            }
            if (lhs < 0 || lhs != rhs)
                r.add("HexagonViolation", "hexagon fails at (" + nm1(S, u) + ", " + nm1(S, v) + ")");
        }
    return r;
}

LaxTransformation two_natural(const TwoFunctor& F, const TwoFunctor& G, const std::vector<int>& comp1) {
    LaxTransformation t{as_lax(F), as_lax(G), false, comp1, {}};
    const TwoCategory& S = *F.src;
    const TwoCategory& T = *F.tgt;
    for (int u = 0; u < S.num_cells1(); ++u) {
        int a = comp1[S.tgt1(u)];
        int w = (a < 0) ? -1 : T.hcomp1(a, F.c1[u]);
        t.comp2.push_back(w < 0 ? -1 : T.id2(w));
    }
    return t;
}

LaxTransformation identity_transformation(const TwoFunctor& F) {
    std::vector<int> comp1;
    for (int x : F.obj) comp1.push_back(F.tgt->id1(x));
    return two_natural(F, F, comp1);
}

}  // namespace twocat
