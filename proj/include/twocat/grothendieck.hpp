#pragma once

#include <unordered_map>
#include <vector>

#include "twocat/fibres.hpp"
#include "twocat/keyed.hpp"

namespace twocat {

// Normal lax functor C^op ~> 2Cat given by tables.
//  ustar[u]     for u: y -> x is a 2-functor F_x -> F_y,
//  astar[al][a] for al: u => u' (u: y -> x) is the 1-cell u*a -> u'*a of F_y, a in F_x,
//  zeta[(u,v)][a] for v: x -> y, u: y -> z is the 1-cell v*u*a -> (u o v)*a of F_x, a in F_z.
struct TwoDiagram {
    TwoCatPtr base;
    std::vector<TwoCatPtr> fibre;
    std::vector<TwoFunctor> ustar;
    std::vector<std::vector<int>> astar;
    std::unordered_map<uint64_t, std::vector<int>> zeta;

    int zeta_at(int u, int v, int a) const;
    const TwoCategory& F(int x) const { return *fibre[x]; }
};

// Unit 1-cell entries, identity components of identity 2-cells and missing zeta entries are
// filled with identities where the endpoints already agree.
void fill_diagram_defaults(TwoDiagram& D);
ValidationReport validate_two_diagram(const TwoDiagram& D);

// Integral of a 2-diagram. Objects (a, x); 1-cells (f, u): (b, y) -> (a, x) with f: b -> u*a;
// 2-cells (phi, al): (f, u) => (f', u') with phi: al*_a o f => f'.
struct Grothendieck {
    KeyedTwoCategory K;
    std::vector<int> obj_base, obj_a;   // x, a
    std::vector<int> c1_base, c1_f;     // u, f
    std::vector<int> c2_base, c2_phi;   // al, phi

    TwoCatPtr ptr() const { return K.cat; }
    const TwoCategory& cat() const { return *K.cat; }
    int object(int x, int a) const { return K.obj({x, a}); }
};

// Throws DiagramInvalid when validate_two_diagram fails.
Grothendieck grothendieck(const TwoDiagram& D);
TwoFunctor projection(const TwoDiagram& D, const Grothendieck& G);
// j: F_z -> integral, f |-> (f, 1_z).
TwoFunctor fibre_embedding(const TwoDiagram& D, const Grothendieck& G, int z);

// i: F_z -> z//pi, p: z//pi -> F_z and the oplax theta: ip => 1.
struct IotaP {
    ObjectFibre comma;  // z//pi
    TwoFunctor i, p;
    LaxTransformation theta;
};
IotaP iota_p_pair(const TwoDiagram& D, const Grothendieck& G, int z);

// All fibres equal to A, every structure map an identity.
TwoDiagram constant_diagram(const TwoCatPtr& C, const TwoCatPtr& A);
// z |-> the hom-category C(z, x) as a locally discrete 2-category; u* precomposes, al* whiskers.
TwoDiagram hom_diagram(const TwoCatPtr& C, int x);

// The cellwise isomorphism co(integral of C^co(-, x) over C^co) -> C//x, checked by validation
// and bijectivity. Returns the functor; report lists what failed.
struct HomDiagramIso {
    TwoCatPtr integral_co;  // co of the integral over C^co
    ObjectFibre comma;      // C//x
    TwoFunctor iso;
    ValidationReport report;
};
HomDiagramIso hom_diagram_iso(const TwoCatPtr& C, int x);

// Identifier-independent structural comparison: same cell counts, and F is a bijective
// 2-functor between A and B.
bool is_isomorphism(const TwoFunctor& F);

// Right action N x M -> N of a strict monoidal category on a category.
struct MonoidalAction {
    MonoidalCategory M;
    Category N;
    std::unordered_map<uint64_t, int> act_obj;  // (a, m) -> a (x) m
    std::unordered_map<uint64_t, int> act_arr;  // (f, phi) -> f (x) phi

    int obj(int a, int m) const;
    int arr(int f, int phi) const;
};

ValidationReport validate_action(const MonoidalAction& A);
// The diagram over the one-object 2-category of M with m* = - (x) m.
TwoDiagram action_diagram(const MonoidalAction& A);
Grothendieck action_grothendieck(const MonoidalAction& A);

}  // namespace twocat
