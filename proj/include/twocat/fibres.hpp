#pragma once

#include <memory>
#include <vector>

#include "twocat/invariants.hpp"
#include "twocat/keyed.hpp"
#include "twocat/nerves.hpp"

namespace twocat {

enum class Side { over, under };

// z//F (over) or F//z (under) for a 2-functor F: B -> C and an object z of C.
// Over: objects (x, v: z -> Fx), 1-cells (u, b: Fu o v => v').
// Under: objects (x, v: Fx -> z), 1-cells (u, b: v' o Fu => v).
struct ObjectFibre {
    KeyedTwoCategory K;
    Side side = Side::over;
    int z = -1;
    std::vector<int> obj_base, obj_v;    // x, v
    std::vector<int> c1_base, c1_beta;   // u, b
    std::vector<int> c2_base;            // alpha

    TwoCatPtr ptr() const { return K.cat; }
    const TwoCategory& cat() const { return *K.cat; }
};

ObjectFibre fibre_over(const TwoFunctor& F, int z);
ObjectFibre fibre_under(const TwoFunctor& F, int z);
ObjectFibre object_fibre(const TwoFunctor& F, int z, Side side);

// Fibres of [q]//F (or F//[q]) over simplices z: [q] ~> C.
// Over: objects (x, v: [q+1] ~> C) with v_0 = Fx and v delta_0 = z; 1-cells (u, y: [q+2] ~> C)
// with y_{0,1} = Fu, y delta_0 = v, y delta_1 = v'.
// Under: v_{q+1} = Fx and v delta_{q+1} = z; y_{q+1,q+2} = Fu, y delta_{q+1} = v, y delta_{q+2} = v'.
struct SimplexFibre {
    KeyedTwoCategory K;
    Side side = Side::over;
    int q = 0;
    std::vector<GSimplex> zs;              // the base simplices covered
    std::vector<int> obj_label;            // index into zs
    std::vector<int> obj_base;
    std::vector<GSimplex> obj_witness;     // v
    std::vector<int> c1_base;
    std::vector<GSimplex> c1_witness;      // y
    std::vector<int> c2_base;

    TwoCatPtr ptr() const { return K.cat; }
    const TwoCategory& cat() const { return *K.cat; }
};

// z//F for a single simplex. Object names are "(x,cells of v)" so that q = 0 reproduces
// the names of object_fibre.
SimplexFibre simplex_fibre(const TwoFunctor& F, const GSimplex& z, Side side, Budget& budget);
SimplexFibre simplex_fibre(const TwoFunctor& F, const GSimplex& z, Side side);
// All of [q]//F, the disjoint union of the fibres over every z in Delta_q C; names carry z.
SimplexFibre whole_simplex_fibre(const TwoFunctor& F, int q, Side side, Budget& budget);

// Forgets the witnesses: (x, v) |-> x.
TwoFunctor phi_forget(const TwoFunctor& F, const SimplexFibre& fib);
TwoFunctor phi_forget(const TwoFunctor& F, const ObjectFibre& fib);
// Psi: (x, v) |-> the base simplex of v, as an index into fib.zs.
const std::vector<int>& psi_label(const SimplexFibre& fib);

// Over: w: z1 -> z0 gives z0//F -> z1//F, (x, v) |-> (x, v o w), (u, b) |-> (u, b o 1_w).
// Under: w: z0 -> z1 gives F//z0 -> F//z1, (x, v) |-> (x, w o v), (u, b) |-> (u, 1_w o b).
TwoFunctor w_star(const TwoFunctor& F, const ObjectFibre& from, const ObjectFibre& to, int w);

// xi: [m] -> [n] monotone, from the fibre over z: [n] ~> C to the fibre over z xi.
TwoFunctor xi_star(const TwoFunctor& F, const SimplexFibre& from, const SimplexFibre& to,
                   const std::vector<int>& xi);
bool is_monotone(const std::vector<int>& xi, int n);
// z restricted along xi.
GSimplex restrict_simplex(const GSimplex& z, const std::vector<int>& xi);

// Over: Gamma: z_0//F -> z//F, Theta: z//F -> z_0//F and the 2-natural r: Gamma Theta => 1.
// Under: Gamma': F//z_q -> F//z, Theta' and r: 1 => Gamma' Theta'.
struct GammaTheta {
    SimplexFibre end;   // fibre over the end vertex of z
    TwoFunctor gamma, theta;
    LaxTransformation r;
};
GammaTheta gamma_theta(const TwoFunctor& F, const SimplexFibre& fib);

// Constant 2-functor z//C -> z//C at (z, 1_z) and the oplax Ct_z => 1 with components
// (v, 1_v) at objects and b at 1-cells (u, b). fib must be an over-fibre of an identity 2-functor.
struct CommaContraction {
    TwoFunctor constant;
    LaxTransformation t;
};
CommaContraction comma_contraction(const TwoFunctor& F, const ObjectFibre& fib);

// For every 1-cell w: z1 -> z0 of the target, compares Delta(z0//F) and Delta(z1//F) along Delta w*.
struct WStarAudit {
    int w = -1;
    std::string name;
    EquivalenceReport report;
};
struct FibreAudit {
    int cap = 0;
    std::vector<WStarAudit> entries;

    bool all_equivalences() const;
    std::vector<std::string> lines() const;
};
FibreAudit audit_w_star(const TwoFunctor& F, int cap, Budget& budget);

}  // namespace twocat
