#pragma once

#include <string>
#include <vector>

#include "twocat/grothendieck.hpp"
#include "twocat/nerves.hpp"

namespace twocat {

// hocolim_C F for a strict diagram of categories (fibres locally discrete, zeta identities).
// Level n: objects (x_0, a, u_1..u_n) with a in F_{x_0}, u_k: x_k -> x_{k-1};
// arrows (x_0, f, al_1..al_n) with f: a -> b in F_{x_0} and al_k: u_k => u'_k.
// d_0 sends (f, al_1, ...) to (al_1*_b o u_1* f, al_2, ...); the other operators act on the base string.
// Throws NonStrictDiagram or FibreNotCategory.
SimplicialCategory hocolim_two_functor(const TwoDiagram& D, int cap);

// (p, q)-simplices (y: [p] ~> F_{x_0}, x: [q] -> C) keyed by x's nerve key followed by y.key().
// Horizontal operators act on y, vertical ones on x, with d_0^v (y, x) = (x_{0,1}* y, x delta_0).
// Throws BaseNotCategory or NonStrictDiagram.
TruncBisimplicialSet hocolim_diagram_of_2cats(const TwoDiagram& D, int cap, Budget& budget);
TruncBisimplicialSet hocolim_diagram_of_2cats(const TwoDiagram& D, int cap);

// hocolim_C Delta F assembled directly: n-simplices (x in N_n C, y in Delta_n F_{x_0}) with the same keys,
// d_0 (y, x) = (x_{0,1}* (y delta_0), x delta_0) and d_i, s_i acting on both parts.
TruncSimplicialSet hocolim_geometric(const TwoDiagram& D, int cap, Budget& budget);

// Data over a base string x: y'_i in F_{x_i}, y'_{i,j}: y'_j -> x_{i,j}* y'_i in F_{x_j},
// y'_{i,j,k}: x_{j,k}* y'_{i,j} o y'_{j,k} => y'_{i,k} in F_{x_k}.
struct CrossedLaxFunctor {
    std::vector<int> base;  // x_{i,j} for i <= j, row-major (p+1)^2
    int p = 0;
    std::vector<int> obj;   // y'_i
    std::vector<int> c1;    // y'_{i,j}, row-major
    std::vector<int> c2;    // y'_{i,j,k}, row-major

    int x(int i, int j) const { return base[i * (p + 1) + j]; }
    int y(int i) const { return obj[i]; }
    int y(int i, int j) const { return c1[i * (p + 1) + j]; }
    int y(int i, int j, int k) const { return c2[(i * (p + 1) + j) * (p + 1) + k]; }
};

// Normalization and, for every i <= j <= k <= l, the square in F_{x_l} obtained by pulling
// everything back along the base 1-cells.
ValidationReport audit_crossed(const TwoDiagram& D, const CrossedLaxFunctor& y);
// Pulls the data back to F_{x_m}: a simplex [m] ~> F_{x_m}.
GSimplex crossed_restrict(const TwoDiagram& D, const CrossedLaxFunctor& y, int m);

struct ThomasonResult {
    TruncSimplicialSet source, target;
    SimplicialMap forward, backward;
    ValidationReport report;
    long long crossed_audited = 0;

    bool ok() const { return report.ok(); }
    std::vector<std::string> lines() const;
};

// W(N hocolim_C F) -> W(NN of the integral), both codiagonals taken after transposing so that
// the fibre direction of N hocolim is the outer one. Throws CapTooSmall for cap < 1.
ThomasonResult thomason_iso_i(const TwoDiagram& D, int cap);
// W(hocolim_diagram_of_2cats) -> Delta of the integral.
ThomasonResult thomason_iso_ii(const TwoDiagram& D, int cap, Budget& budget);
ThomasonResult thomason_iso_ii(const TwoDiagram& D, int cap);

}  // namespace twocat
