#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "twocat/functors.hpp"
#include "twocat/simplicial.hpp"

namespace twocat {

// Normal lax functor [n] ~> C stored densely: x(i), x(i,j) for i <= j, x(i,j,k) for i <= j <= k,
// where x(i,j): x(j) -> x(i) and x(i,j,k): x(i,j) o x(j,k) => x(i,k). -1 marks an unknown cell.
struct GSimplex {
    int n = 0;
    std::vector<int> obj, c1, c2;

    GSimplex() = default;
    explicit GSimplex(int dim)
        : n(dim), obj(dim + 1, -1), c1((dim + 1) * (dim + 1), -1), c2((dim + 1) * (dim + 1) * (dim + 1), -1) {}

    int& x(int i) { return obj[i]; }
    int& x(int i, int j) { return c1[i * (n + 1) + j]; }
    int& x(int i, int j, int k) { return c2[(i * (n + 1) + j) * (n + 1) + k]; }
    int x(int i) const { return obj[i]; }
    int x(int i, int j) const { return c1[i * (n + 1) + j]; }
    int x(int i, int j, int k) const { return c2[(i * (n + 1) + j) * (n + 1) + k]; }

    // objects, then x(i,j) for i < j, then x(i,j,k) for i < j < k, lexicographically
    Key key() const;
};

GSimplex simplex_from_key(const TwoCategory& C, int n, const Key& k);
// Sets x(i,i) = 1 and x(i,i,j) = x(i,j,j) = 1 wherever the 1-cells are known.
void fill_degenerate(const TwoCategory& C, GSimplex& x);
// x after the monotone map xi: [m] -> [n] given by its values.
GSimplex precompose(const GSimplex& x, const std::vector<int>& xi);
ValidationReport validate_simplex(const TwoCategory& C, const GSimplex& x);
// The simplex as a normal lax functor out of the ordinal [n].
NormalLaxFunctor simplex_as_lax_functor(const TwoCategory& C, const GSimplex& x);

std::vector<int> coface(int n, int i);      // delta_i: [n-1] -> [n]
std::vector<int> codegeneracy(int n, int i);  // sigma_i: [n+1] -> [n]

// Emits every completion of the unknown cells of partial into a valid simplex.
// Known cells are trusted; only tetrahedra touching an unknown 2-cell are checked.
void complete_simplex(const TwoCategory& C, const GSimplex& partial, Budget& budget,
                      const std::function<void(const GSimplex&)>& out);

TruncSimplicialSet geometric_nerve(const TwoCategory& C, int cap, Budget& budget);
TruncSimplicialSet geometric_nerve(const TwoCategory& C, int cap);
// x |-> F o x between geometric nerves of F's source and target.
SimplicialMap geometric_nerve_map(const NormalLaxFunctor& F, const TruncSimplicialSet& dS,
                                  const TruncSimplicialSet& dT);

// Simplices keyed (x_0, a_1, ..., a_n) with a_k: x_k -> x_{k-1}.
TruncSimplicialSet nerve_category(const Category& C, int cap);

struct CatFunctor {
    std::vector<int> obj, arr;
};

struct SimplicialCategory {
    int cap = 0;
    std::vector<Category> levels;
    std::vector<std::vector<Key>> obj_keys, arr_keys;
    std::vector<std::unordered_map<Key, int, KeyHash>> obj_index, arr_index;
    std::vector<std::vector<CatFunctor>> face;   // face[n][i]: level n -> n-1
    std::vector<std::vector<CatFunctor>> degen;  // degen[n][i]: level n -> n+1
};

using KeyMap = std::function<Key(int n, int i, const Key& k)>;
// Fills in levels' face and degeneracy functors by key lookup.
void link_simplicial_category(SimplicialCategory& S, const KeyMap& obj_face, const KeyMap& arr_face,
                              const KeyMap& obj_degen, const KeyMap& arr_degen);
ValidationReport validate_simplicial_category(const SimplicialCategory& S);

// Level p: objects (x_0; u_1..u_p) with u_i: x_i -> x_{i-1}; arrows are p-tuples of 2-cells.
SimplicialCategory nerve_two_category(const TwoCategory& C, int cap);
// S_{p,q} = N_q(level p); horizontal operators come from the simplicial structure of levels.
TruncBisimplicialSet levelwise_nerve(const SimplicialCategory& S);
TruncBisimplicialSet double_nerve(const TwoCategory& C, int cap);

struct Cylinder {
    NormalLaxFunctor H;       // B x [1] ~> C
    TwoFunctor incl0, incl1;  // B -> B x [1] at the ends 0 and 1
};

// H(-,1) = F, H(-,0) = G and the cross 1-cells carry the components of t.
Cylinder cylinder_lax_functor(const LaxTransformation& t);

}  // namespace twocat
