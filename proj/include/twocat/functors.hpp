#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "twocat/two_category.hpp"

namespace twocat {

struct TwoFunctor {
    TwoCatPtr src, tgt;
    std::vector<int> obj, c1, c2;
};

ValidationReport validate_two_functor(const TwoFunctor& F);
TwoFunctor identity_functor(const TwoCatPtr& C);
// G after F.
TwoFunctor compose(const TwoFunctor& G, const TwoFunctor& F);
bool same_functor(const TwoFunctor& F, const TwoFunctor& G);

// Constraint cells F_{u,v}: Fu o Fv => F(u o v), keyed by (u, v). Missing entries
// are read as identities, which only type-checks when Fu o Fv = F(u o v).
struct NormalLaxFunctor {
    TwoCatPtr src, tgt;
    std::vector<int> obj, c1, c2;
    std::unordered_map<uint64_t, int> constraint;

    int F_uv(int u, int v) const;
};

NormalLaxFunctor as_lax(const TwoFunctor& F);
ValidationReport validate_lax_functor(const NormalLaxFunctor& F);
// G after F for a 2-functor G.
NormalLaxFunctor compose(const TwoFunctor& G, const NormalLaxFunctor& F);
// F after a 2-functor J.
NormalLaxFunctor compose(const NormalLaxFunctor& F, const TwoFunctor& J);
bool same_lax_functor(const NormalLaxFunctor& F, const NormalLaxFunctor& G);

// Lax: comp2[u]: a_y o Fu => Gu o a_x.  Oplax: comp2[u]: Gu o a_x => a_y o Fu.
struct LaxTransformation {
    NormalLaxFunctor F, G;
    bool oplax = false;
    std::vector<int> comp1;  // per object of the source
    std::vector<int> comp2;  // per 1-cell of the source
};

ValidationReport validate_lax_transformation(const LaxTransformation& t);
// 2-natural transformation between 2-functors from 1-cell components; fails if some
// naturality square does not commute on the nose.
LaxTransformation two_natural(const TwoFunctor& F, const TwoFunctor& G, const std::vector<int>& comp1);
LaxTransformation identity_transformation(const TwoFunctor& F);

}  // namespace twocat
