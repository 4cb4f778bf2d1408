#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "twocat/common.hpp"

namespace twocat {

// Simplicial set truncated at dimension cap. Degenerate simplices are stored.
struct TruncSimplicialSet {
    int cap = 0;
    std::vector<std::vector<Key>> keys;                  // keys[n][s]
    std::vector<std::vector<std::vector<int>>> face;     // face[n][i][s], n >= 1
    std::vector<std::vector<std::vector<int>>> degen;    // degen[n][i][s], n < cap
    std::vector<std::vector<char>> degenerate;           // degenerate[n][s]
    std::vector<std::unordered_map<Key, int, KeyHash>> index;

    int size(int n) const { return static_cast<int>(keys[n].size()); }
    int d(int n, int i, int s) const { return face[n][i][s]; }
    int s(int n, int i, int x) const { return degen[n][i][x]; }
    int find(int n, const Key& k) const {
        auto it = index[n].find(k);
        return it == index[n].end() ? -1 : it->second;
    }
    std::vector<int> nondegenerate(int n) const;
};

using KeyOp = std::function<Key(int n, int i, const Key& k)>;

// Builds the operator tables by looking up face_key / degen_key results among keys.
// Throws TargetSimplexMissing when an operator leaves the given simplex sets.
TruncSimplicialSet assemble(int cap, std::vector<std::vector<Key>> keys, const KeyOp& face_key,
                            const KeyOp& degen_key);

// Checks every simplicial identity whose both sides stay within the cap, and that the
// degeneracy flags match the images of the s_i.
ValidationReport audit_simplicial(const TruncSimplicialSet& S);

// The same audit for any family of sets with face and degeneracy functions.
ValidationReport audit_simplicial_family(int cap, const std::function<int(int)>& size,
                                         const std::function<int(int, int, int)>& d,
                                         const std::function<int(int, int, int)>& s);

struct SimplicialMap {
    std::vector<std::vector<int>> map;  // map[n][s]
};

ValidationReport validate_simplicial_map(const TruncSimplicialSet& S, const TruncSimplicialSet& T,
                                         const SimplicialMap& f);
SimplicialMap identity_map(const TruncSimplicialSet& S);
// g after f.
SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f);
bool is_bijective(const SimplicialMap& f, const TruncSimplicialSet& S, const TruncSimplicialSet& T);
// Same simplex sets (by key) and same operator tables.
bool same_simplicial_set(const TruncSimplicialSet& S, const TruncSimplicialSet& T);

// Bisimplicial set with all S_{p,q}, p, q <= cap. Horizontal operators change p.
struct TruncBisimplicialSet {
    int cap = 0;
    std::vector<std::vector<std::vector<Key>>> keys;                // [p][q][s]
    std::vector<std::vector<std::vector<std::vector<int>>>> hface;  // [p][q][i][s] -> (p-1, q)
    std::vector<std::vector<std::vector<std::vector<int>>>> hdeg;   // [p][q][i][s] -> (p+1, q)
    std::vector<std::vector<std::vector<std::vector<int>>>> vface;  // [p][q][j][s] -> (p, q-1)
    std::vector<std::vector<std::vector<std::vector<int>>>> vdeg;   // [p][q][j][s] -> (p, q+1)

    int size(int p, int q) const { return static_cast<int>(keys[p][q].size()); }
    int dh(int p, int q, int i, int s) const { return hface[p][q][i][s]; }
    int sh(int p, int q, int i, int s) const { return hdeg[p][q][i][s]; }
    int dv(int p, int q, int j, int s) const { return vface[p][q][j][s]; }
    int sv(int p, int q, int j, int s) const { return vdeg[p][q][j][s]; }
};

void resize_bisimplicial(TruncBisimplicialSet& S, int cap);
ValidationReport audit_bisimplicial(const TruncBisimplicialSet& S);
TruncBisimplicialSet transpose(const TruncBisimplicialSet& S);
// S_{p,q} = X_p, vertical operators identities.
TruncBisimplicialSet vertically_constant(const TruncSimplicialSet& X);
// S_{p,q} = X_p x Y_q.
TruncBisimplicialSet external_product(const TruncSimplicialSet& X, const TruncSimplicialSet& Y);

// Simplices keyed by their index in S_{n,n}, or by S's own keys when keep_keys is set.
TruncSimplicialSet diag(const TruncBisimplicialSet& S, bool keep_keys = false);
// Codiagonal: p-simplices are tuples (t_0..t_p), t_m in S_{m,p-m}, with d_0^v t_m = d_{m+1}^h t_{m+1}.
TruncSimplicialSet codiagonal_wbar(const TruncBisimplicialSet& S);
// diag S -> W S, t |-> ((d_{m+1}^h)^{p-m} (d_0^v)^m t)_m. Both arguments must come from S.
SimplicialMap zisman_eta(const TruncBisimplicialSet& S, const TruncSimplicialSet& diagS,
                         const TruncSimplicialSet& wbarS);

TruncSimplicialSet product(const TruncSimplicialSet& S, const TruncSimplicialSet& T);
TruncSimplicialSet standard_simplex(int n, int cap);
TruncSimplicialSet disjoint_union(const TruncSimplicialSet& S, const TruncSimplicialSet& T);
TruncSimplicialSet point(int cap);

}  // namespace twocat
