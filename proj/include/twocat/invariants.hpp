#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twocat/simplicial.hpp"

namespace twocat {

using Integer = boost::multiprecision::cpp_int;
using DenseMatrix = std::vector<std::vector<Integer>>;

// Column-major sparse integer matrix: col[c] maps row -> nonzero entry.
struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::map<int, Integer>> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
    void add(int r, int c, const Integer& v);
    DenseMatrix dense() const;
};

SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B);
bool is_zero(const SparseMatrix& M);

struct SmithResult {
    DenseMatrix D;
    int rank = 0;
    std::vector<Integer> factors;  // nonzero diagonal, each dividing the next
};

// Unimodular diagonalization, pivoting on the smallest absolute value.
SmithResult smith_normal_form(const DenseMatrix& M);

struct RankFactors {
    int rank = 0;
    std::vector<Integer> factors;
};

// Rank and invariant factors of a sparse matrix: unit pivots are eliminated sparsely first,
// the remainder goes through smith_normal_form.
RankFactors invariant_factors(const SparseMatrix& M);

// Normalized chains: basis in degree n is the nondegenerate n-simplices.
struct ChainComplex {
    int cap = 0;
    std::vector<std::vector<int>> basis;                   // basis[n] = simplex indices
    std::vector<std::unordered_map<int, int>> position;    // simplex -> basis position
    std::vector<SparseMatrix> boundary;                    // boundary[n]: C_n -> C_{n-1}, n >= 1

    int rank(int n) const { return static_cast<int>(basis[n].size()); }
};

// Throws AuditFailed when S fails its simplicial audit or the boundary does not square to zero.
ChainComplex chain_complex(const TruncSimplicialSet& S);
bool boundary_squared_zero(const ChainComplex& C);

struct HomologyGroup {
    int betti = 0;
    std::vector<Integer> torsion;  // factors > 1, divisibility-ordered

    bool operator==(const HomologyGroup& o) const { return betti == o.betti && torsion == o.torsion; }
    bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
};

// "0", "Z", "Z^2 + Z/2", ...
std::string to_string(const HomologyGroup& g);

struct HomologyReport {
    int cap = 0;
    int valid_through = 0;            // cap - 1
    std::vector<HomologyGroup> groups;  // degrees 0..valid_through

    bool is_point() const;
    std::vector<std::string> lines() const;
};

HomologyReport homology(const ChainComplex& C);
HomologyReport homology(const TruncSimplicialSet& S);
// Homology of an arbitrary complex given its boundaries d[1..top], degree n uses d[n] and d[n+1].
HomologyGroup homology_at(int dim_n, const SparseMatrix* d_n, const SparseMatrix& d_n1);

// Component label of every vertex, labels 0..k-1 in order of first appearance.
std::vector<int> components(const TruncSimplicialSet& S);
int pi0(const TruncSimplicialSet& S);

// C_n(S) -> C_n(T) on nondegenerate simplices; degenerate images go to 0.
std::vector<SparseMatrix> chain_map(const SimplicialMap& f, const ChainComplex& CS, const ChainComplex& CT,
                                    const TruncSimplicialSet& T);

struct EquivalenceReport {
    int cap = 0;
    int pi0_a = 0, pi0_b = 0;
    HomologyReport a, b;
    int agree_through = -1;  // highest degree d with H_n equal for all n <= d
    std::optional<bool> chain_map_ok, h0_iso, h1_iso;

    bool groups_agree() const { return pi0_a == pi0_b && agree_through == a.valid_through; }
    bool all_agree() const;
    std::vector<std::string> lines() const;
};

// Throws CapMismatch when the caps differ.
EquivalenceReport homology_compare(const TruncSimplicialSet& S, const TruncSimplicialSet& T,
                                   const SimplicialMap* via = nullptr);

}  // namespace twocat
