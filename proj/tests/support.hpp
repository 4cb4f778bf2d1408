#pragma once

#include <random>
#include <string>
#include <vector>

#include "twocat/twocat.hpp"

namespace fixtures {

using namespace twocat;

std::string path(const std::string& name);  // fixtures/<name>
TwoCatPtr load_twocat(const std::string& name);
std::shared_ptr<TwoDiagram> load_diagram(const std::string& name);

TwoCatPtr terminal();
TwoCatPtr discrete_ordinal(int n);
// objects 0, 1; u, v: 1 -> 0; a: u => v
TwoCatPtr walking_two_cell();
MonoidalCategory cyclic_monoidal(int n);
TwoCatPtr sigma_cyclic(int n);
// one object, arrows {1, f} with f o f = f and f (x) f = f
MonoidalCategory idempotent_monoidal();
// objects 0..k, an arrow i -> j for i <= j, tensor max
MonoidalCategory max_poset_monoidal(int k);
TwoCatPtr under_comma(const TwoCatPtr& C, int z);
TwoCatPtr over_comma(const TwoCatPtr& C, int z);
MonoidalAction z2_self_action();
// base [1], fibres the discrete set {p, q}, the arrow swaps them
TwoDiagram flip_diagram();
// F: terminal -> Sigma Z/2
TwoFunctor point_into_sigma_z2();

}  // namespace fixtures

namespace oracle {

using namespace twocat;

// Number of monotone maps [m] -> [n].
long long monotone_maps(int m, int n);
// Strings of n composable arrows, by brute force over all n-tuples.
long long nerve_count(const Category& C, int n);
// n-simplices of the geometric nerve by trying every assignment of objects, 1-cells and 2-cells.
long long geometric_count(const TwoCategory& C, int n);
// Objects (x, v: z -> F x) of z//F counted directly from the hom-sets.
long long over_fibre_objects(const TwoFunctor& F, int z);
long long under_fibre_objects(const TwoFunctor& F, int z);

// Dimension of H_n(S; F_p), or the rational Betti number when p == 0, by plain Gaussian
// elimination over F_p (a large prime stands in for Q).
std::vector<int> mod_p_homology_dims(const TruncSimplicialSet& S, long long p);
// The F_p dimensions predicted by a homology report via the universal coefficient theorem.
std::vector<int> predicted_mod_p_dims(const HomologyReport& H, long long p);
// Checks that the nerve of C and the geometric nerve of C seen as a locally discrete 2-category
// have the same simplices and faces, translating (x_0, a_1..a_n) into the lax functor with
// x(i,j) = a_{i+1} o ... o a_j and identity 2-cells. Returns an empty string on success.
std::string nerve_vs_geometric(const Category& C, const TwoCategory& D, const TruncSimplicialSet& N,
                               const TruncSimplicialSet& G);
// Group homology of Z/n with trivial coefficients: Z, Z/n, 0, Z/n, 0, ...
std::vector<HomologyGroup> cyclic_group_homology(int n, int through);

}  // namespace oracle

namespace gen {

using namespace twocat;

// Small random 2-categories drawn from the constructions of the library.
struct Sample {
    std::string label;
    TwoCatPtr cat;
};

Sample random_twocat(std::mt19937& rng, int depth = 0);
// Two objects, k parallel 1-cells 1 -> 0 and a random partial order of 2-cells between them.
TwoCatPtr random_locally_posetal(std::mt19937& rng, int k);
// The same 2-category declared in a random order.
TwoCatPtr shuffled_copy(const TwoCategory& C, std::mt19937& rng);
// The same simplicial set with the simplices of each dimension permuted.
TruncSimplicialSet permuted(const TruncSimplicialSet& S, std::mt19937& rng);
// A random diagram over a random base: constant, hom, or the base's own action on itself.
TwoDiagram random_diagram(std::mt19937& rng, std::string* label);

}  // namespace gen

namespace props {

using namespace twocat;

struct Outcome {
    int samples = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Simplicial-identity audits, boundary squared zero, interchange and order independence on
// count random fixtures, cap 3.
Outcome run_suite(int count, unsigned seed);

}  // namespace props
