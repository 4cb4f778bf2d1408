#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace twocat;

namespace {

Integer gcd_int(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Product of the first k invariant factors equals the gcd of the k x k minors.
Integer minor_gcd(const DenseMatrix& M, int k) {
    int r = static_cast<int>(M.size()), c = static_cast<int>(M[0].size());
    Integer g = 0;
    std::vector<int> rows, cols;
    std::function<Integer(const std::vector<int>&, const std::vector<int>&)> det =
        [&](const std::vector<int>& rs, const std::vector<int>& cs) -> Integer {
        if (rs.size() == 1) return M[rs[0]][cs[0]];
        Integer d = 0;
        for (size_t j = 0; j < cs.size(); ++j) {
            std::vector<int> rs2(rs.begin() + 1, rs.end()), cs2;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != j) cs2.push_back(cs[t]);
            Integer term = M[rs[0]][cs[j]] * det(rs2, cs2);
            d += (j % 2 ? -term : term);
        }
        return d;
    };
    std::function<void(int, int)> pick_cols;
    std::function<void(int)> pick_rows = [&](int from) {
        if (static_cast<int>(rows.size()) == k) {
            pick_cols(0, 0);
            return;
        }
        for (int i = from; i < r; ++i) {
            rows.push_back(i);
            pick_rows(i + 1);
            rows.pop_back();
        }
    };
    pick_cols = [&](int from, int) {
        if (static_cast<int>(cols.size()) == k) {
            g = gcd_int(g, det(rows, cols));
            return;
        }
        for (int j = from; j < c; ++j) {
            cols.push_back(j);
            pick_cols(j + 1, 0);
            cols.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
    SmithResult R = smith_normal_form({{2, 4}, {6, 8}});
    CHECK(R.rank == 2);
    CHECK(R.factors == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).rank == 0);
    CHECK(smith_normal_form({{2, 0}, {0, 3}}).factors == std::vector<Integer>{1, 6});
}

TEST_CASE("invariant factors match gcds of minors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        DenseMatrix M(r, std::vector<Integer>(c));
        SparseMatrix S(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                M[i][j] = entry(rng);
                S.add(i, j, M[i][j]);
            }
        SmithResult R = smith_normal_form(M);
        Integer prefix = 1;
        for (int k = 1; k <= std::min(r, c); ++k) {
            Integer g = minor_gcd(M, k);
            if (k <= R.rank) {
                prefix *= R.factors[k - 1];
                CHECK(prefix == g);
            } else {
                CHECK(g == 0);
            }
        }
        for (size_t k = 1; k < R.factors.size(); ++k) CHECK(R.factors[k] % R.factors[k - 1] == 0);
        RankFactors F = invariant_factors(S);
        CHECK(F.rank == R.rank);
        CHECK(F.factors == R.factors);
    }
}

TEST_CASE("chain complexes use nondegenerate simplices") {
    ChainComplex P = chain_complex(point(3));
    CHECK(P.rank(0) == 1);
    for (int n = 1; n <= 3; ++n) CHECK(P.rank(n) == 0);

    ChainComplex I = chain_complex(standard_simplex(1, 2));
    CHECK(I.rank(0) == 2);
    CHECK(I.rank(1) == 1);
    DenseMatrix d1 = I.boundary[1].dense();
    CHECK(((d1[0][0] == 1 && d1[1][0] == -1) || (d1[0][0] == -1 && d1[1][0] == 1)));
    CHECK(boundary_squared_zero(I));

    // oracle: nondegenerate n-simplices of Delta(Sigma Z/2) are strings of non-identity elements
    TruncSimplicialSet G = geometric_nerve(*fixtures::sigma_cyclic(2), 4);
    ChainComplex C = chain_complex(G);
    for (int n = 0; n <= 4; ++n) CHECK(C.rank(n) == 1);
    CHECK(boundary_squared_zero(C));
}

TEST_CASE("homology of small examples") {
    HomologyReport P = homology(point(3));
    CHECK(P.is_point());
    CHECK(P.valid_through == 2);

    HomologyReport Z2 = homology(geometric_nerve(*fixtures::sigma_cyclic(2), 4));
    REQUIRE(Z2.groups.size() == 4);
    CHECK(Z2.groups == oracle::cyclic_group_homology(2, 3));
    CHECK(to_string(Z2.groups[0]) == "Z");
    CHECK(to_string(Z2.groups[1]) == "Z/2");
    CHECK(to_string(Z2.groups[2]) == "0");
    CHECK(to_string(Z2.groups[3]) == "Z/2");

    Category Z3;
    Z3.add_object("*");
    Z3.fill_units();
    std::vector<int> g = {0, Z3.add_arrow("g", 0, 0), Z3.add_arrow("h", 0, 0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Z3.set_comp(g[i], g[j], g[(i + j) % 3]);
    HomologyReport H3 = homology(nerve_category(Z3, 4));
    CHECK(H3.groups == oracle::cyclic_group_homology(3, 3));

    HomologyGroup mixed{2, {2}};
    CHECK(to_string(mixed) == "Z^2 + Z/2");
}

TEST_CASE("homology agrees with mod p ranks") {
    std::vector<TruncSimplicialSet> cases = {point(3), standard_simplex(2, 3),
                                             geometric_nerve(*fixtures::sigma_cyclic(2), 4),
                                             geometric_nerve(*fixtures::sigma_cyclic(3), 4),
                                             geometric_nerve(*fixtures::walking_two_cell(), 3)};
    for (const auto& S : cases) {
        HomologyReport H = homology(S);
        for (long long p : {0LL, 2LL, 3LL}) CHECK(oracle::mod_p_homology_dims(S, p) == oracle::predicted_mod_p_dims(H, p));
    }
}

TEST_CASE("components") {
    CHECK(pi0(point(2)) == 1);
    TruncSimplicialSet U = disjoint_union(point(2), disjoint_union(point(2), standard_simplex(1, 2)));
    CHECK(pi0(U) == 3);
    std::vector<int> labels = components(U);
    CHECK(labels.front() == 0);
    CHECK(pi0(geometric_nerve(one_object_from_monoidal(fixtures::max_poset_monoidal(2)), 2)) == 1);
}

TEST_CASE("comparing homology") {
    auto E = fixtures::walking_two_cell();
    EquivalenceReport R = homology_compare(diag(double_nerve(*E, 3)), geometric_nerve(*E, 3));
    CHECK(R.groups_agree());

    auto comma = fixtures::over_comma(E, E->object("1"));
    CHECK(homology_compare(geometric_nerve(*comma, 3), point(3)).groups_agree());
    CHECK_FALSE(homology_compare(geometric_nerve(*fixtures::sigma_cyclic(2), 3), point(3)).groups_agree());
    CHECK_THROWS_AS(homology_compare(point(2), point(3)), Error);
}
