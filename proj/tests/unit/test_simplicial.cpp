#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace twocat;

namespace {

int count_nondegenerate(const TruncSimplicialSet& S, int n) { return static_cast<int>(S.nondegenerate(n).size()); }

}  // namespace

TEST_CASE("standard simplices count monotone maps") {
    TruncSimplicialSet D0 = standard_simplex(0, 3);
    for (int n = 0; n <= 3; ++n) CHECK(D0.size(n) == 1);

    TruncSimplicialSet D1 = standard_simplex(1, 3);
    CHECK(D1.size(1) == 3);
    CHECK(count_nondegenerate(D1, 1) == 1);

    for (int n = 0; n <= 3; ++n) {
        TruncSimplicialSet D = standard_simplex(n, 3);
        CHECK(audit_simplicial(D).ok());
        for (int m = 0; m <= 3; ++m) CHECK(D.size(m) == oracle::monotone_maps(m, n));
    }
    CHECK(standard_simplex(2, 2).size(2) == 10);
}

TEST_CASE("products of simplicial sets") {
    TruncSimplicialSet D1 = standard_simplex(1, 3), P = point(3);
    TruncSimplicialSet SP = product(D1, P);
    for (int n = 0; n <= 3; ++n) CHECK(SP.size(n) == D1.size(n));
    CHECK(audit_simplicial(SP).ok());

    TruncSimplicialSet PP = product(P, P);
    for (int n = 0; n <= 3; ++n) CHECK(PP.size(n) == 1);

    TruncSimplicialSet Sq = product(D1, D1);
    CHECK(audit_simplicial(Sq).ok());
    // oracle: a pair of 1-simplices is degenerate only when both are
    int oracle_count = 0;
    for (int a = 0; a < D1.size(1); ++a)
        for (int b = 0; b < D1.size(1); ++b) oracle_count += !(D1.degenerate[1][a] && D1.degenerate[1][b]);
    CHECK(oracle_count == 5);
    CHECK(count_nondegenerate(Sq, 1) == oracle_count);
    CHECK(count_nondegenerate(Sq, 2) == 2);
}

TEST_CASE("disjoint unions and components") {
    CHECK(pi0(standard_simplex(1, 2)) == 1);
    CHECK(pi0(disjoint_union(standard_simplex(0, 2), standard_simplex(1, 2))) == 2);
}

TEST_CASE("the audit catches a corrupted face") {
    TruncSimplicialSet D = standard_simplex(2, 3);
    REQUIRE(audit_simplicial(D).ok());
    int s = D.nondegenerate(2).front();
    D.face[2][0][s] = D.face[2][1][s];
    CHECK_FALSE(audit_simplicial(D).ok());
}

TEST_CASE("diagonal of bisimplicial sets") {
    TruncBisimplicialSet NT = double_nerve(*fixtures::terminal(), 3);
    TruncSimplicialSet DT = diag(NT);
    for (int n = 0; n <= 3; ++n) {
        CHECK(DT.size(n) == 1);
        CHECK(DT.degenerate[n][0] == (n > 0));
    }

    TruncSimplicialSet D1 = standard_simplex(1, 3);
    TruncBisimplicialSet X = external_product(D1, D1);
    CHECK(audit_bisimplicial(X).ok());
    CHECK(diag(X).size(1) == 9);

    TruncBisimplicialSet V = vertically_constant(D1);
    TruncSimplicialSet DV = diag(V);
    CHECK(audit_simplicial(DV).ok());
    for (int n = 0; n <= 3; ++n) CHECK(DV.size(n) == D1.size(n));
    CHECK(homology_compare(DV, D1).groups_agree());
}

TEST_CASE("codiagonal of a vertically constant set is the set itself") {
    for (int k : {0, 1, 2}) {
        TruncSimplicialSet X = standard_simplex(k, 3);
        TruncBisimplicialSet V = vertically_constant(X);
        TruncSimplicialSet W = codiagonal_wbar(V), D = diag(V);
        CHECK(audit_simplicial(W).ok());
        for (int n = 0; n <= 3; ++n) CHECK(W.size(n) == X.size(n));
        SimplicialMap eta = zisman_eta(V, D, W);
        CHECK(validate_simplicial_map(D, W, eta).ok());
        CHECK(is_bijective(eta, D, W));
        // under diag V = X the map sends t to the tuple of its faces, which is determined by t
        for (int n = 0; n <= 3; ++n)
            for (int s = 0; s < D.size(n); ++s) CHECK(W.keys[n][eta.map[n][s]].back() == s);
    }
}

TEST_CASE("codiagonal of the double nerve of Sigma Z/2") {
    auto S = fixtures::sigma_cyclic(2);
    TruncBisimplicialSet NN = double_nerve(*S, 3);
    TruncSimplicialSet W = codiagonal_wbar(NN);
    REQUIRE(audit_simplicial(W).ok());

    // oracle: tuples (t_0, t_1, t_2), t_m in S_{m,2-m}, with d_0^v t_m = d_{m+1}^h t_{m+1}
    int tuples = 0;
    for (int t0 = 0; t0 < NN.size(0, 2); ++t0)
        for (int t1 = 0; t1 < NN.size(1, 1); ++t1)
            for (int t2 = 0; t2 < NN.size(2, 0); ++t2)
                tuples += NN.dv(0, 2, 0, t0) == NN.dh(1, 1, 1, t1) && NN.dv(1, 1, 0, t1) == NN.dh(2, 0, 2, t2);
    CHECK(tuples == 4);
    CHECK(W.size(2) == tuples);

    for (int s = 0; s < W.size(2); ++s) CHECK(W.d(1, 0, W.d(2, 2, s)) == W.d(1, 1, W.d(2, 0, s)));
}

TEST_CASE("the comparison map evaluated by hand") {
    auto S = fixtures::sigma_cyclic(2);
    TruncBisimplicialSet NN = double_nerve(*S, 3);
    TruncSimplicialSet D = diag(NN), W = codiagonal_wbar(NN);
    SimplicialMap eta = zisman_eta(NN, D, W);
    REQUIRE(validate_simplicial_map(D, W, eta).ok());
    for (int t = 0; t < NN.size(2, 2); ++t) {
        // eta(t)_m = (d_{m+1}^h)^{2-m} (d_0^v)^m t
        int v1 = NN.dv(2, 2, 0, t), v2 = NN.dv(2, 1, 0, v1);
        Key hand = {NN.dh(1, 2, 1, NN.dh(2, 2, 1, t)), NN.dh(2, 1, 2, v1), v2};
        CHECK(W.keys[2][eta.map[2][t]] == hand);
    }
    EquivalenceReport R = homology_compare(D, W, &eta);
    REQUIRE(R.a.groups.size() >= 2);
    CHECK(to_string(R.a.groups[1]) == "Z/2");
    CHECK(to_string(R.b.groups[1]) == "Z/2");
    CHECK(R.h0_iso.value_or(false));
    CHECK(R.h1_iso.value_or(false));
    CHECK(R.chain_map_ok.value_or(false));
}

TEST_CASE("transposition swaps the two directions") {
    TruncBisimplicialSet NN = double_nerve(*fixtures::walking_two_cell(), 2);
    TruncBisimplicialSet T = transpose(NN);
    CHECK(audit_bisimplicial(T).ok());
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(T.size(p, q) == NN.size(q, p));
}

TEST_CASE("simplicial maps compose and invert") {
    TruncSimplicialSet D = standard_simplex(2, 3);
    SimplicialMap id = identity_map(D);
    CHECK(validate_simplicial_map(D, D, id).ok());
    CHECK(is_bijective(id, D, D));
    SimplicialMap twice = compose_maps(id, id);
    CHECK(twice.map == id.map);
}
