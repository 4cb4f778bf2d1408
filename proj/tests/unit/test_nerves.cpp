#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <set>

#include "support.hpp"

using namespace twocat;

namespace {

Category cyclic_group_category(int n) {
    Category C;
    C.add_object("*");
    std::vector<int> g = {0};
    C.fill_units();
    for (int i = 1; i < n; ++i) g.push_back(C.add_arrow("g" + std::to_string(i), 0, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C.set_comp(g[i], g[j], g[(i + j) % n]);
    return C;
}

// Each compatible family (y_0..y_4) of 3-simplices, d_i y_j = d_{j-1} y_i for i < j, should
// come from exactly one 4-simplex.
void check_three_coskeletal(const TruncSimplicialSet& G) {
    REQUIRE(G.cap >= 4);
    std::set<std::vector<int>> boundaries;
    std::vector<int> y(5);
    std::function<void(int)> extend = [&](int j) {
        if (j == 5) {
            boundaries.insert(y);
            return;
        }
        for (int c = 0; c < G.size(3); ++c) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) ok = G.d(3, i, c) == G.d(3, j - 1, y[i]);
            if (!ok) continue;
            y[j] = c;
            extend(j + 1);
        }
    };
    extend(0);
    std::set<std::vector<int>> filled;
    for (int s = 0; s < G.size(4); ++s) {
        std::vector<int> b;
        for (int i = 0; i <= 4; ++i) b.push_back(G.d(4, i, s));
        filled.insert(b);
    }
    CHECK(static_cast<int>(filled.size()) == G.size(4));
    CHECK(filled == boundaries);
}

}  // namespace

TEST_CASE("nerves of categories count composable strings") {
    CHECK(nerve_category(terminal_category(), 3).size(3) == 1);
    Category I = ordinal(1);
    TruncSimplicialSet NI = nerve_category(I, 3);
    CHECK(oracle::nerve_count(I, 2) == 4);
    CHECK(NI.size(2) == 4);
    for (int k : {2, 3}) {
        Category Z = cyclic_group_category(k);
        TruncSimplicialSet N = nerve_category(Z, 3);
        CHECK(audit_simplicial(N).ok());
        for (int n = 0; n <= 3; ++n) {
            CHECK(N.size(n) == oracle::nerve_count(Z, n));
            CHECK(N.size(n) == static_cast<int>(std::pow(k, n)));
        }
    }
    Category O = ordinal(3);
    TruncSimplicialSet NO = nerve_category(O, 3);
    for (int n = 0; n <= 3; ++n) CHECK(NO.size(n) == oracle::monotone_maps(n, 3));
}

TEST_CASE("levels of the nerve of a 2-category") {
    auto D = fixtures::discrete_ordinal(2);
    SimplicialCategory S = nerve_two_category(*D, 3);
    CHECK(validate_simplicial_category(S).ok());
    TruncSimplicialSet N = nerve_category(ordinal(2), 3);
    for (int p = 0; p <= 3; ++p) {
        CHECK(S.levels[p].num_objects() == N.size(p));
        CHECK(S.levels[p].num_arrows() == N.size(p));
    }

    SimplicialCategory Z = nerve_two_category(*fixtures::sigma_cyclic(2), 3);
    for (int p = 0; p <= 3; ++p) {
        CHECK(Z.levels[p].num_objects() == (1 << p));
        CHECK(Z.levels[p].num_arrows() == (1 << p));
    }

    auto E = fixtures::walking_two_cell();
    SimplicialCategory SE = nerve_two_category(*E, 2);
    CHECK(validate_simplicial_category(SE).ok());
    // oracle: arrows of level 1 are the 2-cells of E, counted over parallel pairs
    long long two_cells = 0;
    for (int f = 0; f < E->num_cells1(); ++f)
        for (int g = 0; g < E->num_cells1(); ++g)
            if (E->src1(f) == E->src1(g) && E->tgt1(f) == E->tgt1(g)) two_cells += E->cells2_between(f, g).size();
    CHECK(two_cells == 5);
    CHECK(SE.levels[1].num_arrows() == two_cells);
}

TEST_CASE("double nerves") {
    TruncBisimplicialSet ND = double_nerve(*fixtures::discrete_ordinal(2), 2);
    CHECK(audit_bisimplicial(ND).ok());
    TruncSimplicialSet N = nerve_category(ordinal(2), 2);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(ND.size(p, q) == N.size(p));

    TruncBisimplicialSet NZ = double_nerve(*fixtures::sigma_cyclic(2), 2);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(NZ.size(p, q) == (1 << p));

    TruncBisimplicialSet NE = double_nerve(*fixtures::walking_two_cell(), 2);
    CHECK(audit_bisimplicial(NE).ok());
    CHECK(NE.size(1, 1) == 5);
}

TEST_CASE("geometric nerves agree with the brute-force oracle") {
    auto E = fixtures::walking_two_cell();
    TruncSimplicialSet G = geometric_nerve(*E, 3);
    CHECK(audit_simplicial(G).ok());
    for (int n = 0; n <= 3; ++n) CHECK(G.size(n) == oracle::geometric_count(*E, n));
    CHECK(G.size(2) == 8);

    for (int k = 1; k <= 2; ++k) {
        MonoidalCategory M = fixtures::max_poset_monoidal(k);
        TwoCategory S = one_object_from_monoidal(M);
        TruncSimplicialSet GS = geometric_nerve(S, 2);
        CHECK(GS.size(0) == 1);
        // 2-simplices are arrows a (x) b -> c
        long long arrows = 0;
        for (int a = 0; a < M.cat.num_objects(); ++a)
            for (int b = 0; b < M.cat.num_objects(); ++b)
                for (int c = 0; c < M.cat.num_objects(); ++c)
                    for (int f : M.cat.from(M.tensor_objects(a, b))) arrows += M.cat.tgt(f) == c;
        CHECK(GS.size(2) == arrows);
        CHECK(GS.size(2) == oracle::geometric_count(S, 2));
    }

    for (int n = 0; n <= 3; ++n)
        for (const Key& k : G.keys[n]) CHECK(validate_simplex(*E, simplex_from_key(*E, n, k)).ok());
}

TEST_CASE("for a category the geometric nerve is the nerve") {
    for (Category C : {terminal_category(), ordinal(1), ordinal(2), cyclic_group_category(2)}) {
        TwoCategory D = from_category(C);
        TruncSimplicialSet N = nerve_category(C, 3), G = geometric_nerve(D, 3);
        CHECK(oracle::nerve_vs_geometric(C, D, N, G) == "");
    }
}

TEST_CASE("geometric nerves of one-object 2-categories are 3-coskeletal") {
    check_three_coskeletal(geometric_nerve(*fixtures::sigma_cyclic(2), 4));
    check_three_coskeletal(geometric_nerve(one_object_from_monoidal(fixtures::idempotent_monoidal()), 4));
    check_three_coskeletal(geometric_nerve(one_object_from_monoidal(fixtures::max_poset_monoidal(1)), 4));
}

TEST_CASE("nerve maps of functors") {
    auto E = fixtures::walking_two_cell();
    TruncSimplicialSet G = geometric_nerve(*E, 3);
    SimplicialMap id = geometric_nerve_map(as_lax(identity_functor(E)), G, G);
    CHECK(id.map == identity_map(G).map);

    TwoFunctor F = fixtures::point_into_sigma_z2();
    TruncSimplicialSet P = geometric_nerve(*F.src, 3), S = geometric_nerve(*F.tgt, 3);
    SimplicialMap f = geometric_nerve_map(as_lax(F), P, S);
    CHECK(validate_simplicial_map(P, S, f).ok());
}

TEST_CASE("the cylinder of a transformation restricts to its ends") {
    auto E = fixtures::walking_two_cell();
    auto T = fixtures::terminal();
    TwoFunctor F{T, E, {E->object("1")}, {E->id1(E->object("1"))}, {E->id2(E->id1(E->object("1")))}};
    TwoFunctor G{T, E, {E->object("0")}, {E->id1(E->object("0"))}, {E->id2(E->id1(E->object("0")))}};
    REQUIRE(validate_two_functor(F).ok());
    REQUIRE(validate_two_functor(G).ok());
    LaxTransformation t = two_natural(F, G, {E->c1("u")});
    REQUIRE(validate_lax_transformation(t).ok());

    Cylinder cyl = cylinder_lax_functor(t);
    CHECK(validate_lax_functor(cyl.H).ok());
    CHECK(same_lax_functor(compose(cyl.H, cyl.incl1), as_lax(F)));
    CHECK(same_lax_functor(compose(cyl.H, cyl.incl0), as_lax(G)));
    int cross = -1;
    for (int w : cyl.H.src->hom(cyl.incl1.obj[0], cyl.incl0.obj[0])) cross = w;
    REQUIRE(cross >= 0);
    CHECK(cyl.H.c1[cross] == E->c1("u"));

    TruncSimplicialSet P = geometric_nerve(*T, 2), GE = geometric_nerve(*E, 2);
    TruncSimplicialSet GC = geometric_nerve(*cyl.H.src, 2);
    SimplicialMap h = geometric_nerve_map(cyl.H, GC, GE);
    CHECK(validate_simplicial_map(GC, GE, h).ok());
    SimplicialMap end1 = compose_maps(h, geometric_nerve_map(as_lax(cyl.incl1), P, GC));
    CHECK(end1.map == geometric_nerve_map(as_lax(F), P, GE).map);
}
