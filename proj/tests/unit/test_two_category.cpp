#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace twocat;

namespace {

// Objects 0, 1 with max; the object 1 carries an extra automorphism f with f o f = 1.
MonoidalCategory max_with_flip() {
    MonoidalCategory M;
    Category& C = M.cat;
    int o0 = C.add_object("0"), o1 = C.add_object("1");
    int f = C.add_arrow("f", o1, o1);
    C.fill_units();
    C.set_comp(f, f, C.id(o1));
    M.unit = o0;
    for (int a : {o0, o1})
        for (int b : {o0, o1}) {
            M.tensor_obj[pair_key(a, b)] = std::max(a, b);
            M.tensor_arr[pair_key(C.id(a), C.id(b))] = C.id(std::max(a, b));
        }
    for (int a : {o0, o1}) {
        M.tensor_arr[pair_key(f, C.id(a))] = f;
        M.tensor_arr[pair_key(C.id(a), f)] = f;
    }
    M.tensor_arr[pair_key(f, f)] = C.id(o1);
    return M;
}

}  // namespace

TEST_CASE("terminal and walking 2-cell validate") {
    CHECK(validate_two_category(*fixtures::terminal()).ok());
    auto E = fixtures::walking_two_cell();
    CHECK(validate_two_category(*E).ok());
    CHECK(E->num_objects() == 2);
    CHECK(E->num_cells1() == 4);
    CHECK(E->num_cells2() == 5);
}

TEST_CASE("redirecting 1 o a to the identity of u breaks interchange") {
    auto E = std::make_shared<TwoCategory>(*fixtures::walking_two_cell());
    int a = E->c2("a"), u = E->c1("u");
    E->set_hcomp2(E->id2(E->id1(E->object("0"))), a, E->id2(u));
    ValidationReport r = validate_two_category(*E);
    CHECK(r.has("InterchangeViolation"));
}

TEST_CASE("duplicate names are rejected") {
    TwoCategory C;
    C.add_object("x");
    CHECK_THROWS_AS(C.add_object("x"), Error);
}

TEST_CASE("one-object 2-categories of monoidal categories") {
    MonoidalCategory trivial = fixtures::cyclic_monoidal(1);
    TwoCategory T = one_object_from_monoidal(trivial);
    CHECK(T.num_objects() == 1);
    CHECK(T.num_cells1() == 1);
    CHECK(T.num_cells2() == 1);

    TwoCategory S = one_object_from_monoidal(fixtures::cyclic_monoidal(2));
    CHECK(validate_two_category(S).ok());
    CHECK(S.num_cells1() == 2);
    CHECK(S.num_cells2() == 2);

    TwoCategory I = one_object_from_monoidal(fixtures::idempotent_monoidal());
    CHECK(validate_two_category(I).ok());
    CHECK(I.num_cells1() == 1);
    CHECK(I.num_cells2() == 2);

    for (int k = 1; k <= 3; ++k) CHECK(validate_two_category(one_object_from_monoidal(fixtures::max_poset_monoidal(k))).ok());
    CHECK(validate_two_category(one_object_from_monoidal(max_with_flip())).ok());
}

TEST_CASE("a tensor without strict units is refused") {
    MonoidalCategory M = fixtures::cyclic_monoidal(2);
    M.tensor_obj[pair_key(0, 1)] = 0;
    CHECK_THROWS_AS(one_object_from_monoidal(M), Error);
}

TEST_CASE("opposite reverses 1-cells and is an involution") {
    auto E = fixtures::walking_two_cell();
    TwoCategory op = opposite(*E);
    CHECK(validate_two_category(op).ok());
    CHECK(op.hom(op.object("0"), op.object("1")).size() == 2);
    CHECK(op.hom(op.object("1"), op.object("0")).empty());
    CHECK(write_twocat(opposite(op)) == write_twocat(*E));
    CHECK(write_twocat(opposite(*fixtures::terminal())) == write_twocat(*fixtures::terminal()));
    CHECK(write_twocat(coopposite(coopposite(*E))) == write_twocat(*E));
}

TEST_CASE("products with a category") {
    auto T = fixtures::terminal();
    TwoCategory P = product_with_category(*T, ordinal(1));
    CHECK(validate_two_category(P).ok());
    CHECK(P.num_objects() == 2);
    CHECK(P.num_cells1() == 3);

    auto E = fixtures::walking_two_cell();
    Category I = ordinal(1);
    TwoCategory EI = product_with_category(*E, I);
    CHECK(validate_two_category(EI).ok());
    CHECK(EI.num_objects() == 4);
    // oracle: every pair (b -> b', i -> j)
    long long pairs = 0;
    for (int b = 0; b < E->num_objects(); ++b)
        for (int b2 = 0; b2 < E->num_objects(); ++b2)
            for (int i = 0; i < I.num_objects(); ++i)
                for (int j = 0; j < I.num_objects(); ++j) {
                    long long arrows = 0;
                    for (int f = 0; f < I.num_arrows(); ++f) arrows += I.src(f) == i && I.tgt(f) == j;
                    pairs += static_cast<long long>(E->hom(b, b2).size()) * arrows;
                }
    CHECK(pairs == 12);
    CHECK(EI.num_cells1() == pairs);
}

TEST_CASE("lax functors out of ordinals") {
    auto S = fixtures::sigma_cyclic(2);
    int a = S->c1("g1"), e = S->id1(0);
    GSimplex x(2);
    x.x(0) = x.x(1) = x.x(2) = 0;
    x.x(0, 1) = a;
    x.x(1, 2) = a;
    x.x(0, 2) = e;
    x.x(0, 1, 2) = S->id2(e);
    fill_degenerate(*S, x);
    CHECK(validate_simplex(*S, x).ok());
    CHECK(validate_lax_functor(simplex_as_lax_functor(*S, x)).ok());
    // oracle: Delta_2 (Sigma Z/2) by exhaustive assignment
    CHECK(oracle::geometric_count(*S, 2) == 4);
    TruncSimplicialSet G = geometric_nerve(*S, 2);
    CHECK(G.size(2) == 4);
    CHECK(G.find(2, x.key()) >= 0);
}

TEST_CASE("a corrupted 3-simplex fails the cocycle condition") {
    // Sigma Z/2 has only identity 2-cells, so the corruption uses the idempotent monoid {1, f}.
    auto I = std::make_shared<TwoCategory>(one_object_from_monoidal(fixtures::idempotent_monoidal()));
    int e = I->id1(0), f = I->c2("f");
    GSimplex x(3);
    for (int i = 0; i <= 3; ++i) x.x(i) = 0;
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) x.x(i, j) = e;
    fill_degenerate(*I, x);
    for (int i = 0; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = j + 1; k <= 3; ++k) x.x(i, j, k) = I->id2(e);
    CHECK(validate_simplex(*I, x).ok());
    x.x(0, 1, 2) = f;
    CHECK(validate_lax_functor(simplex_as_lax_functor(*I, x)).has("CocycleViolation"));
}

TEST_CASE("lax transformations") {
    auto E = fixtures::walking_two_cell();
    TwoFunctor id = identity_functor(E);
    CHECK(validate_lax_transformation(identity_transformation(id)).ok());

    auto fib = fibre_over(id, E->object("1"));
    CommaContraction cc = comma_contraction(id, fib);
    CHECK(cc.t.oplax);
    CHECK(validate_lax_transformation(cc.t).ok());
}

TEST_CASE("replacing one component breaks the hexagon at a named pair") {
    TwoCategory Nd;
    Nd.add_object("*");
    int one = Nd.add_cell1("1", 0, 0);
    Nd.set_hcomp1(one, one, one);
    Nd.fill_units();
    auto S = std::make_shared<TwoCategory>(Nd);
    auto T = std::make_shared<TwoCategory>(one_object_from_monoidal(max_with_flip()));
    REQUIRE(validate_two_category(*S).ok());
    int t1 = T->c1("1");
    TwoFunctor F{S, T, {0}, {T->id1(0), t1}, {T->id2(T->id1(0)), T->id2(t1)}};
    REQUIRE(validate_two_functor(F).ok());
    LaxTransformation t;
    t.F = t.G = as_lax(F);
    t.comp1 = {t1};
    t.comp2 = {T->id2(t1), T->id2(t1)};
    CHECK(validate_lax_transformation(t).ok());
    t.comp2[one] = T->c2("f");
    ValidationReport r = validate_lax_transformation(t);
    REQUIRE(r.has("HexagonViolation"));
    bool named = false;
    for (const auto& f : r.findings) named = named || f.detail.find("(1, 1)") != std::string::npos;
    CHECK(named);
}

TEST_CASE("a lax functor with identity constraints validates iff its maps form a 2-functor") {
    auto E = fixtures::walking_two_cell();
    TwoFunctor id = identity_functor(E);
    CHECK(validate_two_functor(id).ok());
    CHECK(validate_lax_functor(as_lax(id)).ok());
    TwoFunctor bad = id;
    bad.c2[E->c2("a")] = E->id2(E->c1("u"));  // a |-> 1_u has the wrong target
    CHECK_FALSE(validate_two_functor(bad).ok());
    CHECK_FALSE(validate_lax_functor(as_lax(bad)).ok());
}
