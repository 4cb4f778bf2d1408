#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace twocat;

namespace {

// Random cell assignments, boundary-respecting or not.
TwoFunctor random_maps(std::mt19937& rng, const TwoCatPtr& S, const TwoCatPtr& T) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    TwoFunctor F{S, T, {}, {}, {}};
    for (int x = 0; x < S->num_objects(); ++x) F.obj.push_back(pick(T->num_objects()));
    for (int u = 0; u < S->num_cells1(); ++u) {
        const auto& h = T->hom(F.obj[S->src1(u)], F.obj[S->tgt1(u)]);
        F.c1.push_back(!h.empty() && rng() % 4 ? h[pick(static_cast<int>(h.size()))] : pick(T->num_cells1()));
    }
    for (int a = 0; a < S->num_cells2(); ++a) {
        const auto& b = T->cells2_between(F.c1[S->src2(a)], F.c1[S->tgt2(a)]);
        F.c2.push_back(!b.empty() && rng() % 4 ? b[pick(static_cast<int>(b.size()))] : pick(T->num_cells2()));
    }
    for (int x = 0; x < S->num_objects() && rng() % 2; ++x) F.c1[S->id1(x)] = T->id1(F.obj[x]);
    return F;
}

}  // namespace

TEST_CASE("random fixtures satisfy the structural properties") {
    props::Outcome out = props::run_suite(40, 20261016u);
    for (const auto& f : out.failures) UNSCOPED_INFO(f);
    CHECK(out.samples == 40);
    CHECK(out.ok());
}

TEST_CASE("identity constraints: lax functor iff 2-functor") {
    std::mt19937 rng(5);
    int valid = 0;
    for (int trial = 0; trial < 300; ++trial) {
        gen::Sample a = gen::random_twocat(rng, 1), b = gen::random_twocat(rng, 1);
        if (a.cat->num_cells2() > 12 || b.cat->num_cells2() > 12) continue;
        TwoFunctor F = trial % 3 == 0 ? identity_functor(a.cat) : random_maps(rng, a.cat, b.cat);
        bool two = validate_two_functor(F).ok();
        valid += two;
        INFO(a.label << " -> " << b.label);
        CHECK(validate_lax_functor(as_lax(F)).ok() == two);
    }
    CHECK(valid > 0);
}
