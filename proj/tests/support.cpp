#include "support.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <functional>
#include <numeric>

namespace fixtures {

std::string path(const std::string& name) { return std::string(TWOCAT_FIXTURES) + "/" + name; }

TwoCatPtr load_twocat(const std::string& name) { return parse_file(path(name)).twocat; }

std::shared_ptr<TwoDiagram> load_diagram(const std::string& name) { return parse_file(path(name)).diagram; }

TwoCatPtr terminal() { return std::make_shared<TwoCategory>(from_category(terminal_category())); }

TwoCatPtr discrete_ordinal(int n) { return std::make_shared<TwoCategory>(from_category(ordinal(n))); }

TwoCatPtr walking_two_cell() {
    auto E = std::make_shared<TwoCategory>();
    int o0 = E->add_object("0"), o1 = E->add_object("1");
    int u = E->add_cell1("u", o1, o0), v = E->add_cell1("v", o1, o0);
    E->add_cell2("a", u, v);
    E->fill_units();
    return E;
}

MonoidalCategory cyclic_monoidal(int n) {
    MonoidalCategory M;
    for (int i = 0; i < n; ++i) M.cat.add_object(i ? "g" + std::to_string(i) : "e");
    M.cat.fill_units();
    M.unit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            M.tensor_obj[pair_key(i, j)] = (i + j) % n;
            M.tensor_arr[pair_key(M.cat.id(i), M.cat.id(j))] = M.cat.id((i + j) % n);
        }
    return M;
}

TwoCatPtr sigma_cyclic(int n) { return std::make_shared<TwoCategory>(one_object_from_monoidal(cyclic_monoidal(n))); }

MonoidalCategory idempotent_monoidal() {
    MonoidalCategory M;
    int e = M.cat.add_object("e");
    int f = M.cat.add_arrow("f", e, e);
    M.cat.set_comp(f, f, f);
    M.cat.fill_units();
    int one = M.cat.id(e);
    M.unit = e;
    M.tensor_obj[pair_key(e, e)] = e;
    for (int a : {one, f})
        for (int b : {one, f}) M.tensor_arr[pair_key(a, b)] = (a == f || b == f) ? f : one;
    return M;
}

MonoidalCategory max_poset_monoidal(int k) {
    MonoidalCategory M;
    Category& C = M.cat;
    for (int i = 0; i <= k; ++i) C.add_object(std::to_string(i));
    std::vector<std::vector<int>> a(k + 1, std::vector<int>(k + 1, -1));
    for (int i = 0; i <= k; ++i) a[i][i] = C.id(i);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) a[i][j] = C.add_arrow("l" + std::to_string(i) + "_" + std::to_string(j), i, j);
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int l = j; l <= k; ++l) C.set_comp(a[j][l], a[i][j], a[i][l]);
    C.fill_units();
    M.unit = 0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) M.tensor_obj[pair_key(i, j)] = std::max(i, j);
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int i2 = 0; i2 <= k; ++i2)
                for (int j2 = i2; j2 <= k; ++j2)
                    M.tensor_arr[pair_key(a[i][j], a[i2][j2])] = a[std::max(i, i2)][std::max(j, j2)];
    return M;
}

TwoCatPtr under_comma(const TwoCatPtr& C, int z) { return fibre_under(identity_functor(C), z).ptr(); }
TwoCatPtr over_comma(const TwoCatPtr& C, int z) { return fibre_over(identity_functor(C), z).ptr(); }

MonoidalAction z2_self_action() {
    MonoidalAction A;
    A.M = cyclic_monoidal(2);
    Category& N = A.N;
    N.add_object("p");
    N.add_object("q");
    N.fill_units();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            A.act_obj[pair_key(i, j)] = i ^ j;
            A.act_arr[pair_key(N.id(i), A.M.cat.id(j))] = N.id(i ^ j);
        }
    return A;
}

TwoDiagram flip_diagram() {
    auto B = discrete_ordinal(1);
    auto F = std::make_shared<TwoCategory>();
    int p = F->add_object("p"), q = F->add_object("q");
    F->fill_units();
    TwoDiagram D;
    D.base = B;
    D.fibre.assign(2, F);
    D.ustar.resize(B->num_cells1());
    D.astar.resize(B->num_cells2());
    TwoFunctor swap{F, F, {}, {}, {}};
    swap.obj = {q, p};
    swap.c1.assign(F->num_cells1(), -1);
    swap.c2.assign(F->num_cells2(), -1);
    for (int x : {p, q}) {
        int y = x == p ? q : p;
        swap.c1[F->id1(x)] = F->id1(y);
        swap.c2[F->id2(F->id1(x))] = F->id2(F->id1(y));
    }
    D.ustar[B->hom(1, 0)[0]] = swap;
    fill_diagram_defaults(D);
    return D;
}

TwoFunctor point_into_sigma_z2() {
    TwoCatPtr S = sigma_cyclic(2), P = terminal();
    int s = 0;
    return TwoFunctor{P, S, {s}, {S->id1(s)}, {S->id2(S->id1(s))}};
}

}  // namespace fixtures

namespace oracle {

long long monotone_maps(int m, int n) {
    // C(m + n + 1, m + 1)
    long long r = 1;
    int top = m + n + 1, k = m + 1;
    for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

long long nerve_count(const Category& C, int n) {
    if (n == 0) return C.num_objects();
    std::vector<int> a(n, 0);
    long long count = 0;
    int A = C.num_arrows();
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            bool ok = true;
            for (int i = 0; i + 1 < n; ++i) ok = ok && C.src(a[i]) == C.tgt(a[i + 1]);
            count += ok;
            return;
        }
        for (int f = 0; f < A; ++f) {
            a[k] = f;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

long long geometric_count(const TwoCategory& C, int n) {
    std::vector<int> x(n + 1);
    std::vector<std::vector<int>> f(n + 1, std::vector<int>(n + 1, -1));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) triples.push_back({i, j, k});
    std::map<std::array<int, 3>, int> t;
    long long count = 0;

    auto cocycle = [&]() {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        int lhs = C.vcomp(t[{i, k, l}], C.hcomp2(t[{i, j, k}], C.id2(f[k][l])));
                        int rhs = C.vcomp(t[{i, j, l}], C.hcomp2(C.id2(f[i][j]), t[{j, k, l}]));
                        if (lhs < 0 || lhs != rhs) return false;
                    }
        return true;
    };
    std::function<void(size_t)> cells2 = [&](size_t k) {
        if (k == triples.size()) {
            count += cocycle();
            return;
        }
        auto [i, j, l] = triples[k];
        int comp = C.hcomp1(f[i][j], f[j][l]);
        for (int a = 0; a < C.num_cells2(); ++a)
            if (C.src2(a) == comp && C.tgt2(a) == f[i][l]) {
                t[triples[k]] = a;
                cells2(k + 1);
            }
    };
    std::function<void(size_t)> cells1 = [&](size_t k) {
        if (k == pairs.size()) {
            cells2(0);
            return;
        }
        auto [i, j] = pairs[k];
        for (int u = 0; u < C.num_cells1(); ++u)
            if (C.src1(u) == x[j] && C.tgt1(u) == x[i]) {
                f[i][j] = u;
                cells1(k + 1);
            }
    };
    std::function<void(int)> objects = [&](int k) {
        if (k > n) {
            cells1(0);
            return;
        }
        for (int o = 0; o < C.num_objects(); ++o) {
            x[k] = o;
            objects(k + 1);
        }
    };
    objects(0);
    return count;
}

long long over_fibre_objects(const TwoFunctor& F, int z) {
    long long n = 0;
    for (int x = 0; x < F.src->num_objects(); ++x) n += F.tgt->hom(z, F.obj[x]).size();
    return n;
}

long long under_fibre_objects(const TwoFunctor& F, int z) {
    long long n = 0;
    for (int x = 0; x < F.src->num_objects(); ++x) n += F.tgt->hom(F.obj[x], z).size();
    return n;
}

namespace {

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long inverse(long long a, long long p) {
    long long r = 1, e = p - 2;
    a = mod(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int rank_mod(std::vector<std::vector<long long>> M, long long p) {
    int rows = static_cast<int>(M.size());
    if (!rows) return 0;
    int cols = static_cast<int>(M[0].size()), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (mod(M[i][c], p)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[piv], M[r]);
        long long inv = inverse(M[r][c], p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !mod(M[i][c], p)) continue;
            long long k = mod(M[i][c], p) * inv % p;
            for (int j = c; j < cols; ++j) M[i][j] = mod(M[i][j] - k * mod(M[r][j], p), p);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<int> mod_p_homology_dims(const TruncSimplicialSet& S, long long p) {
    if (p == 0) p = 1000000007;
    std::vector<std::vector<int>> basis(S.cap + 1);
    std::vector<std::map<int, int>> pos(S.cap + 1);
    for (int n = 0; n <= S.cap; ++n)
        for (int s = 0; s < S.size(n); ++s)
            if (!S.degenerate[n][s]) {
                pos[n][s] = static_cast<int>(basis[n].size());
                basis[n].push_back(s);
            }
    std::vector<int> rk(S.cap + 2, 0);
    for (int n = 1; n <= S.cap; ++n) {
        std::vector<std::vector<long long>> M(basis[n - 1].size(), std::vector<long long>(basis[n].size(), 0));
        for (size_t c = 0; c < basis[n].size(); ++c)
            for (int i = 0; i <= n; ++i) {
                auto it = pos[n - 1].find(S.d(n, i, basis[n][c]));
                if (it != pos[n - 1].end()) M[it->second][c] += (i % 2 ? -1 : 1);
            }
        rk[n] = rank_mod(M, p);
    }
    std::vector<int> dims;
    for (int n = 0; n < S.cap; ++n) dims.push_back(static_cast<int>(basis[n].size()) - rk[n] - rk[n + 1]);
    return dims;
}

std::vector<int> predicted_mod_p_dims(const HomologyReport& H, long long p) {
    auto t = [&](int k) {
        if (p == 0 || k < 0) return 0;
        int c = 0;
        for (const auto& f : H.groups[k].torsion) c += (f % p == 0);
        return c;
    };
    std::vector<int> out;
    for (int n = 0; n < static_cast<int>(H.groups.size()); ++n) out.push_back(H.groups[n].betti + t(n) + t(n - 1));
    return out;
}

std::string nerve_vs_geometric(const Category& C, const TwoCategory& D, const TruncSimplicialSet& N,
                               const TruncSimplicialSet& G) {
    auto translate = [&](int n, const Key& k) {
        GSimplex x(n);
        x.x(0) = D.object(C.object_name(k[0]));
        for (int i = 1; i <= n; ++i) x.x(i) = D.object(C.object_name(C.src(k[i])));
        for (int i = 0; i <= n; ++i) {
            x.x(i, i) = D.id1(x.x(i));
            for (int j = i + 1; j <= n; ++j) x.x(i, j) = D.hc1(x.x(i, j - 1), D.c1(C.arrow_name(k[j])));
        }
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k2 = j; k2 <= n; ++k2) x.x(i, j, k2) = D.id2(x.x(i, k2));
        return x.key();
    };
    int cap = std::min(N.cap, G.cap);
    for (int n = 0; n <= cap; ++n) {
        if (N.size(n) != G.size(n))
            return "size mismatch in dimension " + std::to_string(n);
        for (int s = 0; s < N.size(n); ++s) {
            int g = G.find(n, translate(n, N.keys[n][s]));
            if (g < 0) return "simplex missing in dimension " + std::to_string(n);
            for (int i = 0; n > 0 && i <= n; ++i)
                if (G.find(n - 1, translate(n - 1, N.keys[n - 1][N.d(n, i, s)])) != G.d(n, i, g))
                    return "face d_" + std::to_string(i) + " differs in dimension " + std::to_string(n);
        }
    }
    return "";
}

std::vector<HomologyGroup> cyclic_group_homology(int n, int through) {
    std::vector<HomologyGroup> out;
    for (int k = 0; k <= through; ++k) {
        HomologyGroup g;
        if (k == 0)
            g.betti = 1;
        else if (k % 2 == 1 && n > 1)
            g.torsion.push_back(n);
        out.push_back(g);
    }
    return out;
}

}  // namespace oracle

namespace gen {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

TwoCatPtr random_locally_posetal(std::mt19937& rng, int k) {
    auto C = std::make_shared<TwoCategory>();
    int o0 = C->add_object("0"), o1 = C->add_object("1");
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = C->add_cell1("c" + std::to_string(i), o1, o0);
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) le[i][j] = pick(rng, 0, 1);
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (le[i][m] && le[m][j]) le[i][j] = true;
    std::vector<std::vector<int>> r(k, std::vector<int>(k, -1));
    for (int i = 0; i < k; ++i) r[i][i] = C->id2(c[i]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (le[i][j]) r[i][j] = C->add_cell2("r" + std::to_string(i) + "_" + std::to_string(j), c[i], c[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (r[i][j] >= 0 && r[j][l] >= 0) C->set_vcomp(r[j][l], r[i][j], r[i][l]);
    C->fill_units();
    return C;
}

Sample random_twocat(std::mt19937& rng, int depth) {
    using namespace fixtures;
    int family = pick(rng, 0, depth ? 5 : 9);
    switch (family) {
        case 0: {
            int n = pick(rng, 1, 4);
            return {"sigma Z/" + std::to_string(n), sigma_cyclic(n)};
        }
        case 1: {
            int n = pick(rng, 0, 2);
            return {"[" + std::to_string(n) + "]", discrete_ordinal(n)};
        }
        case 2: {
            int k = pick(rng, 1, 3);
            return {"locally posetal k=" + std::to_string(k), random_locally_posetal(rng, k)};
        }
        case 3: {
            int k = pick(rng, 1, 2);
            return {"sigma (max, " + std::to_string(k) + ")",
                    std::make_shared<TwoCategory>(one_object_from_monoidal(max_poset_monoidal(k)))};
        }
        case 4: return {"sigma idempotent", std::make_shared<TwoCategory>(one_object_from_monoidal(idempotent_monoidal()))};
        case 5: return {"E", walking_two_cell()};
        case 6: {
            Sample s = random_twocat(rng, 1);
            while (s.cat->num_cells2() > 6) s = random_twocat(rng, 1);
            return {s.label + " x [1]", std::make_shared<TwoCategory>(product_with_category(*s.cat, ordinal(1)))};
        }
        case 7: {
            Sample s = random_twocat(rng, 1);
            return {"op " + s.label, std::make_shared<TwoCategory>(opposite(*s.cat))};
        }
        case 8: {
            Sample s = random_twocat(rng, 1);
            return {"co " + s.label, std::make_shared<TwoCategory>(coopposite(*s.cat))};
        }
        default: {
            Sample s = random_twocat(rng, 1);
            int z = pick(rng, 0, s.cat->num_objects() - 1);
            bool under = pick(rng, 0, 1);
            std::string l = under ? s.label + "//" + s.cat->object_name(z) : s.cat->object_name(z) + "//" + s.label;
            return {l, under ? under_comma(s.cat, z) : over_comma(s.cat, z)};
        }
    }
}

TwoCatPtr shuffled_copy(const TwoCategory& C, std::mt19937& rng) {
    auto perm = [&](int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    auto D = std::make_shared<TwoCategory>();
    std::vector<int> mo(C.num_objects()), m1(C.num_cells1(), -1), m2(C.num_cells2(), -1);
    for (int x : perm(C.num_objects())) mo[x] = D->add_object(C.object_name(x));
    for (int x = 0; x < C.num_objects(); ++x) m1[C.id1(x)] = D->id1(mo[x]);
    for (int u : perm(C.num_cells1()))
        if (m1[u] < 0) m1[u] = D->add_cell1(C.cell1(u).name, mo[C.src1(u)], mo[C.tgt1(u)]);
    for (int u = 0; u < C.num_cells1(); ++u) m2[C.id2(u)] = D->id2(m1[u]);
    for (int a : perm(C.num_cells2()))
        if (m2[a] < 0) m2[a] = D->add_cell2(C.cell2(a).name, m1[C.src2(a)], m1[C.tgt2(a)]);
    auto split = [](uint64_t k) { return std::pair<int, int>(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)); };
    for (auto [k, w] : C.hcomp1_table()) {
        auto [u, v] = split(k);
        D->set_hcomp1(m1[u], m1[v], m1[w]);
    }
    for (auto [k, c] : C.vcomp_table()) {
        auto [b, a] = split(k);
        D->set_vcomp(m2[b], m2[a], m2[c]);
    }
    for (auto [k, c] : C.hcomp2_table()) {
        auto [b, a] = split(k);
        D->set_hcomp2(m2[b], m2[a], m2[c]);
    }
    return D;
}

TruncSimplicialSet permuted(const TruncSimplicialSet& S, std::mt19937& rng) {
    std::vector<std::vector<int>> p(S.cap + 1);
    for (int n = 0; n <= S.cap; ++n) {
        p[n].resize(S.size(n));
        std::iota(p[n].begin(), p[n].end(), 0);
        std::shuffle(p[n].begin(), p[n].end(), rng);
    }
    TruncSimplicialSet T = S;
    for (int n = 0; n <= S.cap; ++n) {
        T.index[n].clear();
        for (int s = 0; s < S.size(n); ++s) {
            T.keys[n][p[n][s]] = S.keys[n][s];
            T.degenerate[n][p[n][s]] = S.degenerate[n][s];
            T.index[n][S.keys[n][s]] = p[n][s];
        }
        for (int i = 0; n >= 1 && i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s) T.face[n][i][p[n][s]] = p[n - 1][S.d(n, i, s)];
        for (int i = 0; n < S.cap && i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s) T.degen[n][i][p[n][s]] = p[n + 1][S.s(n, i, s)];
    }
    return T;
}

TwoDiagram random_diagram(std::mt19937& rng, std::string* label) {
    Sample base = random_twocat(rng, 1);
    while (base.cat->num_cells1() > 6) base = random_twocat(rng, 1);
    switch (pick(rng, 0, 2)) {
        case 0: {
            Sample fib = random_twocat(rng, 1);
            while (fib.cat->num_cells2() > 6) fib = random_twocat(rng, 1);
            if (label) *label = "constant " + fib.label + " over " + base.label;
            return constant_diagram(base.cat, fib.cat);
        }
        case 1: {
            int x = pick(rng, 0, base.cat->num_objects() - 1);
            if (label) *label = "hom(-, " + base.cat->object_name(x) + ") over " + base.label;
            return hom_diagram(base.cat, x);
        }
        default:
            if (label) *label = "Z/2 acting on itself";
            return action_diagram(fixtures::z2_self_action());
    }
}

}  // namespace gen

namespace props {

Outcome run_suite(int count, unsigned seed) {
    Outcome out;
    std::mt19937 rng(seed);
    const int cap = 3;
    auto fail = [&](const std::string& label, const std::string& what) { out.failures.push_back(label + ": " + what); };
    for (int i = 0; i < count; ++i) {
        gen::Sample s = gen::random_twocat(rng);
        const TwoCategory& C = *s.cat;
        const std::string l = "#" + std::to_string(i) + " " + s.label;
        ++out.samples;
        try {
            if (!validate_two_category(C).ok()) fail(l, "2-category validation (interchange included)");
            if (write_twocat(opposite(opposite(C))) != write_twocat(C)) fail(l, "opposite is not an involution");

            TruncSimplicialSet G = geometric_nerve(C, cap);
            if (!audit_simplicial(G).ok()) fail(l, "geometric nerve audit");
            ChainComplex CG = chain_complex(G);
            if (!boundary_squared_zero(CG)) fail(l, "boundary of the geometric nerve does not square to zero");
            HomologyReport HG = homology(CG);
            for (long long p : {0LL, 2LL, 3LL})
                if (oracle::mod_p_homology_dims(G, p) != oracle::predicted_mod_p_dims(HG, p))
                    fail(l, "homology disagrees with the F_" + std::to_string(p) + " elimination oracle");

            TruncBisimplicialSet NN = double_nerve(C, cap);
            if (!audit_bisimplicial(NN).ok()) fail(l, "double nerve audit");
            TruncSimplicialSet D = diag(NN), W = codiagonal_wbar(NN);
            if (!audit_simplicial(D).ok()) fail(l, "diagonal audit");
            if (!audit_simplicial(W).ok()) fail(l, "codiagonal audit");
            SimplicialMap eta = zisman_eta(NN, D, W);
            if (!validate_simplicial_map(D, W, eta).ok()) fail(l, "eta is not a simplicial map");
            EquivalenceReport E = homology_compare(D, W, &eta);
            if (!E.chain_map_ok.value_or(false)) fail(l, "chain map of eta does not commute with boundaries");
            if (!homology_compare(D, G).groups_agree()) fail(l, "diagonal and geometric nerve homology differ");

            TwoCatPtr C2 = gen::shuffled_copy(C, rng);
            if (write_twocat(*C2) != write_twocat(C)) fail(l, "canonical text depends on declaration order");
            TruncSimplicialSet G2 = geometric_nerve(*C2, cap);
            for (int n = 0; n <= cap; ++n)
                if (G2.size(n) != G.size(n)) fail(l, "simplex count depends on declaration order");
            if (homology(G2).groups != HG.groups) fail(l, "homology depends on declaration order");
            if (homology(gen::permuted(G, rng)).groups != HG.groups) fail(l, "homology depends on simplex order");
        } catch (const Error& e) {
            fail(l, std::string("threw ") + e.what());
        }

        if (i % 4 != 0) continue;
        std::string dl;
        try {
            TwoDiagram Dg = gen::random_diagram(rng, &dl);
            dl = "#" + std::to_string(i) + " diagram " + dl;
            if (!validate_two_diagram(Dg).ok()) fail(dl, "diagram validation");
            Grothendieck Gr = grothendieck(Dg);
            if (!validate_two_category(Gr.cat()).ok()) fail(dl, "integral fails 2-category validation");
            if (!validate_two_functor(projection(Dg, Gr)).ok()) fail(dl, "projection");
            for (int z = 0; z < Dg.base->num_objects(); ++z) {
                IotaP ip = iota_p_pair(Dg, Gr, z);
                if (!same_functor(compose(ip.p, ip.i), identity_functor(Dg.fibre[z]))) fail(dl, "p i != 1");
                if (!validate_lax_transformation(ip.theta).ok()) fail(dl, "theta");
            }
            if (!audit_simplicial(geometric_nerve(Gr.cat(), cap)).ok()) fail(dl, "integral nerve audit");
        } catch (const Error& e) {
            fail(dl, std::string("threw ") + e.what());
        }
    }
    return out;
}

}  // namespace props
