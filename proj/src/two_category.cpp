#include "twocat/two_category.hpp"

#include <algorithm>

namespace twocat {

namespace {

const std::vector<int> kEmpty;

const std::vector<int>& find_list(const std::unordered_map<uint64_t, std::vector<int>>& m, uint64_t k) {
    auto it = m.find(k);
    return it == m.end() ? kEmpty : it->second;
}

}  // namespace

void TwoCategory::claim_name(const std::string& name) {
    if (name.empty()) return;
    if (obj_index_.count(name) || c1_index_.count(name) || c2_index_.count(name))
        throw Error("ValidationError", "duplicate cell identifier '" + name + "'");
}

int TwoCategory::add_object(const std::string& name) {
    claim_name(name);
    int x = num_objects();
    objects_.push_back(name);
    if (!name.empty()) obj_index_[name] = x;
    id1_.push_back(-1);
    from_.emplace_back();
    into_.emplace_back();
    id1_[x] = add_cell1(name.empty() ? "" : "id:" + name, x, x);
    return x;
}

int TwoCategory::add_cell1(const std::string& name, int src, int tgt) {
    if (src < 0 || tgt < 0 || src >= num_objects() || tgt >= num_objects())
        throw Error("ValidationError", "1-cell '" + name + "' has an unknown endpoint");
    claim_name(name);
    int u = num_cells1();
    cells1_.push_back({name, src, tgt});
    if (!name.empty()) c1_index_[name] = u;
    hom_[pair_key(src, tgt)].push_back(u);
    from_[src].push_back(u);
    into_[tgt].push_back(u);
    id2_.push_back(-1);
    id2_[u] = add_cell2(name.empty() ? "" : "id2:" + name, u, u);
    return u;
}

int TwoCategory::add_cell2(const std::string& name, int src, int tgt) {
    if (src < 0 || tgt < 0 || src >= num_cells1() || tgt >= num_cells1())
        throw Error("ValidationError", "2-cell '" + name + "' has an unknown boundary");
    claim_name(name);
    int a = num_cells2();
    cells2_.push_back({name, src, tgt});
    if (!name.empty()) c2_index_[name] = a;
    between_[pair_key(src, tgt)].push_back(a);
    return a;
}

void TwoCategory::fill_units() {
    auto put = [](std::unordered_map<uint64_t, int>& t, int a, int b, int c) {
        t.emplace(pair_key(a, b), c);
    };
    for (int u = 0; u < num_cells1(); ++u) {
        put(hcomp1_, u, id1(src1(u)), u);
        put(hcomp1_, id1(tgt1(u)), u, u);
    }
    for (int a = 0; a < num_cells2(); ++a) {
        put(vcomp_, a, id2(src2(a)), a);
        put(vcomp_, id2(tgt2(a)), a, a);
        int x = src1(src2(a)), y = tgt1(src2(a));
        put(hcomp2_, a, id2(id1(x)), a);
        put(hcomp2_, id2(id1(y)), a, a);
    }
    for (int u = 0; u < num_cells1(); ++u)
        for (int v : into_[src1(u)]) {
            int w = hcomp1(u, v);
            if (w >= 0) put(hcomp2_, id2(u), id2(v), id2(w));
        }
}

int TwoCategory::hc1(int u, int v) const {
    int w = hcomp1(u, v);
    if (w < 0) throw Error("MissingTableEntry", "hcomp1 " + cell1(u).name + " o " + cell1(v).name);
    return w;
}

int TwoCategory::vc(int b, int a) const {
    int c = vcomp(b, a);
    if (c < 0) throw Error("MissingTableEntry", "vcomp " + cell2(b).name + " . " + cell2(a).name);
    return c;
}

int TwoCategory::hc2(int b, int a) const {
    int c = hcomp2(b, a);
    if (c < 0) throw Error("MissingTableEntry", "hcomp2 " + cell2(b).name + " o " + cell2(a).name);
    return c;
}

const std::vector<int>& TwoCategory::hom(int x, int y) const { return find_list(hom_, pair_key(x, y)); }
const std::vector<int>& TwoCategory::cells2_between(int f, int g) const {
    return find_list(between_, pair_key(f, g));
}
const std::vector<int>& TwoCategory::cells1_from(int x) const { return from_[x]; }
const std::vector<int>& TwoCategory::cells1_into(int y) const { return into_[y]; }

std::optional<int> TwoCategory::find_object(const std::string& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}
std::optional<int> TwoCategory::find_cell1(const std::string& name) const {
    auto it = c1_index_.find(name);
    if (it == c1_index_.end()) return std::nullopt;
    return it->second;
}
std::optional<int> TwoCategory::find_cell2(const std::string& name) const {
    auto it = c2_index_.find(name);
    if (it == c2_index_.end()) return std::nullopt;
    return it->second;
}
int TwoCategory::object(const std::string& name) const {
    auto x = find_object(name);
    if (!x) throw Error("ValidationError", "unknown object '" + name + "'");
    return *x;
}
int TwoCategory::c1(const std::string& name) const {
    auto u = find_cell1(name);
    if (!u) throw Error("ValidationError", "unknown 1-cell '" + name + "'");
    return *u;
}
int TwoCategory::c2(const std::string& name) const {
    auto a = find_cell2(name);
    if (!a) throw Error("ValidationError", "unknown 2-cell '" + name + "'");
    return *a;
}

// ---------------------------------------------------------------------------

ValidationReport validate_two_category(const TwoCategory& C) {
    ValidationReport r;
    auto n1 = [&](int u) { return C.cell1(u).name; };
    auto n2 = [&](int a) { return C.cell2(a).name; };

    for (int a = 0; a < C.num_cells2(); ++a) {
        int f = C.src2(a), g = C.tgt2(a);
        if (C.src1(f) != C.src1(g) || C.tgt1(f) != C.tgt1(g))
            r.add("BoundaryMismatch", "2-cell " + n2(a) + " joins non-parallel 1-cells");
    }

    // Entries must sit on composable pairs with consistent boundaries.
    for (auto [k, w] : C.hcomp1_table()) {
        int u = static_cast<int>(k >> 32), v = static_cast<int>(k & 0xffffffffu);
        if (C.src1(u) != C.tgt1(v))
            r.add("BoundaryMismatch", "hcomp1 entry on non-composable " + n1(u) + ", " + n1(v));
        else if (C.src1(w) != C.src1(v) || C.tgt1(w) != C.tgt1(u))
            r.add("BoundaryMismatch", "hcomp1 " + n1(u) + " o " + n1(v) + " = " + n1(w));
    }
    for (auto [k, c] : C.vcomp_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        if (C.src2(b) != C.tgt2(a))
            r.add("BoundaryMismatch", "vcomp entry on non-composable " + n2(b) + ", " + n2(a));
        else if (C.src2(c) != C.src2(a) || C.tgt2(c) != C.tgt2(b))
            r.add("BoundaryMismatch", "vcomp " + n2(b) + " . " + n2(a) + " = " + n2(c));
    }
    for (auto [k, c] : C.hcomp2_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        if (C.src1(C.src2(b)) != C.tgt1(C.src2(a))) {
            r.add("BoundaryMismatch", "hcomp2 entry on non-composable " + n2(b) + ", " + n2(a));
            continue;
        }
        int s = C.hcomp1(C.src2(b), C.src2(a)), t = C.hcomp1(C.tgt2(b), C.tgt2(a));
        if (s < 0 || t < 0 || C.src2(c) != s || C.tgt2(c) != t)
            r.add("BoundaryMismatch", "hcomp2 " + n2(b) + " o " + n2(a) + " = " + n2(c));
    }

    // Totality.
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u)))
            if (C.hcomp1(u, v) < 0) r.add("MissingTableEntry", "hcomp1 " + n1(u) + " o " + n1(v));
    std::vector<std::vector<int>> out2(C.num_cells1());
    for (int a = 0; a < C.num_cells2(); ++a) out2[C.src2(a)].push_back(a);
    for (int a = 0; a < C.num_cells2(); ++a)
        for (int b : out2[C.tgt2(a)])
            if (C.vcomp(b, a) < 0) r.add("MissingTableEntry", "vcomp " + n2(b) + " . " + n2(a));
    // 2-cells grouped by hom (x, y).
    std::unordered_map<uint64_t, std::vector<int>> cells_in_hom;
    for (int a = 0; a < C.num_cells2(); ++a)
        cells_in_hom[pair_key(C.src1(C.src2(a)), C.tgt1(C.src2(a)))].push_back(a);
    auto cells2_in = [&](int x, int y) -> const std::vector<int>& {
        return find_list(cells_in_hom, pair_key(x, y));
    };
    int n0 = C.num_objects();
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y)
            for (int z = 0; z < n0; ++z)
                for (int b : cells2_in(y, z))
                    for (int a : cells2_in(x, y))
                        if (C.hcomp2(b, a) < 0)
                            r.add("MissingTableEntry", "hcomp2 " + n2(b) + " o " + n2(a));

    // Units.
    for (int u = 0; u < C.num_cells1(); ++u) {
        if (C.hcomp1(u, C.id1(C.src1(u))) != u || C.hcomp1(C.id1(C.tgt1(u)), u) != u)
            r.add("UnitViolation", "identity 1-cell is not a unit for " + n1(u));
    }
    for (int a = 0; a < C.num_cells2(); ++a) {
        if (C.vcomp(a, C.id2(C.src2(a))) != a || C.vcomp(C.id2(C.tgt2(a)), a) != a)
            r.add("UnitViolation", "identity 2-cell is not a vertical unit for " + n2(a));
        int x = C.src1(C.src2(a)), y = C.tgt1(C.src2(a));
        if (C.hcomp2(a, C.id2(C.id1(x))) != a || C.hcomp2(C.id2(C.id1(y)), a) != a)
            r.add("UnitViolation", "identity of identity is not a horizontal unit for " + n2(a));
    }
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) {
            int w = C.hcomp1(u, v);
            if (w >= 0 && C.hcomp2(C.id2(u), C.id2(v)) != C.id2(w))
                r.add("InterchangeViolation", "1_" + n1(u) + " o 1_" + n1(v) + " is not 1_" + n1(w));
        }

    // Associativity.
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u)))
            for (int w : C.cells1_into(C.src1(v))) {
                int uv = C.hcomp1(u, v), vw = C.hcomp1(v, w);
                if (uv < 0 || vw < 0) continue;
                int l = C.hcomp1(uv, w), rr = C.hcomp1(u, vw);
                if (l != rr || l < 0)
                    r.add("AssociativityViolation", "hcomp1 (" + n1(u) + ", " + n1(v) + ", " + n1(w) + ")");
            }
    for (int a = 0; a < C.num_cells2(); ++a)
        for (int b : out2[C.tgt2(a)])
            for (int c : out2[C.tgt2(b)]) {
                int ba = C.vcomp(b, a), cb = C.vcomp(c, b);
                if (ba < 0 || cb < 0) continue;
                int l = C.vcomp(c, ba), rr = C.vcomp(cb, a);
                if (l != rr || l < 0)
                    r.add("AssociativityViolation", "vcomp (" + n2(c) + ", " + n2(b) + ", " + n2(a) + ")");
            }
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y)
            for (int z = 0; z < n0; ++z)
                for (int t = 0; t < n0; ++t) {
                    const auto& A = cells2_in(x, y);
                    const auto& B = cells2_in(y, z);
                    const auto& Cc = cells2_in(z, t);
                    if (A.empty() || B.empty() || Cc.empty()) continue;
                    for (int c : Cc)
                        for (int b : B)
                            for (int a : A) {
                                int cb = C.hcomp2(c, b), ba = C.hcomp2(b, a);
                                if (cb < 0 || ba < 0) continue;
                                int l = C.hcomp2(cb, a), rr = C.hcomp2(c, ba);
                                if (l != rr || l < 0)
                                    r.add("AssociativityViolation",
                                          "hcomp2 (" + n2(c) + ", " + n2(b) + ", " + n2(a) + ")");
                            }
                }

    // Interchange: (b'b) o (a'a) = (b' o a')(b o a). An undefined side counts as a violation.
    for (int x = 0; x < n0; ++x)
        for (int y = 0; y < n0; ++y)
            for (int z = 0; z < n0; ++z) {
                const auto& A = cells2_in(x, y);
                const auto& B = cells2_in(y, z);
                if (A.empty() || B.empty()) continue;
                for (int b : B)
                    for (int b2 : out2[C.tgt2(b)])
                        for (int a : A)
                            for (int a2 : out2[C.tgt2(a)]) {
                                int bb = C.vcomp(b2, b), aa = C.vcomp(a2, a);
                                int lhs = (bb < 0 || aa < 0) ? -1 : C.hcomp2(bb, aa);
                                int h2 = C.hcomp2(b2, a2), h1 = C.hcomp2(b, a);
                                int rhs = (h2 < 0 || h1 < 0) ? -1 : C.vcomp(h2, h1);
                                if (lhs < 0 || lhs != rhs)
                                    r.add("InterchangeViolation", "(" + n2(b2) + " " + n2(b) + ") o (" + n2(a2) +
                                                                      " " + n2(a) + ")");
                            }
            }
    return r;
}

// ---------------------------------------------------------------------------

int Category::add_object(const std::string& name) {
    int x = num_objects();
    objects_.push_back(name);
    id_.push_back(-1);
    into_.emplace_back();
    from_.emplace_back();
    id_[x] = add_arrow(name.empty() ? "" : "id:" + name, x, x);
    return x;
}

int Category::add_arrow(const std::string& name, int src, int tgt) {
    int f = num_arrows();
    arrows_.push_back(name);
    src_.push_back(src);
    tgt_.push_back(tgt);
    into_[tgt].push_back(f);
    from_[src].push_back(f);
    return f;
}

void Category::fill_units() {
    for (int f = 0; f < num_arrows(); ++f) {
        comp_.emplace(pair_key(f, id(src(f))), f);
        comp_.emplace(pair_key(id(tgt(f)), f), f);
    }
}

std::optional<int> Category::find_object(const std::string& name) const {
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) return std::nullopt;
    return static_cast<int>(it - objects_.begin());
}

std::optional<int> Category::find_arrow(const std::string& name) const {
    auto it = std::find(arrows_.begin(), arrows_.end(), name);
    if (it == arrows_.end()) return std::nullopt;
    return static_cast<int>(it - arrows_.begin());
}

ValidationReport validate_category(const Category& C) {
    ValidationReport r;
    auto nm = [&](int f) { return C.arrow_name(f).empty() ? "#" + std::to_string(f) : C.arrow_name(f); };
    for (int g = 0; g < C.num_arrows(); ++g)
        for (int f : C.into(C.src(g))) {
            int h = C.comp(g, f);
            if (h < 0) {
                r.add("MissingTableEntry", "comp " + nm(g) + " o " + nm(f));
                continue;
            }
            if (C.src(h) != C.src(f) || C.tgt(h) != C.tgt(g))
                r.add("BoundaryMismatch", "comp " + nm(g) + " o " + nm(f));
        }
    for (int f = 0; f < C.num_arrows(); ++f)
        if (C.comp(f, C.id(C.src(f))) != f || C.comp(C.id(C.tgt(f)), f) != f)
            r.add("UnitViolation", "identity is not a unit for " + nm(f));
    for (int h = 0; h < C.num_arrows(); ++h)
        for (int g : C.into(C.src(h)))
            for (int f : C.into(C.src(g))) {
                int hg = C.comp(h, g), gf = C.comp(g, f);
                if (hg < 0 || gf < 0) continue;
                if (C.comp(hg, f) != C.comp(h, gf) || C.comp(hg, f) < 0)
                    r.add("AssociativityViolation", "(" + nm(h) + ", " + nm(g) + ", " + nm(f) + ")");
            }
    return r;
}

int MonoidalCategory::tensor_objects(int a, int b) const {
    auto it = tensor_obj.find(pair_key(a, b));
    if (it == tensor_obj.end())
        throw Error("NonStrictTensor", "no tensor for objects " + cat.object_name(a) + ", " + cat.object_name(b));
    return it->second;
}

int MonoidalCategory::tensor_arrows(int f, int g) const {
    auto it = tensor_arr.find(pair_key(f, g));
    if (it == tensor_arr.end())
        throw Error("NonStrictTensor", "no tensor for arrows " + cat.arrow_name(f) + ", " + cat.arrow_name(g));
    return it->second;
}

// ---------------------------------------------------------------------------

TwoCategory from_category(const Category& C) {
    TwoCategory T;
    std::vector<int> obj(C.num_objects()), arr(C.num_arrows());
    for (int x = 0; x < C.num_objects(); ++x) {
        obj[x] = T.add_object(C.object_name(x));
        arr[C.id(x)] = T.id1(obj[x]);
    }
    for (int f = 0; f < C.num_arrows(); ++f)
        if (!C.is_id(f)) arr[f] = T.add_cell1(C.arrow_name(f), obj[C.src(f)], obj[C.tgt(f)]);
    for (int g = 0; g < C.num_arrows(); ++g)
        for (int f : C.into(C.src(g))) {
            int h = C.comp(g, f);
            if (h >= 0) T.set_hcomp1(arr[g], arr[f], arr[h]);
        }
    T.fill_units();
    return T;
}

Category underlying_category(const TwoCategory& C) {
    Category D;
    std::vector<int> arr(C.num_cells1(), -1);
    for (int x = 0; x < C.num_objects(); ++x) arr[C.id1(x)] = D.id(D.add_object(C.object_name(x)));
    for (int u = 0; u < C.num_cells1(); ++u)
        if (!C.is_id1(u)) arr[u] = D.add_arrow(C.cell1(u).name, C.src1(u), C.tgt1(u));
    for (auto [k, w] : C.hcomp1_table())
        D.set_comp(arr[static_cast<int>(k >> 32)], arr[static_cast<int>(k & 0xffffffffu)], arr[w]);
    D.fill_units();
    return D;
}

Category ordinal(int n) {
    Category C;
    for (int i = 0; i <= n; ++i) C.add_object(std::to_string(i));
    // arrow j -> i for i < j, named x<i>_<j>
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i <= n; ++i) a[i][i] = C.id(i);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            a[i][j] = C.add_arrow("x" + std::to_string(i) + "_" + std::to_string(j), j, i);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) C.set_comp(a[i][j], a[j][k], a[i][k]);
    return C;
}

Category terminal_category() {
    Category C;
    C.add_object("*");
    C.fill_units();
    return C;
}

TwoCategory opposite(const TwoCategory& C) {
    TwoCategory T;
    for (int x = 0; x < C.num_objects(); ++x) T.add_object(C.object_name(x));
    std::vector<int> m1(C.num_cells1()), m2(C.num_cells2());
    for (int u = 0; u < C.num_cells1(); ++u)
        m1[u] = C.is_id1(u) ? T.id1(C.src1(u)) : T.add_cell1(C.cell1(u).name, C.tgt1(u), C.src1(u));
    for (int u = 0; u < C.num_cells1(); ++u) m2[C.id2(u)] = T.id2(m1[u]);
    for (int a = 0; a < C.num_cells2(); ++a)
        if (!C.is_id2(a)) m2[a] = T.add_cell2(C.cell2(a).name, m1[C.src2(a)], m1[C.tgt2(a)]);
    for (auto [k, w] : C.hcomp1_table())
        T.set_hcomp1(m1[k & 0xffffffffu], m1[k >> 32], m1[w]);
    for (auto [k, c] : C.vcomp_table()) T.set_vcomp(m2[k >> 32], m2[k & 0xffffffffu], m2[c]);
    for (auto [k, c] : C.hcomp2_table())
        T.set_hcomp2(m2[k & 0xffffffffu], m2[k >> 32], m2[c]);
    return T;
}

TwoCategory coopposite(const TwoCategory& C) {
    TwoCategory T;
    for (int x = 0; x < C.num_objects(); ++x) T.add_object(C.object_name(x));
    std::vector<int> m1(C.num_cells1()), m2(C.num_cells2());
    for (int u = 0; u < C.num_cells1(); ++u)
        m1[u] = C.is_id1(u) ? T.id1(C.src1(u)) : T.add_cell1(C.cell1(u).name, C.src1(u), C.tgt1(u));
    for (int u = 0; u < C.num_cells1(); ++u) m2[C.id2(u)] = T.id2(m1[u]);
    for (int a = 0; a < C.num_cells2(); ++a)
        if (!C.is_id2(a)) m2[a] = T.add_cell2(C.cell2(a).name, m1[C.tgt2(a)], m1[C.src2(a)]);
    for (auto [k, w] : C.hcomp1_table()) T.set_hcomp1(m1[k >> 32], m1[k & 0xffffffffu], m1[w]);
    for (auto [k, c] : C.vcomp_table()) T.set_vcomp(m2[k & 0xffffffffu], m2[k >> 32], m2[c]);
    for (auto [k, c] : C.hcomp2_table()) T.set_hcomp2(m2[k >> 32], m2[k & 0xffffffffu], m2[c]);
    return T;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

TwoCategory product_with_category(const TwoCategory& B, const Category& D, ProductIndex* index) {
    TwoCategory T;
    int nb = B.num_objects(), nd = D.num_objects();
    std::vector<int> obj(nb * nd);
    for (int x = 0; x < nb; ++x)
        for (int d = 0; d < nd; ++d) obj[x * nd + d] = T.add_object(pair_name(B.object_name(x), D.object_name(d)));
    int na = D.num_arrows();
    std::vector<int> c1(B.num_cells1() * na, -1);
    for (int u = 0; u < B.num_cells1(); ++u)
        for (int f = 0; f < na; ++f) {
            int s = obj[B.src1(u) * nd + D.src(f)], t = obj[B.tgt1(u) * nd + D.tgt(f)];
            c1[u * na + f] = (B.is_id1(u) && D.is_id(f))
                                 ? T.id1(s)
                                 : T.add_cell1(pair_name(B.cell1(u).name, D.arrow_name(f)), s, t);
        }
    // 2-cells (a, 1_f)
    std::vector<int> c2(B.num_cells2() * na, -1);
    for (int a = 0; a < B.num_cells2(); ++a)
        for (int f = 0; f < na; ++f) {
            int s = c1[B.src2(a) * na + f], t = c1[B.tgt2(a) * na + f];
            c2[a * na + f] = B.is_id2(a)
                                 ? T.id2(s)
                                 : T.add_cell2(pair_name(B.cell2(a).name, "id2:" + D.arrow_name(f)), s, t);
        }
    for (auto [k, w] : B.hcomp1_table()) {
        int u = static_cast<int>(k >> 32), v = static_cast<int>(k & 0xffffffffu);
        for (int g = 0; g < na; ++g)
            for (int f : D.into(D.src(g))) {
                int h = D.comp(g, f);
                if (h >= 0) T.set_hcomp1(c1[u * na + g], c1[v * na + f], c1[w * na + h]);
            }
    }
    for (auto [k, c] : B.vcomp_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        for (int f = 0; f < na; ++f) T.set_vcomp(c2[b * na + f], c2[a * na + f], c2[c * na + f]);
    }
    for (auto [k, c] : B.hcomp2_table()) {
        int b = static_cast<int>(k >> 32), a = static_cast<int>(k & 0xffffffffu);
        for (int g = 0; g < na; ++g)
            for (int f : D.into(D.src(g))) {
                int h = D.comp(g, f);
                if (h >= 0) T.set_hcomp2(c2[b * na + g], c2[a * na + f], c2[c * na + h]);
            }
    }
    T.fill_units();
    if (index) *index = {nd, na, obj, c1, c2};
    return T;
}

TwoCategory one_object_from_monoidal(const MonoidalCategory& M) {
    const Category& C = M.cat;
    int n = C.num_objects();
    for (int a = 0; a < n; ++a) {
        if (M.tensor_objects(M.unit, a) != a || M.tensor_objects(a, M.unit) != a)
            throw Error("NonStrictTensor", "unit law fails at " + C.object_name(a));
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (M.tensor_objects(M.tensor_objects(a, b), c) != M.tensor_objects(a, M.tensor_objects(b, c)))
                    throw Error("NonStrictTensor", "associativity fails at (" + C.object_name(a) + ", " +
                                                       C.object_name(b) + ", " + C.object_name(c) + ")");
    }
    TwoCategory T;
    T.add_object("*");
    std::vector<int> c1(n), c2(C.num_arrows());
    for (int a = 0; a < n; ++a) c1[a] = a == M.unit ? T.id1(0) : T.add_cell1(C.object_name(a), 0, 0);
    for (int a = 0; a < n; ++a) c2[C.id(a)] = T.id2(c1[a]);
    for (int f = 0; f < C.num_arrows(); ++f)
        if (!C.is_id(f)) c2[f] = T.add_cell2(C.arrow_name(f), c1[C.src(f)], c1[C.tgt(f)]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) T.set_hcomp1(c1[a], c1[b], c1[M.tensor_objects(a, b)]);
    for (int g = 0; g < C.num_arrows(); ++g)
        for (int f : C.into(C.src(g)))
            if (C.comp(g, f) >= 0) T.set_vcomp(c2[g], c2[f], c2[C.comp(g, f)]);
    for (int f = 0; f < C.num_arrows(); ++f)
        for (int g = 0; g < C.num_arrows(); ++g) {
            auto it = M.tensor_arr.find(pair_key(f, g));
            if (it != M.tensor_arr.end()) T.set_hcomp2(c2[f], c2[g], c2[it->second]);
        }
    T.fill_units();
    return T;
}

}  // namespace twocat
