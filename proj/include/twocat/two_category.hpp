#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twocat/common.hpp"

namespace twocat {

struct Cell1 {
    std::string name;
    int src;
    int tgt;
};

// A 2-cell between parallel 1-cells src => tgt.
struct Cell2 {
    std::string name;
    int src;
    int tgt;
};

// Finite strict 2-category with explicit composition tables.
// Cells are addressed by dense indices; names are unique across all three levels.
// Identity cells are created automatically as id:<object> and id2:<1-cell>.
class TwoCategory {
public:
    int add_object(const std::string& name);
    int add_cell1(const std::string& name, int src, int tgt);
    int add_cell2(const std::string& name, int src, int tgt);

    // u o v = w for v: x -> y, u: y -> z.
    void set_hcomp1(int u, int v, int w) { hcomp1_[pair_key(u, v)] = w; }
    // b . a = c for a: f => g, b: g => h.
    void set_vcomp(int b, int a, int c) { vcomp_[pair_key(b, a)] = c; }
    // b o a = c for horizontally composable 2-cells.
    void set_hcomp2(int b, int a, int c) { hcomp2_[pair_key(b, a)] = c; }

    // Adds table entries forced by the unit laws where no entry exists yet.
    void fill_units();

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_cells1() const { return static_cast<int>(cells1_.size()); }
    int num_cells2() const { return static_cast<int>(cells2_.size()); }

    const std::string& object_name(int x) const { return objects_[x]; }
    const Cell1& cell1(int u) const { return cells1_[u]; }
    const Cell2& cell2(int a) const { return cells2_[a]; }
    int src1(int u) const { return cells1_[u].src; }
    int tgt1(int u) const { return cells1_[u].tgt; }
    int src2(int a) const { return cells2_[a].src; }
    int tgt2(int a) const { return cells2_[a].tgt; }

    int id1(int x) const { return id1_[x]; }
    int id2(int u) const { return id2_[u]; }
    bool is_id1(int u) const { return id1_[src1(u)] == u; }
    bool is_id2(int a) const { return id2_[src2(a)] == a; }

    // Table lookups return -1 when the entry is absent.
    int hcomp1(int u, int v) const { return lookup(hcomp1_, u, v); }
    int vcomp(int b, int a) const { return lookup(vcomp_, b, a); }
    int hcomp2(int b, int a) const { return lookup(hcomp2_, b, a); }

    // Checked lookups throw MissingTableEntry.
    int hc1(int u, int v) const;
    int vc(int b, int a) const;
    int hc2(int b, int a) const;
    int whisker_left(int u, int a) const { return hc2(id2(u), a); }
    int whisker_right(int a, int v) const { return hc2(a, id2(v)); }

    // 1-cells x -> y, and 2-cells f => g.
    const std::vector<int>& hom(int x, int y) const;
    const std::vector<int>& cells2_between(int f, int g) const;
    const std::vector<int>& cells1_from(int x) const;
    const std::vector<int>& cells1_into(int y) const;

    std::optional<int> find_object(const std::string& name) const;
    std::optional<int> find_cell1(const std::string& name) const;
    std::optional<int> find_cell2(const std::string& name) const;
    int object(const std::string& name) const;
    int c1(const std::string& name) const;
    int c2(const std::string& name) const;

    const std::unordered_map<uint64_t, int>& hcomp1_table() const { return hcomp1_; }
    const std::unordered_map<uint64_t, int>& vcomp_table() const { return vcomp_; }
    const std::unordered_map<uint64_t, int>& hcomp2_table() const { return hcomp2_; }

private:
    static int lookup(const std::unordered_map<uint64_t, int>& t, int a, int b) {
        auto it = t.find(pair_key(a, b));
        return it == t.end() ? -1 : it->second;
    }
    void claim_name(const std::string& name);

    std::vector<std::string> objects_;
    std::vector<Cell1> cells1_;
    std::vector<Cell2> cells2_;
    std::vector<int> id1_, id2_;
    std::unordered_map<uint64_t, int> hcomp1_, vcomp_, hcomp2_;
    std::unordered_map<uint64_t, std::vector<int>> hom_, between_;
    std::vector<std::vector<int>> from_, into_;
    std::unordered_map<std::string, int> obj_index_, c1_index_, c2_index_;
};

using TwoCatPtr = std::shared_ptr<const TwoCategory>;

// Axiom check: boundaries, totality, unit, associativity and interchange laws.
ValidationReport validate_two_category(const TwoCategory& C);

// Finite category with a composition table; identities are id:<object>.
class Category {
public:
    int add_object(const std::string& name = "");
    int add_arrow(const std::string& name, int src, int tgt);
    // g o f = h for f: x -> y, g: y -> z.
    void set_comp(int g, int f, int h) { comp_[pair_key(g, f)] = h; }
    void fill_units();

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_arrows() const { return static_cast<int>(src_.size()); }
    const std::string& object_name(int x) const { return objects_[x]; }
    const std::string& arrow_name(int f) const { return arrows_[f]; }
    int src(int f) const { return src_[f]; }
    int tgt(int f) const { return tgt_[f]; }
    int id(int x) const { return id_[x]; }
    bool is_id(int f) const { return id_[src_[f]] == f; }
    int comp(int g, int f) const {
        auto it = comp_.find(pair_key(g, f));
        return it == comp_.end() ? -1 : it->second;
    }
    const std::vector<int>& into(int y) const { return into_[y]; }
    const std::vector<int>& from(int x) const { return from_[x]; }
    std::optional<int> find_object(const std::string& name) const;
    std::optional<int> find_arrow(const std::string& name) const;

private:
    std::vector<std::string> objects_, arrows_;
    std::vector<int> src_, tgt_, id_;
    std::unordered_map<uint64_t, int> comp_;
    std::vector<std::vector<int>> into_, from_;
};

ValidationReport validate_category(const Category& C);

// Strict monoidal category; the monoidal unit is an object of the category.
struct MonoidalCategory {
    Category cat;
    int unit = 0;
    std::unordered_map<uint64_t, int> tensor_obj;  // (a, b) -> a (x) b
    std::unordered_map<uint64_t, int> tensor_arr;  // (f, g) -> f (x) g

    int tensor_objects(int a, int b) const;
    int tensor_arrows(int f, int g) const;
};

// Locally discrete 2-category on C. Objects keep their indices; arrows do too when C
// declared all of its objects before any other arrow.
TwoCategory from_category(const Category& C);
// Underlying category of a locally discrete 2-category.
Category underlying_category(const TwoCategory& C);

// [n] as a category: objects 0..n, one arrow j -> i for each i <= j.
Category ordinal(int n);
Category terminal_category();

// Reverses 1-cells, keeps 2-cell direction.
TwoCategory opposite(const TwoCategory& C);
// Reverses 2-cells, keeps 1-cell direction.
TwoCategory coopposite(const TwoCategory& C);
// Index tables of a product B x D: obj[x * |Ob D| + d], c1[u * |Arr D| + f], c2[a * |Arr D| + f]
// (2-cells are (a, 1_f)).
struct ProductIndex {
    int nd = 0, na = 0;
    std::vector<int> obj, c1, c2;
};

// B x D for a category D, seen as a locally discrete 2-category.
TwoCategory product_with_category(const TwoCategory& B, const Category& D, ProductIndex* index = nullptr);
// One-object 2-category: 1-cells are objects of M, 2-cells arrows, horizontal composition is the tensor.
TwoCategory one_object_from_monoidal(const MonoidalCategory& M);

// Name of the product cell (b, d).
std::string pair_name(const std::string& a, const std::string& b);

}  // namespace twocat
