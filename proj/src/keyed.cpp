#include "twocat/keyed.hpp"

namespace twocat {

int KeyedTwoCategory::add_object(const Key& k, const std::string& name) {
    int x = cat->add_object(name);
    obj_keys.resize(cat->num_objects());
    obj_keys[x] = k;
    obj_index[k] = x;
    return x;
}

int KeyedTwoCategory::add_cell1(const Key& k, int src, int tgt, const std::string& name) {
    int u = cat->add_cell1(name, src, tgt);
    alias_cell1(k, u);
    return u;
}

int KeyedTwoCategory::add_cell2(const Key& k, int src, int tgt, const std::string& name) {
    int a = cat->add_cell2(name, src, tgt);
    alias_cell2(k, a);
    return a;
}

void KeyedTwoCategory::alias_cell1(const Key& k, int u) {
    if (static_cast<int>(c1_keys.size()) < cat->num_cells1()) c1_keys.resize(cat->num_cells1());
    c1_keys[u] = k;
    c1_index[k] = u;
}

void KeyedTwoCategory::alias_cell2(const Key& k, int a) {
    if (static_cast<int>(c2_keys.size()) < cat->num_cells2()) c2_keys.resize(cat->num_cells2());
    c2_keys[a] = k;
    c2_index[k] = a;
}

void KeyedTwoCategory::fill_tables(const std::function<Key(int, int)>& hc1, const std::function<Key(int, int)>& vc,
                                   const std::function<Key(int, int)>& hc2) {
    TwoCategory& C = *cat;
    auto need = [](int r, const char* what) {
        if (r < 0) throw Error("CompositeMissing", std::string(what) + " composite is not a cell");
        return r;
    };
    for (int u = 0; u < C.num_cells1(); ++u)
        for (int v : C.cells1_into(C.src1(u))) C.set_hcomp1(u, v, need(c1(hc1(u, v)), "horizontal 1-cell"));
    std::vector<std::vector<int>> out2(C.num_cells1()), by_src_obj(C.num_objects());
    for (int a = 0; a < C.num_cells2(); ++a) {
        out2[C.src2(a)].push_back(a);
        by_src_obj[C.src1(C.src2(a))].push_back(a);
    }
    for (int a = 0; a < C.num_cells2(); ++a)
        for (int b : out2[C.tgt2(a)]) C.set_vcomp(b, a, need(c2(vc(b, a)), "vertical"));
    for (int a = 0; a < C.num_cells2(); ++a)
        for (int b : by_src_obj[C.tgt1(C.src2(a))]) C.set_hcomp2(b, a, need(c2(hc2(b, a)), "horizontal 2-cell"));
}

}  // namespace twocat
