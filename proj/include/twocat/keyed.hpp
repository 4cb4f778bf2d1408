#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "twocat/two_category.hpp"

namespace twocat {

// A 2-category under construction whose cells are addressed by structural keys.
// Identity cells created by TwoCategory are reached through alias_cell1 / alias_cell2.
struct KeyedTwoCategory {
    std::shared_ptr<TwoCategory> cat = std::make_shared<TwoCategory>();
    std::vector<Key> obj_keys, c1_keys, c2_keys;
    std::unordered_map<Key, int, KeyHash> obj_index, c1_index, c2_index;

    int add_object(const Key& k, const std::string& name);
    int add_cell1(const Key& k, int src, int tgt, const std::string& name);
    int add_cell2(const Key& k, int src, int tgt, const std::string& name);
    void alias_cell1(const Key& k, int u);
    void alias_cell2(const Key& k, int a);

    int obj(const Key& k) const { return look(obj_index, k); }
    int c1(const Key& k) const { return look(c1_index, k); }
    int c2(const Key& k) const { return look(c2_index, k); }

    // Fills every composition table entry with the cell whose key the callback returns.
    // Throws CompositeMissing when a returned key is not a cell.
    void fill_tables(const std::function<Key(int u, int v)>& hc1, const std::function<Key(int b, int a)>& vc,
                     const std::function<Key(int b, int a)>& hc2);

private:
    static int look(const std::unordered_map<Key, int, KeyHash>& m, const Key& k) {
        auto it = m.find(k);
        return it == m.end() ? -1 : it->second;
    }
};

}  // namespace twocat
