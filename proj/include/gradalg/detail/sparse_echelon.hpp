#pragma once

#include <map>
#include <unordered_map>

#include "gradalg/field.hpp"

namespace gradalg::detail {

// Row echelon form of sparse vectors; each stored row has leading coefficient one.
template <ExactField K>
class SparseEchelon {
 public:
  using value_type = typename K::value_type;
  using Vec = std::map<std::size_t, value_type>;

  explicit SparseEchelon(K field) : field_(field) {}

  std::size_t dim() const { return rows_.size(); }

  // Remainder of v after eliminating every pivot position.
  Vec reduce(Vec v) const {
    Vec out;
    while (!v.empty()) {
      auto it = v.begin();
      const std::size_t idx = it->first;
      const value_type c = it->second;
      v.erase(it);
      auto row = rows_.find(idx);
      if (row == rows_.end()) {
        out.emplace(idx, c);
        continue;
      }
      for (const auto& [j, x] : row->second) {
        if (j == idx) continue;
        auto [pos, fresh] = v.emplace(j, field_.zero());
        pos->second = field_.sub(pos->second, field_.mul(c, x));
        if (field_.is_zero(pos->second)) v.erase(pos);
      }
    }
    return out;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  bool insert(const Vec& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    const auto inv = field_.inv(r.begin()->second);
    for (auto& [j, x] : r) x = field_.mul(x, inv);
    rows_.emplace(r.begin()->first, std::move(r));
    return true;
  }

 private:
  K field_;
  std::unordered_map<std::size_t, Vec> rows_;
};

}  // namespace gradalg::detail
