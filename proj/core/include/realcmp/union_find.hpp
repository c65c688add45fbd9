#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace realcmp {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// True when a and b were in different classes.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  /// Class labels 0..k-1 numbered by first occurrence, i.e. by minimal member.
  std::vector<std::size_t> canonical_labels(std::size_t* class_count = nullptr) {
    std::vector<std::size_t> root_label(parent_.size(), kUnset);
    std::vector<std::size_t> out(parent_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto& l = root_label[find(i)];
      if (l == kUnset) l = next++;
      out[i] = l;
    }
    if (class_count) *class_count = next;
    return out;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace realcmp
