#pragma once

#include <numeric>
#include <vector>

namespace ngpd {

/// Partition of {0..n-1}. Classes are numbered by increasing smallest
/// element, and that element is the class representative.
struct Partition {
  std::vector<int> class_of;
  std::vector<int> representatives;

  int size() const { return static_cast<int>(class_of.size()); }
  int class_count() const { return static_cast<int>(representatives.size()); }
  std::vector<std::vector<int>> classes() const;
  bool operator==(const Partition&) const = default;
};

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Canonical partition (see Partition).
  Partition partition() {
    const int n = static_cast<int>(parent_.size());
    Partition p;
    p.class_of.assign(n, -1);
    std::vector<int> root_class(n, -1);
    for (int x = 0; x < n; ++x) {
      int r = find(x);
      if (root_class[r] < 0) {
        root_class[r] = p.class_count();
        p.representatives.push_back(x);
      }
      p.class_of[x] = root_class[r];
    }
    return p;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

inline std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(representatives.size());
  for (int x = 0; x < size(); ++x) out[class_of[x]].push_back(x);
  return out;
}

}  // namespace ngpd
