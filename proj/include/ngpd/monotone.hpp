#pragma once

#include <vector>

namespace ngpd {

/// Nondecreasing map [source_rank] -> [target_rank] in the simplex category.
class MonotoneMap {
 public:
  /// Throws std::invalid_argument unless `values` has source_rank+1 entries,
  /// is nondecreasing and stays within [0, target_rank].
  MonotoneMap(int target_rank, std::vector<int> values);

  static MonotoneMap identity(int rank);
  /// Coface delta_i: [rank-1] -> [rank], skipping i.
  static MonotoneMap coface(int rank, int i);
  /// Codegeneracy sigma_i: [rank+1] -> [rank], hitting i twice.
  static MonotoneMap codegeneracy(int rank, int i);
  /// The edge {i, i+1} of [rank].
  static MonotoneMap spine_edge(int rank, int i);
  /// The vertex v of [rank].
  static MonotoneMap vertex(int rank, int v);

  int source_rank() const { return static_cast<int>(values_.size()) - 1; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_.at(i); }

  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const MonotoneMap&) const = default;

 private:
  int target_rank_;
  std::vector<int> values_;
};

/// First f, then g. Throws std::invalid_argument when f.target_rank() !=
/// g.source_rank().
MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g);

/// Elementary factorization used to act on simplicial sets: the map equals
/// (injective part) o (surjective part). `deleted` lists target vertices
/// outside the image in descending order (apply faces d_j in that order);
/// `duplicated` lists positions i with values[i] == values[i+1] in ascending
/// order (apply degeneracies s_i in that order after the faces).
struct MonotoneFactorization {
  std::vector<int> deleted;
  std::vector<int> duplicated;
};

MonotoneFactorization factorize(const MonotoneMap& m);

}  // namespace ngpd
