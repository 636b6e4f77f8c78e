#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ngpd/fp_group.hpp"
#include "ngpd/groupoid.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/partition.hpp"
#include "ngpd/report.hpp"

namespace ngpd {

/// Finite simplicial set truncated at dim_bound: a MultiSSet of arity 1 with
/// level-k accessors. Any operation that needs a level above the bound
/// fails instead of inventing cells.
class SimplicialSet : public MultiSSet {
 public:
  /// The empty simplicial set at dim_bound 0.
  SimplicialSet();
  /// Throws std::invalid_argument unless x has arity 1.
  explicit SimplicialSet(MultiSSet x);

  int dim_bound() const { return MultiSSet::dim_bound(0); }
  int cell_count(int k) const { return MultiSSet::cell_count({k}); }
  const std::string& name(int k, int cell) const { return MultiSSet::name({k}, cell); }
  int find_cell(int k, std::string_view name) const { return MultiSSet::find_cell({k}, name); }
  int face(int k, int i, int cell) const { return MultiSSet::face({k}, 0, i, cell); }
  int degen(int k, int i, int cell) const { return MultiSSet::degen({k}, 0, i, cell); }
  /// theta: [a] -> [k] acting X_k -> X_a.
  int act(int k, const MonotoneMap& theta, int cell) const { return MultiSSet::act({k}, 0, theta, cell); }
  /// Vertex v of a k-cell.
  int vertex(int k, int cell, int v) const;
  /// True when the k-cell is some s_i of a (k-1)-cell.
  bool is_degenerate(int k, int cell) const;

  using MultiSSet::act;
  using MultiSSet::cell_count;
  using MultiSSet::degen;
  using MultiSSet::dim_bound;
  using MultiSSet::face;
  using MultiSSet::find_cell;
  using MultiSSet::name;
};

struct SSetMap {
  std::shared_ptr<const SimplicialSet> source;
  std::shared_ptr<const SimplicialSet> target;
  std::vector<CellMap> levels;

  SSetMap() = default;
  /// Throws std::invalid_argument on shape mismatch.
  SSetMap(std::shared_ptr<const SimplicialSet> source, std::shared_ptr<const SimplicialSet> target,
          std::vector<CellMap> levels);
  static SSetMap from_multi(const MultiSSetMap& f);
  MultiSSetMap as_multi() const;
  int operator()(int k, int cell) const { return levels.at(k).at(cell); }
};

ValidationReport validate_sset(const SimplicialSet& x);
ValidationReport validate_sset_map(const SSetMap& f);

/// Finest partition of X_0 with d_0 e ~ d_1 e for every 1-cell e. Throws
/// std::invalid_argument("need 1-cells") when dim_bound is 0.
Partition pi0(const SimplicialSet& x);

struct SSetFiberProduct {
  std::shared_ptr<const SimplicialSet> object;
  SSetMap pr1;
  SSetMap pr2;
};
/// Throws std::invalid_argument when the maps have different targets.
SSetFiberProduct fiber_product(const SSetMap& f, const SSetMap& g);

/// Set-level Segal map X_m -> X_1 x_{X_0} ... x_{X_0} X_1. Target elements
/// are the composable spine tuples (e_1, ..., e_m), d_0 e_j = d_1 e_{j+1},
/// in lexicographic order.
struct SegalMap {
  int m = 0;
  int source_size = 0;
  std::vector<std::vector<int>> spine_tuples;
  CellMap map;

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  /// First spine tuple with no preimage, or empty.
  std::optional<std::vector<int>> unfilled() const;
  /// Two distinct cells with equal spines, if any.
  std::optional<std::pair<int, int>> collision() const;
};
/// Throws std::out_of_range("level not stored") when m > dim_bound, and
/// std::invalid_argument when m < 1.
SegalMap segal_map(const SimplicialSet& x, int m);

/// Outcome of recognising a nerve: on success carries the reconstructed
/// groupoid (objects X_0, morphisms X_1 with d_1 -> d_0, composites read off
/// the unique 2-cell over each composable pair).
struct NerveReport {
  bool is_nerve = false;
  std::vector<std::string> failures;
  std::optional<FinGroupoid> groupoid;
};
/// Requires dim_bound >= 3; a smaller bound is reported as a failure.
NerveReport is_nerve_of_groupoid(const SimplicialSet& x);

/// Objects X_0, generators the nondegenerate 1-cells d_1 e -> d_0 e, one
/// relation d_1 s = (d_2 s then d_0 s) per nondegenerate 2-cell s. Degenerate
/// edges are identities and never appear in words. Throws
/// std::invalid_argument("relations need 2-cells") when dim_bound < 2.
FpGroupoid edge_path_groupoid(const SimplicialSet& x);
/// Generator index of each 1-cell in edge_path_groupoid(x), -1 if degenerate.
std::vector<int> edge_generator_index(const SimplicialSet& x);

/// (diag x)_k = x_{(k,...,k)} with structure maps applied on every axis.
/// dim_bound is the minimum of x's bounds. Throws std::invalid_argument for
/// arity 0.
SimplicialSet total_diag(const MultiSSet& x);
SSetMap total_diag(const MultiSSetMap& f);
/// Merges the first two axes diagonally; arity drops by one.
MultiSSet pairwise_diag(const MultiSSet& x);

// ---------------------------------------------------------------------------
// small simplicial sets

/// Nerve of the poset 0 < 1 < ... < n, truncated at D. Cells are named by
/// their vertex sequence, e.g. "012", "0012".
SimplicialSet standard_simplex(int n, int dim_bound);
/// Sub-simplicial set of the standard simplex spanned by the given faces
/// (each face a sorted vertex list).
SimplicialSet simplex_subcomplex(int n, const std::vector<std::vector<int>>& maximal_faces, int dim_bound);
SimplicialSet simplex_boundary(int n, int dim_bound);
/// k copies of the point.
SimplicialSet discrete_sset(int points, int dim_bound);
SimplicialSet coproduct(const SimplicialSet& x, const SimplicialSet& y);

}  // namespace ngpd
