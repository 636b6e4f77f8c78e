#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ngpd/monotone.hpp"
#include "ngpd/report.hpp"

namespace ngpd {

using MultiIndex = std::vector<int>;
/// Function between two finite cell sets, by index.
using CellMap = std::vector<int>;

/// Finite n-fold simplicial set, truncated at a per-axis dimension bound.
///
/// Every cell (degenerate ones included) is stored explicitly. Cells of a
/// level are identified by their index; names exist for serialization and
/// reporting and are unique within a level. Arity 0 is a plain finite set
/// (a single level, no structure maps).
///
/// Face d_i along axis a is stored at the source level and maps into the
/// level with index[a] decreased by one; degeneracies likewise.
class MultiSSet {
 public:
  struct Level {
    std::vector<std::string> names;
    std::vector<std::vector<CellMap>> face;   // [axis][i], empty when index[axis] == 0
    std::vector<std::vector<CellMap>> degen;  // [axis][i], empty when index[axis] == bound
    bool operator==(const Level&) const = default;
  };

  /// The empty set (arity 0).
  MultiSSet();
  /// Throws std::invalid_argument when tables have the wrong shape, point
  /// outside the target level, or names repeat within a level. Simplicial
  /// identities are NOT enforced here; see validate_multisset.
  MultiSSet(std::vector<int> dim_bounds, std::vector<Level> levels);

  int arity() const { return static_cast<int>(bounds_.size()); }
  const std::vector<int>& dim_bounds() const { return bounds_; }
  int dim_bound(int axis) const { return bounds_.at(axis); }

  std::size_t level_count() const { return levels_.size(); }
  std::size_t flat_index(const MultiIndex& m) const;
  MultiIndex multi_index(std::size_t flat) const;
  bool contains(const MultiIndex& m) const;

  const Level& level(const MultiIndex& m) const { return levels_[flat_index(m)]; }
  const Level& level_at(std::size_t flat) const { return levels_.at(flat); }
  const std::vector<Level>& levels() const { return levels_; }

  int cell_count(const MultiIndex& m) const { return static_cast<int>(level(m).names.size()); }
  const std::string& name(const MultiIndex& m, int cell) const { return level(m).names.at(cell); }
  /// Index of the cell with the given name, or -1.
  int find_cell(const MultiIndex& m, std::string_view name) const;

  int face(const MultiIndex& at, int axis, int i, int cell) const;
  int degen(const MultiIndex& at, int axis, int i, int cell) const;
  const CellMap& face_map(const MultiIndex& at, int axis, int i) const;
  const CellMap& degen_map(const MultiIndex& at, int axis, int i) const;

  /// Simplicial operator of a monotone map theta: [a] -> [b] along `axis`,
  /// taking a cell at `at` (with at[axis] == b) to a cell at the level with
  /// index a on that axis.
  int act(const MultiIndex& at, int axis, const MonotoneMap& theta, int cell) const;

  std::size_t total_cells() const;

  bool operator==(const MultiSSet& other) const {
    return bounds_ == other.bounds_ && levels_ == other.levels_;
  }

 private:
  std::vector<int> bounds_;
  std::vector<std::size_t> strides_;
  std::vector<Level> levels_;
};

/// Iterates all multi-indices of a bound vector in row-major order.
std::vector<MultiIndex> all_indices(const std::vector<int>& bounds);
std::string index_to_string(const MultiIndex& m);

/// Levelwise map between MultiSSets with equal dim_bounds.
struct MultiSSetMap {
  std::shared_ptr<const MultiSSet> source;
  std::shared_ptr<const MultiSSet> target;
  std::vector<CellMap> levels;  // by flat index

  MultiSSetMap() = default;
  /// Throws std::invalid_argument on shape mismatch.
  MultiSSetMap(std::shared_ptr<const MultiSSet> source, std::shared_ptr<const MultiSSet> target,
               std::vector<CellMap> levels);

  static MultiSSetMap identity(std::shared_ptr<const MultiSSet> x);
  int operator()(const MultiIndex& at, int cell) const { return levels[source->flat_index(at)].at(cell); }
  bool is_levelwise_bijective() const;
  bool is_levelwise_injective() const;
  bool is_levelwise_surjective() const;

  bool operator==(const MultiSSetMap& o) const {
    return *source == *o.source && *target == *o.target && levels == o.levels;
  }
};

/// First f, then g.
MultiSSetMap compose(const MultiSSetMap& f, const MultiSSetMap& g);

/// Checks commutation with every face and degeneracy map.
ValidationReport validate_map(const MultiSSetMap& f);

/// Per-axis simplicial identities and cross-axis commutation, exhaustively.
ValidationReport validate_multisset(const MultiSSet& x);

/// Cells at (M, K) are pairs X_M x Y_K (x-major order), structure maps
/// componentwise. The result has arity x.arity() + y.arity().
MultiSSet external_product(const MultiSSet& x, const MultiSSet& y);
/// f ⊠ g between external products.
MultiSSetMap external_product(const MultiSSetMap& f, const MultiSSetMap& g);

/// Levelwise cartesian product of objects with equal dim_bounds.
MultiSSet levelwise_product(const MultiSSet& x, const MultiSSet& y);
/// Levelwise disjoint union; cells of x come first, names are prefixed
/// "0." and "1.".
MultiSSet coproduct(const MultiSSet& x, const MultiSSet& y);

/// Object whose every level is a copy of `names` and whose structure maps
/// are identities.
MultiSSet constant_multisset(const std::vector<int>& dim_bounds, const std::vector<std::string>& names);
/// The terminal object (one cell per level).
MultiSSet terminal_multisset(const std::vector<int>& dim_bounds);
/// True when every structure map is the identity on indices.
bool is_constant(const MultiSSet& x);

struct FiberProduct {
  std::shared_ptr<const MultiSSet> object;
  MultiSSetMap pr1;
  MultiSSetMap pr2;
};

/// Levelwise pullback of f: X -> Z and g: Y -> Z. Cells are pairs (x, y)
/// with f(x) = g(y), in lexicographic order. Throws std::invalid_argument
/// when the targets differ.
FiberProduct fiber_product(const MultiSSetMap& f, const MultiSSetMap& g);

/// Reorders axes: axis a of the result is axis perm[a] of x. Cells and
/// structure maps are unchanged. Throws std::invalid_argument unless perm is a
/// permutation of 0..arity-1.
MultiSSet permute_axes(const MultiSSet& x, const std::vector<int>& perm);

/// Fixes the first axis at m. Arity drops by one.
MultiSSet outer_level(const MultiSSet& x, int m);
/// Restriction of a map to the outer level m.
MultiSSetMap outer_level_map(const MultiSSetMap& f, int m);

/// A MultiSSet of arity n >= 1 seen as a simplicial object in arity n-1
/// objects: the outer levels plus the maps induced by outer faces and
/// degeneracies. Levels are shared between the maps.
struct OuterTower {
  std::vector<std::shared_ptr<const MultiSSet>> levels;
  std::vector<std::vector<MultiSSetMap>> face;   // face[m][i]: level m -> m-1
  std::vector<std::vector<MultiSSetMap>> degen;  // degen[m][i]: level m -> m+1
};
OuterTower outer_tower(const MultiSSet& x);

/// Tuples (c_1..c_m) of outer-level-1 cells with target(c_j) = source(c_{j+1}),
/// i.e. d_0 c_j = d_1 c_{j+1} along the outer axis. Arity n-1.
MultiSSet spine_product(const MultiSSet& x, int m);
/// Segal map outer_level(x, m) -> spine_product(x, m). For m = 1 this is the
/// identity of outer_level(x, 1).
MultiSSetMap outer_segal_map(const MultiSSet& x, int m);

/// Innermost-axis pi_0 at every outer index, with the induced structure
/// maps. `quotient[flat]` sends a cell at (K, 0) to its class at K.
struct Truncation {
  MultiSSet object;
  std::vector<CellMap> quotient;
};
/// Throws std::invalid_argument when arity is 0 or the innermost bound is 0;
/// throws std::logic_error if an induced map is not well defined.
Truncation truncate_with_quotient(const MultiSSet& x);
MultiSSet pi0_innermost(const MultiSSet& x);
MultiSSet truncate_T(const MultiSSet& x);
/// T applied k times. T_power(x, x.arity()) is a plain finite set.
MultiSSet T_power(const MultiSSet& x, int k);

/// Map induced on innermost pi_0 by a levelwise map.
MultiSSetMap truncate_map(const MultiSSetMap& f);
MultiSSetMap T_power_map(const MultiSSetMap& f, int k);

}  // namespace ngpd
