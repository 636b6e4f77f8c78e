#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ngpd/partition.hpp"
#include "ngpd/report.hpp"

namespace ngpd {

class SimplicialSet;
struct SSetMap;

/// Finite groupoid given by explicit tables. Morphism f goes source(f) ->
/// target(f); compose(g, f) is g o f (defined when target(f) == source(g)).
class FinGroupoid {
 public:
  struct Morphism {
    std::string name;
    int source = 0;
    int target = 0;
    bool operator==(const Morphism&) const = default;
  };

  FinGroupoid() = default;
  /// `composition[g * M + f]` holds g o f or -1 when not composable. Shapes
  /// are checked (std::invalid_argument); axioms are left to
  /// validate_groupoid.
  FinGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<int> composition,
              std::vector<int> identities, std::vector<int> inverses);

  /// Derives identities and inverses from a composition function. Throws
  /// std::invalid_argument if some object has no identity or some morphism
  /// no inverse.
  static FinGroupoid from_composition(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                      const std::function<int(int, int)>& compose_gf);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(int f) const { return morphisms_.at(f); }
  int source(int f) const { return morphisms_.at(f).source; }
  int target(int f) const { return morphisms_.at(f).target; }
  int compose(int g, int f) const { return composition_.at(static_cast<std::size_t>(g) * morphisms_.size() + f); }
  int identity(int x) const { return identities_.at(x); }
  int inverse(int f) const { return inverses_.at(f); }
  const std::vector<int>& composition_table() const { return composition_; }
  const std::vector<int>& identities() const { return identities_; }
  const std::vector<int>& inverses() const { return inverses_; }

  /// Morphisms x -> y in index order.
  std::vector<int> hom(int x, int y) const;
  int find_object(std::string_view name) const;
  int find_morphism(std::string_view name) const;

  bool operator==(const FinGroupoid&) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> composition_;
  std::vector<int> identities_;
  std::vector<int> inverses_;
};

/// Finite group: a one-object groupoid. mul(a, b) = a o b.
class FinGroup {
 public:
  FinGroup() : FinGroup(trivial()) {}
  /// Throws std::invalid_argument unless the groupoid has exactly one object.
  explicit FinGroup(FinGroupoid g);
  /// `table[a * n + b]` is a*b. The neutral element is detected.
  static FinGroup from_table(std::vector<std::string> names, const std::vector<int>& table);
  static FinGroup trivial();

  int order() const { return groupoid_.morphism_count(); }
  int mul(int a, int b) const { return groupoid_.compose(a, b); }
  int inv(int a) const { return groupoid_.inverse(a); }
  int unit() const { return groupoid_.identity(0); }
  const std::string& name(int a) const { return groupoid_.morphism(a).name; }
  const FinGroupoid& groupoid() const { return groupoid_; }
  bool is_abelian() const;

  bool operator==(const FinGroup&) const = default;

 private:
  FinGroupoid groupoid_;
};

struct GroupoidFunctor {
  std::shared_ptr<const FinGroupoid> source;
  std::shared_ptr<const FinGroupoid> target;
  std::vector<int> objects;
  std::vector<int> morphisms;

  bool operator==(const GroupoidFunctor& o) const {
    return *source == *o.source && *target == *o.target && objects == o.objects && morphisms == o.morphisms;
  }
};

/// Category axioms, identities, inverses, exhaustively.
ValidationReport validate_groupoid(const FinGroupoid& g);
/// Table shape, source/target preservation, identities, composition.
ValidationReport validate_functor(const GroupoidFunctor& f);

/// Nerve truncated at D: k-cells are chains x0 -f1-> x1 ... -fk-> xk.
/// d_0 drops f1, d_k drops fk, d_i composes f_{i+1} o f_i; s_i inserts the
/// identity of x_i. Throws std::invalid_argument when D < 1.
SimplicialSet nerve(const FinGroupoid& g, int dim_bound);

/// Composable k-chains (k >= 1) in lexicographic order of morphism indices;
/// the order of the k-cells of nerve(g, D).
std::vector<std::vector<int>> composable_chains(const FinGroupoid& g, int k);
/// N(F): chains are mapped morphism by morphism.
SSetMap nerve(const GroupoidFunctor& f, int dim_bound);

Partition iso_classes(const FinGroupoid& g);
/// Aut(x) as a group; element names are the morphism names.
FinGroup automorphism_group(const FinGroupoid& g, int x);

struct EquivalenceResult {
  bool equivalent = false;
  std::string witness;  // first failing condition, empty on success
};
/// Essentially surjective and fully faithful.
EquivalenceResult is_equivalence(const GroupoidFunctor& f);

GroupoidFunctor identity_functor(std::shared_ptr<const FinGroupoid> g);
/// First f, then g.
GroupoidFunctor compose(const GroupoidFunctor& f, const GroupoidFunctor& g);

// ---------------------------------------------------------------------------
// constructors used by the corpus

FinGroup cyclic_group(int n);
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// Symmetries of the regular n-gon, order 2n.
FinGroup dihedral_group(int n);
FinGroup quaternion_group();

/// One group per isomorphism class of order <= 8, in a fixed order
/// (1, C2, C3, C4, C2xC2, C5, C6, S3, C7, C8, C4xC2, C2^3, D4, Q8).
struct NamedGroup {
  std::string name;
  FinGroup group;
};
const std::vector<NamedGroup>& reference_groups();

FinGroupoid discrete_groupoid(int objects);
/// Connected groupoid on k objects with every vertex group equal to G:
/// morphisms (j, g, i): i -> j with (l, h, j) o (j, g, i) = (l, hg, i).
FinGroupoid spread_group(const FinGroup& g, int objects);
FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b);
FinGroupoid product_groupoid(const FinGroupoid& a, const FinGroupoid& b);
/// Action groupoid of G acting on {0..points-1} through act(g, x).
FinGroupoid action_groupoid(const FinGroup& g, int points, const std::function<int(int, int)>& act);

/// Throws std::invalid_argument when the tables have the wrong size or point
/// outside the target. Functoriality is checked by validate_functor.
GroupoidFunctor make_functor(std::shared_ptr<const FinGroupoid> source, std::shared_ptr<const FinGroupoid> target,
                             std::vector<int> objects, std::vector<int> morphisms);

}  // namespace ngpd
