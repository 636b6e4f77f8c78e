#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ngpd/fp_group.hpp"
#include "ngpd/groupoid.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/report.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd {

/// Axioms of an n-groupoid on a MultiSSet carrier of arity n >= 1 (the first
/// axis is the outer one):
///   G0  the outer level 0 is constant (all structure maps are identities);
///   G1  for 2 <= m <= outer bound the Segal map of outer levels is an
///       (n-1)-equivalence (a bijection when n = 1);
///   G2  m -> T^{n-1}(outer level m) is the nerve of a groupoid;
///   G3  every outer level is an (n-1)-groupoid.
/// Rules in the report start with the axiom label.
ValidationReport validate_ngroupoid(const MultiSSet& carrier);

/// A carrier together with its validation report, computed once at
/// construction. Copies share both.
class NGroupoid {
 public:
  /// Throws std::invalid_argument for arity 0.
  explicit NGroupoid(MultiSSet carrier);
  explicit NGroupoid(std::shared_ptr<const MultiSSet> carrier);

  int n() const { return carrier_->arity(); }
  const MultiSSet& carrier() const { return *carrier_; }
  const std::shared_ptr<const MultiSSet>& carrier_ptr() const { return carrier_; }
  const ValidationReport& validation() const { return *validation_; }
  bool valid() const { return validation_->ok(); }
  /// Throws std::invalid_argument naming the first violation when invalid.
  void require_valid() const;

 private:
  std::shared_ptr<const MultiSSet> carrier_;
  std::shared_ptr<const ValidationReport> validation_;
};

/// Map between n-groupoid carriers of equal arity.
using NFunctor = MultiSSetMap;

/// Names of the objects: the cells at (0,...,0). Throws std::invalid_argument
/// when G0 fails.
std::vector<std::string> objects(const MultiSSet& carrier);
std::vector<std::string> objects(const NGroupoid& x);

/// Sub-object of outer level 1 on the cells with outer d_1 = x and d_0 = y.
/// For n = 1 this is the set Hom(x, y). `inclusion[flat]` maps each arrow
/// cell to its index in outer level 1.
struct ArrowObject {
  MultiSSet object;
  std::vector<CellMap> inclusion;
};
/// Throws std::out_of_range for unknown objects and std::invalid_argument
/// when G0 fails.
ArrowObject arrow_object(const MultiSSet& carrier, int x, int y);
NGroupoid arrow_object(const NGroupoid& phi, int x, int y);
/// Restriction of f to arrow_object(source, x, y) -> arrow_object(target, f x, f y).
MultiSSetMap arrow_map(const MultiSSetMap& f, int x, int y);
/// Object of arrow_object(carrier, x, x) given by the degenerate outer
/// 1-cell s_0 x.
int identity_arrow(const MultiSSet& carrier, int x);

/// T^n(carrier) with the quotient from objects to classes.
struct Pi0Set {
  std::vector<std::string> classes;  // representative names
  std::vector<int> quotient;         // object -> class
};
Pi0Set pi0_set(const MultiSSet& carrier);
/// Throws std::invalid_argument when phi is invalid.
Pi0Set pi0_set(const NGroupoid& phi);

/// Recursive equivalence: for n = 0 a bijection of sets; for n = 1 an
/// equivalence of the groupoids the carriers are nerves of; for n >= 2,
/// pi_0 surjective and every arrow-object map an (n-1)-equivalence. The
/// witness names the first failing recursion step.
EquivalenceResult equivalence_of_carriers(const MultiSSetMap& f);
/// As above after validating both ends. Throws std::invalid_argument when
/// either end is not a valid n-groupoid or arities differ.
EquivalenceResult n_equivalence(const NFunctor& f);

/// pi_i(phi, x) for 1 <= i <= n: Aut_x in the groupoid whose nerve is
/// T^{n-1} phi when i = 1, else pi_{i-1}(arrow_object(x, x), s_0 x). Throws
/// std::out_of_range for i outside [1, n] or an unknown object, and
/// std::invalid_argument when phi is invalid.
FinGroup homotopy_group(const MultiSSet& carrier, int x, int i);
FinGroup homotopy_group(const NGroupoid& phi, int x, int i);
/// Element map pi_i(source, x) -> pi_i(target, f x) induced by f.
std::vector<int> induced_homotopy_map(const MultiSSetMap& f, int x, int i);

/// Empty when phi is a homomorphism and bijective, else a witness.
std::string group_isomorphism_failure(const FinGroup& a, const FinGroup& b, const std::vector<int>& phi);
/// Exhaustive isomorphism search between small groups.
bool groups_isomorphic(const FinGroup& a, const FinGroup& b);

/// Unit map L: G -> Pi_1(N G) checked against the evaluation of the
/// edge-path presentation.
Report unit_check_n1(const FinGroupoid& g);
/// (pi_0, pi_1) comparison between a 2-groupoid and the edge-path groupoid of
/// its diagonal at object x.
Report unit_invariants_n2(const NGroupoid& phi, int x);

// ---------------------------------------------------------------------------
// carriers used for testing and the corpus

/// x with an extra constant innermost axis of the given bound (x ⊠ point).
MultiSSet lift_carrier(const MultiSSet& x, int bound);
MultiSSetMap lift_map(const MultiSSetMap& f, int bound);
/// The double nerve of an abelian group A: the cell set at (m, k) is N(A^m)_k,
/// stored as k x m matrices. Throws std::invalid_argument when A is not
/// abelian.
MultiSSet k_a2_carrier(const FinGroup& a, int outer_bound, int inner_bound);
/// Map induced entrywise by a homomorphism phi: A -> B. Throws
/// std::invalid_argument when phi is not a homomorphism.
MultiSSetMap k_a2_map(const FinGroup& a, const FinGroup& b, const std::vector<int>& phi, int outer_bound,
                      int inner_bound);

}  // namespace ngpd
