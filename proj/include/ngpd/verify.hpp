#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ngpd/fp_group.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/ngroupoid.hpp"
#include "ngpd/report.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd {

/// X split by the pi_0 class of each cell's vertex 0. Components come in
/// class order; `inclusions[c][k]` maps the k-cells of component c to cells
/// of the base. pr1 maps the disjoint union (cells named "<c>.<name>") back
/// onto the base; pr2 sends component c to its pi_0 class.
struct ComponentDecomposition {
  std::shared_ptr<const SimplicialSet> base;
  std::vector<SimplicialSet> components;
  std::vector<std::vector<CellMap>> inclusions;
  SSetMap pr1;
  std::vector<int> pr2;
};
/// Throws std::invalid_argument("need 1-cells") when dim_bound is 0.
ComponentDecomposition components_decomposition(const SimplicialSet& x);

struct FDecompositionResult {
  Report report;
  bool zero_truncated = false;  // every component has trivial vertex-group invariants
  int component_count = 0;
};
/// pr1 and pr2 checks of the decomposition. Needs dim_bound >= 2 (an ERROR
/// report otherwise).
FDecompositionResult check_pr_weak_equiv(const SimplicialSet& x);

/// Desk-checkable part of a weak equivalence f: X -> Y: pi_0(f) bijective and,
/// for each component, equal vertex-group invariants at x and f(x).
struct WeakEquivCertificate {
  bool pi0_bijection = false;
  bool invariants_equal = false;
  std::string witness;  // first failure, empty when both hold
  bool ok() const { return pi0_bijection && invariants_equal; }
  bool operator==(const WeakEquivCertificate&) const = default;
};
/// Needs dim_bound >= 2 on both ends.
WeakEquivCertificate weak_equiv_certificate(const SSetMap& f);

/// pi_0(diag phi) against T(pi_0-innermost phi) for a 2-fold object, plus the
/// same computation with the axes swapped.
Report segal_pi0_law(const MultiSSet& phi);

/// Certificate for the outer level m of a map of 2-fold objects.
struct LevelCertificate {
  int m = 0;
  WeakEquivCertificate certificate;
  bool operator==(const LevelCertificate&) const = default;
};
std::vector<LevelCertificate> levelwise_certificates(const MultiSSetMap& t);
/// Re-derives the supplied certificates, then checks the diagonal. A missing,
/// mismatched or failing certificate is an ERROR verdict (the precondition
/// does not hold).
Report levelwise_equiv_to_diag(const MultiSSetMap& t, const std::vector<LevelCertificate>& certificates);

/// total_diag(X x_Z Y) equals total_diag(X) x_{total_diag Z} total_diag(Y),
/// objects and projections, cell for cell. Throws std::invalid_argument when
/// the targets differ.
bool diag_fiber_product_check(const MultiSSetMap& f, const MultiSSetMap& g, std::string* witness = nullptr);

/// m -> total_diag(outer level m), with the maps induced by outer faces and
/// degeneracies.
struct PObject {
  std::vector<std::shared_ptr<const SimplicialSet>> levels;
  std::vector<std::vector<SSetMap>> face;   // face[m][i]: P_m -> P_{m-1}
  std::vector<std::vector<SSetMap>> degen;  // degen[m][i]: P_m -> P_{m+1}
};
/// Throws std::invalid_argument for arity < 2.
PObject p_object(const MultiSSet& phi);

/// Segal-space checks of P(phi) for a valid n-groupoid, n >= 2.
Report segal_report_for_P(const NGroupoid& phi);

}  // namespace ngpd
