#pragma once

// Brute-force reference computations. They read only the raw tables of the
// objects they inspect and share no algorithm with the library under test.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ngpd/fp_group.hpp"
#include "ngpd/groupoid.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd::oracle {

struct RawFunctor {
  std::vector<int> objects;
  std::vector<int> morphisms;
};

/// Calls visit on every functor a -> b whose object map passes `accept`.
/// Enumeration stops when visit returns false. With `injective` only
/// injective morphism maps are produced.
void for_each_functor(const FinGroupoid& a, const FinGroupoid& b,
                      const std::function<bool(const std::vector<int>&)>& accept,
                      const std::function<bool(const RawFunctor&)>& visit, bool injective = false);
std::vector<RawFunctor> all_functors(const FinGroupoid& a, const FinGroupoid& b);

/// Some family eta_x: f x -> g x natural in x.
bool natural_iso_exists(const FinGroupoid& a, const FinGroupoid& b, const RawFunctor& f, const RawFunctor& g);

/// Searches every functor g: b -> a for natural isos id => g f and f g => id.
bool has_quasi_inverse(const FinGroupoid& a, const FinGroupoid& b, const RawFunctor& f);

/// Exhaustive search for an isomorphism of groupoids.
bool groupoids_isomorphic(const FinGroupoid& a, const FinGroupoid& b);

/// Connected components of the graph of 1-cells of a simplicial set.
int component_count(const SimplicialSet& x);
/// Component labels of the objects of a groupoid, by breadth-first search.
std::vector<int> groupoid_components(const FinGroupoid& g);

/// Endomorphisms of x, by filtering the morphism table.
std::vector<int> endomorphisms(const FinGroupoid& g, int x);
/// True when every object has only its identity as an automorphism.
bool all_automorphism_groups_trivial(const FinGroupoid& g);
bool is_commutative(const FinGroup& g);

/// Every k-tuple of morphisms that composes, in lexicographic order; for
/// k = 0 the objects.
std::vector<std::vector<int>> brute_force_chains(const FinGroupoid& g, int k);

/// Checks total_diag(N(G) ⊠ N(H)) against the nerve of G x H built from
/// pairs of morphisms: names, a levelwise bijection onto composable pair
/// chains, and every face and degeneracy. Empty on success.
std::string diag_product_mismatch(const FinGroupoid& g, const FinGroupoid& h, int dim_bound,
                                  const SimplicialSet& diagonal);

/// Z/a x Z/b: abelianization (Z/gcd x Z/lcm) and homomorphism counts into
/// each reference group, counted as commuting pairs (x, y) with x^a = y^b = 1.
GroupInvariants cyclic_product_invariants(int a, int b);

}  // namespace ngpd::oracle
