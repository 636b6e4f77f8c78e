#include "doctest.h"
#include "ngpd/groupoid.hpp"
#include "ngpd/simplicial_set.hpp"
#include "oracle.hpp"

using namespace ngpd;

// Hand-computed values for the test oracle itself.

TEST_CASE("functor enumeration") {
  const auto c2 = cyclic_group(2).groupoid(), c3 = cyclic_group(3).groupoid();
  CHECK(oracle::all_functors(c2, c2).size() == 2);   // Hom(C2, C2)
  CHECK(oracle::all_functors(c2, c3).size() == 1);   // only the trivial map
  CHECK(oracle::all_functors(c3, c3).size() == 3);
  CHECK(oracle::all_functors(discrete_groupoid(2), discrete_groupoid(3)).size() == 9);
}

TEST_CASE("quasi-inverses") {
  const auto one = FinGroup::trivial().groupoid(), pair = spread_group(FinGroup::trivial(), 2);
  const auto to_one = oracle::all_functors(pair, one);
  REQUIRE(to_one.size() == 1);
  CHECK(oracle::has_quasi_inverse(pair, one, to_one.front()));
  const auto c2 = cyclic_group(2).groupoid();
  CHECK_FALSE(oracle::has_quasi_inverse(c2, one, oracle::all_functors(c2, one).front()));
  CHECK_FALSE(oracle::has_quasi_inverse(one, discrete_groupoid(2), oracle::all_functors(one, discrete_groupoid(2)).front()));
}

TEST_CASE("isomorphism and components") {
  CHECK(oracle::groupoids_isomorphic(cyclic_group(4).groupoid(), cyclic_group(4).groupoid()));
  CHECK_FALSE(oracle::groupoids_isomorphic(cyclic_group(4).groupoid(), direct_product(cyclic_group(2), cyclic_group(2)).groupoid()));
  CHECK_FALSE(oracle::groupoids_isomorphic(discrete_groupoid(2), spread_group(FinGroup::trivial(), 2)));
  CHECK(oracle::groupoid_components(disjoint_union(discrete_groupoid(1), spread_group(FinGroup::trivial(), 2))) ==
        std::vector<int>{0, 1, 1});
  CHECK(oracle::component_count(discrete_sset(4, 1)) == 4);
  CHECK(oracle::component_count(standard_simplex(2, 1)) == 1);
}

TEST_CASE("chains, endomorphisms, commutativity") {
  const auto g = spread_group(cyclic_group(2), 2);
  CHECK(oracle::brute_force_chains(g, 0).size() == 2);
  CHECK(oracle::brute_force_chains(g, 1).size() == 8);
  CHECK(oracle::brute_force_chains(g, 2).size() == 32);  // 8 arrows, 4 continuations each
  CHECK(oracle::endomorphisms(g, 1).size() == 2);
  CHECK(oracle::all_automorphism_groups_trivial(discrete_groupoid(3)));
  CHECK_FALSE(oracle::all_automorphism_groups_trivial(g));
  CHECK(oracle::is_commutative(cyclic_group(6)));
  CHECK_FALSE(oracle::is_commutative(dihedral_group(3)));
}

TEST_CASE("cyclic product invariants") {
  const auto z2z2 = oracle::cyclic_product_invariants(2, 2);
  CHECK(z2z2.abelian == AbelianInvariants{0, {2, 2}});
  // homs Z2 x Z2 -> C2 and -> C3: 4 and 1
  CHECK(z2z2.hom_counts.at(1) == 4);
  CHECK(z2z2.hom_counts.at(2) == 1);
  CHECK(oracle::cyclic_product_invariants(2, 3).abelian == AbelianInvariants{0, {6}});
}
