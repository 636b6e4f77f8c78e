#include "doctest.h"
#include "ngpd/groupoid.hpp"
#include "ngpd/ngroupoid.hpp"
#include "oracle.hpp"

using namespace ngpd;

namespace {

const FinGroup& ref(const std::string& name) {
  for (const auto& g : reference_groups())
    if (g.name == name) return g.group;
  throw std::logic_error(name);
}

std::shared_ptr<const FinGroupoid> share(FinGroupoid g) { return std::make_shared<const FinGroupoid>(std::move(g)); }

MultiSSet lifted(const FinGroupoid& g, int bound = 3) { return lift_carrier(nerve(g, bound), bound); }

bool has_rule(const ValidationReport& r, const std::string& prefix) {
  for (const auto& v : r.violations)
    if (v.rule.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_ngroupoid") {
  SUBCASE("nerves are 1-groupoids") {
    CHECK(NGroupoid(nerve(ref("C2").groupoid(), 3)).valid());
    CHECK(NGroupoid(nerve(spread_group(ref("S3"), 2), 3)).valid());
    CHECK(has_rule(validate_ngroupoid(nerve(spread_group(ref("S3"), 2), 2)), "G2"));  // D < 3 cannot be recognised
  }
  SUBCASE("lifted nerves are 2-groupoids") {
    CHECK(NGroupoid(lifted(ref("C3").groupoid())).valid());
    CHECK(NGroupoid(lifted(disjoint_union(spread_group(FinGroup::trivial(), 2), ref("C2").groupoid()))).valid());
  }
  SUBCASE("K(A,2)") {
    CHECK(NGroupoid(k_a2_carrier(ref("C2"), 3, 3)).valid());
    CHECK(NGroupoid(k_a2_carrier(ref("C3"), 3, 3)).valid());
  }
  SUBCASE("Delta^2 fails G2") {
    const NGroupoid d(standard_simplex(2, 3));
    CHECK_FALSE(d.valid());
    CHECK(has_rule(d.validation(), "G2"));
    CHECK_THROWS_AS(d.require_valid(), std::invalid_argument);
    CHECK(has_rule(validate_ngroupoid(lift_carrier(standard_simplex(2, 3), 2)), "G2"));
  }
  SUBCASE("a non-constant outer level 0 fails G0") {
    const auto x = external_product(nerve(ref("C2").groupoid(), 2), nerve(ref("C2").groupoid(), 2));
    const auto r = validate_ngroupoid(x);
    CHECK(has_rule(r, "G0"));
    CHECK_THROWS_AS(objects(x), std::invalid_argument);
  }
  SUBCASE("the horn fails G1") { CHECK(has_rule(validate_ngroupoid(simplex_subcomplex(2, {{0, 1}, {1, 2}}, 2)), "G1")); }
  CHECK_THROWS_AS(NGroupoid{MultiSSet{}}, std::invalid_argument);
}

TEST_CASE("objects and arrow_object") {
  CHECK(objects(NGroupoid(k_a2_carrier(ref("C2"), 3, 3))).size() == 1);
  const auto g = disjoint_union(spread_group(ref("C2"), 2), ref("C3").groupoid());
  const NGroupoid one(nerve(g, 3)), two(lifted(g));
  CHECK(objects(one).size() == 3);
  CHECK(objects(two).size() == 3);
  CHECK(objects(two).front() == "(" + objects(one).front() + ",*)");
  SUBCASE("n = 1: the hom set") {
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const auto a = arrow_object(one.carrier(), x, y);
        CHECK(a.object.arity() == 0);
        CHECK(a.object.cell_count({}) == static_cast<int>(g.hom(x, y).size()));
      }
  }
  SUBCASE("n = 2 over a lifted nerve: the constant hom set") {
    const auto a = arrow_object(two, 0, 1);
    CHECK(a.n() == 1);
    CHECK(a.valid());
    for (int k = 0; k <= 3; ++k) CHECK(a.carrier().cell_count({k}) == 2);
  }
  SUBCASE("K(A,2): Hom(*, *) is the nerve of A") {
    const auto a = arrow_object(NGroupoid(k_a2_carrier(ref("C3"), 3, 3)), 0, 0);
    CHECK(a.valid());
    for (int k = 0; k <= 3; ++k) CHECK(a.carrier().cell_count({k}) == nerve(ref("C3").groupoid(), 3).cell_count(k));
    CHECK(oracle::groupoids_isomorphic(*is_nerve_of_groupoid(SimplicialSet(a.carrier())).groupoid, ref("C3").groupoid()));
  }
  CHECK_THROWS_AS(arrow_object(one.carrier(), 0, 7), std::out_of_range);
}

TEST_CASE("pi0_set") {
  const auto g = disjoint_union(spread_group(FinGroup::trivial(), 2), ref("C3").groupoid());
  for (const auto& carrier : {MultiSSet(nerve(g, 3)), lifted(g)}) {
    const auto p = pi0_set(carrier);
    CHECK(p.classes.size() == 2);
    CHECK(p.quotient == std::vector<int>{0, 0, 1});
    const auto labels = oracle::groupoid_components(g);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK((p.quotient[x] == p.quotient[y]) == (labels[x] == labels[y]));
  }
  CHECK(pi0_set(NGroupoid(k_a2_carrier(ref("C2"), 3, 3))).classes.size() == 1);
  CHECK_THROWS_AS(pi0_set(NGroupoid(standard_simplex(2, 3))), std::invalid_argument);
}

TEST_CASE("homotopy_group") {
  const NGroupoid k2(k_a2_carrier(ref("C2"), 3, 3)), l3(lifted(ref("C3").groupoid()));
  CHECK(homotopy_group(k2, 0, 1).order() == 1);
  CHECK(groups_isomorphic(homotopy_group(k2, 0, 2), ref("C2")));
  CHECK(groups_isomorphic(homotopy_group(l3, 0, 1), ref("C3")));
  CHECK(homotopy_group(l3, 0, 2).order() == 1);
  CHECK(oracle::is_commutative(homotopy_group(NGroupoid(k_a2_carrier(ref("C3"), 3, 3)), 0, 2)));
  SUBCASE("pi_1 of a nerve is the automorphism group") {
    const auto g = spread_group(ref("S3"), 2);
    const NGroupoid n(nerve(g, 3));
    CHECK(homotopy_group(n, 1, 1).order() == static_cast<int>(oracle::endomorphisms(g, 1).size()));
    CHECK(groups_isomorphic(homotopy_group(n, 1, 1), ref("S3")));
  }
  CHECK_THROWS_AS(homotopy_group(k2, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(homotopy_group(k2, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(homotopy_group(k2, 4, 1), std::out_of_range);
  CHECK_THROWS_AS(homotopy_group(NGroupoid(standard_simplex(2, 3)), 0, 1), std::invalid_argument);
}

TEST_CASE("n_equivalence") {
  SUBCASE("K(A,2) maps") {
    CHECK(n_equivalence(k_a2_map(ref("C2"), ref("C2"), {0, 1}, 3, 3)).equivalent);
    const auto r = n_equivalence(k_a2_map(ref("C2"), FinGroup::trivial(), {0, 0}, 3, 3));
    CHECK_FALSE(r.equivalent);
    CHECK_FALSE(r.witness.empty());
  }
  SUBCASE("lifted functors agree with the groupoid test") {
    const auto pair = share(spread_group(ref("C2"), 2)), c2 = share(ref("C2").groupoid());
    std::vector<int> mor;
    for (int f = 0; f < pair->morphism_count(); ++f) mor.push_back(f % 2);
    const auto collapse = make_functor(pair, c2, {0, 0}, mor);
    REQUIRE(validate_functor(collapse).ok());
    const auto kill = make_functor(c2, share(FinGroup::trivial().groupoid()), {0}, {0, 0});
    for (const auto& f : {collapse, kill}) {
      const bool expected = is_equivalence(f).equivalent;
      CHECK(n_equivalence(nerve(f, 3).as_multi()).equivalent == expected);
      CHECK(n_equivalence(lift_map(nerve(f, 3).as_multi(), 3)).equivalent == expected);
    }
  }
  SUBCASE("invalid ends and arity mismatch throw") {
    const auto d = std::make_shared<const MultiSSet>(standard_simplex(2, 3));
    CHECK_THROWS_AS(n_equivalence(MultiSSetMap::identity(d)), std::invalid_argument);
  }
}

TEST_CASE("unit checks") {
  for (const auto& g : {ref("C2").groupoid(), ref("S3").groupoid(), spread_group(ref("C2"), 3),
                        disjoint_union(discrete_groupoid(2), ref("Q8").groupoid())})
    CHECK(unit_check_n1(g).passed());
  SUBCASE("unit_invariants_n2 on a disjoint union") {
    const NGroupoid u(coproduct(k_a2_carrier(ref("C2"), 3, 3), lifted(ref("C3").groupoid())));
    REQUIRE(u.valid());
    CHECK(pi0_set(u).classes.size() == 2);
    CHECK(unit_invariants_n2(u, 0).passed());
    CHECK(unit_invariants_n2(u, 1).passed());
    CHECK(groups_isomorphic(homotopy_group(u, 1, 1), ref("C3")));
    CHECK(groups_isomorphic(homotopy_group(u, 0, 2), ref("C2")));
  }
}
