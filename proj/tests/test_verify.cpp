#include "doctest.h"
#include "ngpd/verify.hpp"

using namespace ngpd;

namespace {

std::shared_ptr<const FinGroupoid> share(FinGroupoid g) { return std::make_shared<const FinGroupoid>(std::move(g)); }

MultiSSetMap nerve_map(const GroupoidFunctor& f, int d) { return nerve(f, d).as_multi(); }

MultiSSetMap id_map(const MultiSSet& x) { return MultiSSetMap::identity(std::make_shared<const MultiSSet>(x)); }

int total(const SimplicialSet& x, int k) { return x.cell_count(k); }

}  // namespace

TEST_CASE("components_decomposition") {
  SUBCASE("connected X is one component equal to X") {
    auto x = standard_simplex(2, 3);
    auto d = components_decomposition(x);
    REQUIRE(d.components.size() == 1);
    CHECK(static_cast<const MultiSSet&>(d.components[0]) == static_cast<const MultiSSet&>(x));
    CHECK(d.pr1.as_multi().is_levelwise_bijective());
  }
  SUBCASE("two disjoint edges") {
    auto x = coproduct(standard_simplex(1, 2), standard_simplex(1, 2));
    auto d = components_decomposition(x);
    CHECK(d.components.size() == 2);
    CHECK(d.pr2 == std::vector<int>{0, 1});
  }
  SUBCASE("nerve of {a~b} + {c}: chain counts per component") {
    auto g = disjoint_union(spread_group(FinGroup::trivial(), 2), discrete_groupoid(1));
    auto x = nerve(g, 3);
    auto d = components_decomposition(x);
    REQUIRE(d.components.size() == 2);
    for (int k = 0; k <= 3; ++k) {
      // k-chains of the indiscrete groupoid on 2 objects are object sequences of length k+1
      CHECK(total(d.components[0], k) == (1 << (k + 1)));
      CHECK(total(d.components[1], k) == 1);
      CHECK(total(d.components[0], k) + total(d.components[1], k) == x.cell_count(k));
    }
    CHECK(validate_sset(*d.pr1.source).ok());
  }
}

TEST_CASE("check_pr_weak_equiv") {
  SUBCASE("discrete X") {
    auto r = check_pr_weak_equiv(discrete_sset(3, 2));
    CHECK(r.report.passed());
    CHECK(r.zero_truncated);
    CHECK(r.component_count == 3);
  }
  SUBCASE("boundary of a triangle is not 0-truncated") {
    auto r = check_pr_weak_equiv(coproduct(simplex_boundary(2, 3), discrete_sset(1, 3)));
    CHECK(r.report.passed());
    CHECK_FALSE(r.zero_truncated);
    CHECK(r.component_count == 2);
  }
  SUBCASE("dim_bound 1 is an error") {
    auto r = check_pr_weak_equiv(standard_simplex(1, 1));
    CHECK(r.report.verdict() == Verdict::error);
  }
}

TEST_CASE("weak_equiv_certificate") {
  auto z2 = share(cyclic_group(2).groupoid());
  auto triv = share(FinGroup::trivial().groupoid());
  auto id = nerve(identity_functor(z2), 2);
  CHECK(weak_equiv_certificate(id).ok());
  auto collapse = nerve(make_functor(z2, triv, {0}, {0, 0}), 2);
  auto c = weak_equiv_certificate(collapse);
  CHECK(c.pi0_bijection);
  CHECK_FALSE(c.invariants_equal);
  CHECK_FALSE(c.witness.empty());
  auto two = share(discrete_groupoid(2));
  auto one = share(discrete_groupoid(1));
  auto fold = weak_equiv_certificate(nerve(make_functor(two, one, {0, 0}, {0, 0}), 2));
  CHECK_FALSE(fold.pi0_bijection);
}

TEST_CASE("segal_pi0_law") {
  auto ng = nerve(cyclic_group(2).groupoid(), 2);
  auto nh = nerve(cyclic_group(3).groupoid(), 2);
  SUBCASE("connected factors") {
    auto r = segal_pi0_law(external_product(ng, nh));
    CHECK(r.passed());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("->") != std::string::npos);
  }
  SUBCASE("discrete factor with two points") {
    auto x = external_product(discrete_sset(2, 2), nh);
    auto r = segal_pi0_law(x);
    CHECK(r.passed());
    CHECK(pi0(total_diag(x)).class_count() == 2);
  }
  SUBCASE("K(A,2)") { CHECK(segal_pi0_law(k_a2_carrier(cyclic_group(2), 2, 2)).passed()); }
  SUBCASE("wrong arity") { CHECK(segal_pi0_law(ng).verdict() == Verdict::error); }
}

TEST_CASE("levelwise_equiv_to_diag") {
  auto ng = nerve(cyclic_group(2).groupoid(), 2);
  auto z3 = share(cyclic_group(3).groupoid());
  SUBCASE("identity") {
    auto t = id_map(external_product(ng, nerve(*z3, 2)));
    auto r = levelwise_equiv_to_diag(t, levelwise_certificates(t));
    CHECK(r.passed());
    CHECK_FALSE(r.not_checked.empty());
  }
  SUBCASE("group isomorphism on the second factor") {
    auto twist = nerve_map(make_functor(z3, z3, {0}, {0, 2, 1}), 2);
    auto t = external_product(id_map(ng), twist);
    auto r = levelwise_equiv_to_diag(t, levelwise_certificates(t));
    CHECK(r.passed());
  }
  SUBCASE("collapsing Z/2 fails its level-1 certificate") {
    auto t = k_a2_map(cyclic_group(2), FinGroup::trivial(), {0, 0}, 2, 2);
    auto certs = levelwise_certificates(t);
    CHECK(certs[0].certificate.ok());
    CHECK_FALSE(certs[1].certificate.ok());
    auto r = levelwise_equiv_to_diag(t, certs);
    CHECK(r.verdict() == Verdict::error);
    CHECK(r.to_text().find("outer level 1") != std::string::npos);
  }
  SUBCASE("missing certificate") {
    auto t = id_map(external_product(ng, ng));
    auto certs = levelwise_certificates(t);
    certs.pop_back();
    CHECK(levelwise_equiv_to_diag(t, certs).verdict() == Verdict::error);
  }
}

TEST_CASE("diag_fiber_product_check") {
  auto nh = nerve(cyclic_group(3).groupoid(), 2);
  SUBCASE("terminal target") {
    auto x = std::make_shared<const MultiSSet>(external_product(nerve(cyclic_group(2).groupoid(), 2), nh));
    auto z = std::make_shared<const MultiSSet>(terminal_multisset({2, 2}));
    std::vector<CellMap> levels;
    for (std::size_t l = 0; l < x->level_count(); ++l) levels.emplace_back(x->level_at(l).names.size(), 0);
    MultiSSetMap f(x, z, levels);
    std::string why;
    CHECK(diag_fiber_product_check(f, f, &why));
    CHECK(why.empty());
  }
  SUBCASE("pullback of Z/4 -> Z/2 <- Z/2 times a factor") {
    auto z4 = share(cyclic_group(4).groupoid());
    auto z2 = share(cyclic_group(2).groupoid());
    auto f1 = nerve_map(make_functor(z4, z2, {0}, {0, 1, 0, 1}), 2);
    auto f2 = nerve_map(identity_functor(z2), 2);
    auto idh = id_map(nh);
    CHECK(diag_fiber_product_check(external_product(f1, idh), external_product(f2, idh)));
  }
}

TEST_CASE("p_object and segal_report_for_P") {
  SUBCASE("lifted groupoid") {
    NGroupoid phi(lift_carrier(nerve(spread_group(cyclic_group(2), 2), 3), 3));
    REQUIRE(phi.valid());
    auto p = p_object(phi.carrier());
    CHECK(p.levels.size() == 4);
    CHECK(is_constant(*p.levels[0]));
    auto r = segal_report_for_P(phi);
    CHECK(r.passed());
  }
  SUBCASE("K(A,2)") {
    NGroupoid phi(k_a2_carrier(cyclic_group(2), 3, 3));
    REQUIRE(phi.valid());
    CHECK(segal_report_for_P(phi).passed());
  }
  SUBCASE("invalid carrier built on a 2-simplex") {
    NGroupoid phi(lift_carrier(standard_simplex(2, 3), 2));
    auto r = segal_report_for_P(phi);
    CHECK(r.verdict() == Verdict::error);
    CHECK(r.to_text().find("G2") != std::string::npos);
  }
  SUBCASE("arity 1 rejected") { CHECK_THROWS_AS(p_object(nerve(cyclic_group(2).groupoid(), 2)), std::invalid_argument); }
}
