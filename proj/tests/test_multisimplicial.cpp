#include "doctest.h"
#include "ngpd/groupoid.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/ngroupoid.hpp"
#include "ngpd/simplicial_set.hpp"
#include "oracle.hpp"

using namespace ngpd;

namespace {

const FinGroup& ref(const std::string& name) {
  for (const auto& g : reference_groups())
    if (g.name == name) return g.group;
  throw std::logic_error(name);
}

const MultiSSet& base(const SimplicialSet& x) { return x; }

MultiSSet with_face(const MultiSSet& x, const MultiIndex& at, int axis, int i, int cell, int image) {
  auto levels = x.levels();
  levels[x.flat_index(at)].face[axis][i][cell] = image;
  return MultiSSet(x.dim_bounds(), levels);
}

std::shared_ptr<const MultiSSet> share(MultiSSet x) { return std::make_shared<const MultiSSet>(std::move(x)); }

}  // namespace

TEST_CASE("validate_multisset") {
  const auto n = nerve(ref("C2").groupoid(), 1);
  const auto x = external_product(nerve(ref("C2").groupoid(), 2), n);
  CHECK(validate_multisset(x).ok());
  SUBCASE("broken cross-axis commutation names the axis pair") {
    const int id = n.degen(0, 0, 0), g = 1 - id;
    // cell (g, g) at (1,1): axis-1 d0 should give (g, *); claim (id, *). With one
    // object only the axis-0 degeneracies notice.
    const int cell = g * n.cell_count(1) + g;
    REQUIRE(x.name({1, 1}, cell).find(n.name(1, g)) != std::string::npos);
    const int wrong = id * n.cell_count(0);
    const auto broken = with_face(x, {1, 1}, 1, 0, cell, wrong);
    const auto r = validate_multisset(broken);
    REQUIRE_FALSE(r.ok());
    for (const auto& v : r.violations) CHECK(v.rule.rfind("axes 0,1", 0) == 0);
  }
  SUBCASE("a wrong face breaks the per-axis identities") {
    const auto d = standard_simplex(2, 2);
    const int top = d.find_cell(2, "012");
    const auto broken = with_face(d, {2}, 0, 0, top, d.find_cell(1, "01"));
    const auto r = validate_multisset(broken);
    REQUIRE_FALSE(r.ok());
    bool face_rule = false;
    for (const auto& v : r.violations) face_rule = face_rule || v.rule.rfind("d0:", 0) == 0;
    CHECK(face_rule);
  }
  CHECK(validate_multisset(k_a2_carrier(ref("C3"), 2, 2)).ok());
  CHECK(validate_multisset(terminal_multisset({2, 1, 1})).ok());
}

TEST_CASE("external_product") {
  const auto a = nerve(ref("C2").groupoid(), 2), b = nerve(spread_group(ref("C3"), 2), 2);
  const auto x = external_product(a, b);
  CHECK(x.arity() == 2);
  CHECK(x.cell_count({1, 1}) == a.cell_count(1) * b.cell_count(1));
  CHECK(external_product(nerve(ref("C2").groupoid(), 1), nerve(ref("C2").groupoid(), 1)).cell_count({1, 1}) == 4);
  for (const auto& m : all_indices(x.dim_bounds())) CHECK(x.cell_count(m) == a.cell_count(m[0]) * b.cell_count(m[1]));
  SUBCASE("of maps") {
    const auto ia = MultiSSetMap::identity(share(a)), ib = MultiSSetMap::identity(share(b));
    const auto f = external_product(ia, ib);
    CHECK(f.is_levelwise_bijective());
    CHECK(validate_map(f).ok());
  }
}

TEST_CASE("total_diag of N(G) x N(H) is N(G x H)") {
  const std::vector<std::pair<FinGroupoid, FinGroupoid>> pairs = {
      {ref("C2").groupoid(), ref("C3").groupoid()},
      {spread_group(ref("C2"), 2), discrete_groupoid(2)},
      {ref("S3").groupoid(), spread_group(FinGroup::trivial(), 3)}};
  for (const auto& [g, h] : pairs) {
    const auto d = total_diag(external_product(nerve(g, 3), nerve(h, 3)));
    CHECK(validate_sset(d).ok());
    CHECK(oracle::diag_product_mismatch(g, h, 3, d).empty());
    for (int k = 0; k <= 3; ++k) CHECK(d.cell_count(k) == nerve(product_groupoid(g, h), 3).cell_count(k));
  }
}

TEST_CASE("iterated pairwise_diag equals total_diag") {
  const auto x = external_product(external_product(nerve(ref("C2").groupoid(), 2), nerve(ref("C3").groupoid(), 2)),
                                  nerve(spread_group(FinGroup::trivial(), 2), 2));
  REQUIRE(x.arity() == 3);
  const auto once = pairwise_diag(x);
  CHECK(once.arity() == 2);
  CHECK(validate_multisset(once).ok());
  CHECK(base(total_diag(pairwise_diag(once))) == base(total_diag(x)));
  CHECK(base(total_diag(once)) == base(total_diag(x)));
}

TEST_CASE("outer_level and permute_axes") {
  const auto a = nerve(ref("C2").groupoid(), 2), b = nerve(ref("C3").groupoid(), 1);
  const auto x = external_product(a, b);
  for (int m = 0; m <= 2; ++m) {
    const auto l = outer_level(x, m);
    CHECK(l.arity() == 1);
    CHECK(validate_multisset(l).ok());
    for (int k = 0; k <= 1; ++k) CHECK(l.cell_count({k}) == a.cell_count(m) * b.cell_count(k));
  }
  const auto p = permute_axes(x, {1, 0});
  CHECK(p.dim_bounds() == std::vector<int>{1, 2});
  CHECK(validate_multisset(p).ok());
  CHECK(p.cell_count({1, 2}) == x.cell_count({2, 1}));
  CHECK(permute_axes(p, {1, 0}) == x);
  CHECK_THROWS_AS(permute_axes(x, {0, 0}), std::invalid_argument);
}

TEST_CASE("outer tower and Segal maps") {
  const auto x = lift_carrier(nerve(ref("C2").groupoid(), 3), 2);
  const auto t = outer_tower(x);
  CHECK(t.levels.size() == 4);
  for (int m = 1; m <= 3; ++m) {
    REQUIRE(t.face[m].size() == static_cast<std::size_t>(m + 1));
    for (const auto& f : t.face[m]) CHECK(validate_map(f).ok());
  }
  CHECK(outer_segal_map(x, 1).is_levelwise_bijective());
  // x is a nerve lifted by a constant axis, so every outer Segal map is bijective
  for (int m = 2; m <= 3; ++m) CHECK(outer_segal_map(x, m).is_levelwise_bijective());
  CHECK(spine_product(x, 2).cell_count({0}) == 4);
}

TEST_CASE("pi0_innermost and T_power") {
  SUBCASE("lifted carrier truncates back to the base") {
    const auto n = nerve(spread_group(ref("C2"), 2), 2);
    const auto t = pi0_innermost(lift_carrier(n, 2));
    CHECK(t.dim_bounds() == n.dim_bounds());
    for (int k = 0; k <= 2; ++k) CHECK(t.cell_count({k}) == n.cell_count(k));
    CHECK(validate_multisset(t).ok());
  }
  SUBCASE("innermost pi_0 of X x N(G) has |X_m| * |pi_0 G| cells") {
    const auto g = disjoint_union(ref("C3").groupoid(), spread_group(FinGroup::trivial(), 2));
    const auto x = external_product(nerve(ref("C2").groupoid(), 2), nerve(g, 1));
    const auto t = pi0_innermost(x);
    for (int m = 0; m <= 2; ++m) CHECK(t.cell_count({m}) == nerve(ref("C2").groupoid(), 2).cell_count(m) * 2);
  }
  SUBCASE("K(A,2) is connected") {
    for (const auto* name : {"C2", "C3"}) {
      const auto p = T_power(k_a2_carrier(ref(name), 2, 2), 2);
      CHECK(p.arity() == 0);
      CHECK(p.cell_count({}) == 1);
    }
  }
  SUBCASE("T_power of a discrete object keeps its points") {
    const auto d = lift_carrier(discrete_sset(3, 2), 2);
    CHECK(T_power(d, 2).cell_count({}) == 3);
  }
  CHECK_THROWS_AS(pi0_innermost(MultiSSet()), std::invalid_argument);
}

TEST_CASE("functoriality of T and diag") {
  // C2 -> C4, a -> a^2; C4 -> C2, reduction mod 2
  const auto f = k_a2_map(ref("C2"), ref("C4"), {0, 2}, 2, 2);
  const auto g = k_a2_map(ref("C4"), ref("C2"), {0, 1, 0, 1}, 2, 2);
  const auto gf = compose(f, g);
  CHECK(validate_map(gf).ok());
  CHECK(truncate_map(gf) == compose(truncate_map(f), truncate_map(g)));
  CHECK(T_power_map(gf, 2) == compose(T_power_map(f, 2), T_power_map(g, 2)));
  const auto dgf = total_diag(gf), df = total_diag(f), dg = total_diag(g);
  CHECK(dgf.as_multi() == compose(df.as_multi(), dg.as_multi()));
  const auto id = MultiSSetMap::identity(f.source);
  CHECK(truncate_map(id).is_levelwise_bijective());
  CHECK(truncate_map(id) == MultiSSetMap::identity(truncate_map(id).source));
  CHECK_THROWS_AS(k_a2_map(ref("C2"), ref("C3"), {0, 1}, 2, 2), std::invalid_argument);
}

TEST_CASE("products, coproducts and constants") {
  const auto a = base(nerve(ref("C2").groupoid(), 2)), b = base(simplex_boundary(2, 2));
  const auto p = levelwise_product(a, b);
  const auto c = coproduct(a, b);
  CHECK(validate_multisset(p).ok());
  CHECK(validate_multisset(c).ok());
  for (int k = 0; k <= 2; ++k) {
    CHECK(p.cell_count({k}) == a.cell_count({k}) * b.cell_count({k}));
    CHECK(c.cell_count({k}) == a.cell_count({k}) + b.cell_count({k}));
  }
  CHECK(c.name({0}, 0).rfind("0.", 0) == 0);
  const auto k = constant_multisset({1, 2}, {"p", "q"});
  CHECK(is_constant(k));
  CHECK(validate_multisset(k).ok());
  CHECK_FALSE(is_constant(a));
  const auto t = share(terminal_multisset({2}));
  const auto to_t = [&](const MultiSSet& x) {
    std::vector<CellMap> levels;
    for (std::size_t f = 0; f < x.level_count(); ++f) levels.emplace_back(x.level_at(f).names.size(), 0);
    return MultiSSetMap(share(x), t, levels);
  };
  const auto fp = fiber_product(to_t(a), to_t(b));
  for (int j = 0; j <= 2; ++j) CHECK(fp.object->cell_count({j}) == p.cell_count({j}));
  CHECK(validate_map(fp.pr1).ok());
}
