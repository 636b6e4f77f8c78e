#include "doctest.h"
#include "ngpd/fp_group.hpp"
#include "ngpd/simplicial_set.hpp"
#include "oracle.hpp"

using namespace ngpd;

namespace {

const FinGroup& ref(const std::string& name) {
  for (const auto& g : reference_groups())
    if (g.name == name) return g.group;
  throw std::logic_error(name);
}

/// Copy of x with one face table entry replaced.
SimplicialSet with_face(const SimplicialSet& x, int k, int i, int cell, int image) {
  auto levels = x.levels();
  levels[k].face[0][i][cell] = image;
  return SimplicialSet(MultiSSet(x.dim_bounds(), levels));
}

SSetMap to_point(const SimplicialSet& x) {
  auto src = std::make_shared<const SimplicialSet>(x);
  auto pt = std::make_shared<const SimplicialSet>(standard_simplex(0, x.dim_bound()));
  std::vector<CellMap> levels;
  for (int k = 0; k <= x.dim_bound(); ++k) levels.emplace_back(x.cell_count(k), 0);
  return SSetMap(src, pt, levels);
}

SSetMap identity(const SimplicialSet& x) {
  return SSetMap::from_multi(MultiSSetMap::identity(std::make_shared<const MultiSSet>(x)));
}

}  // namespace

TEST_CASE("compose_monotone") {
  const auto id2 = MonotoneMap::identity(2);
  CHECK(compose_monotone(id2, id2) == id2);
  // delta_1: [1] -> [2] then sigma_0: [2] -> [1], evaluated pointwise.
  const auto a = compose_monotone(MonotoneMap::coface(2, 1), MonotoneMap::codegeneracy(1, 0));
  CHECK(a.values() == std::vector<int>{0, 1});
  CHECK(a.target_rank() == 1);
  // delta_0: [0] -> [1] sends 0 to 1; delta_2: [1] -> [2] fixes 1.
  const auto b = compose_monotone(MonotoneMap::coface(1, 0), MonotoneMap::coface(2, 2));
  CHECK(b.values() == std::vector<int>{1});
  CHECK(b.target_rank() == 2);
  CHECK_THROWS_AS(compose_monotone(MonotoneMap::coface(2, 0), MonotoneMap::coface(2, 0)), std::invalid_argument);
  // associativity on a sample triple
  const auto f = MonotoneMap::codegeneracy(2, 1), g = MonotoneMap::coface(3, 0), h = MonotoneMap::codegeneracy(2, 2);
  CHECK(compose_monotone(compose_monotone(f, g), h) == compose_monotone(f, compose_monotone(g, h)));
}

TEST_CASE("validate_sset") {
  CHECK(validate_sset(standard_simplex(1, 2)).ok());
  SUBCASE("swapped faces of the edge of Delta^1") {
    const auto x = standard_simplex(1, 2);
    const int e = x.find_cell(1, "01");
    const int v0 = x.face(1, 1, e), v1 = x.face(1, 0, e);
    const auto broken = with_face(with_face(x, 1, 0, e, v0), 1, 1, e, v1);
    const auto r = validate_sset(broken);
    REQUIRE_FALSE(r.ok());
    bool names_cell = false;
    for (const auto& v : r.violations) names_cell = names_cell || v.where.find("01") != std::string::npos;
    CHECK(names_cell);
  }
  SUBCASE("nerves of 4-morphism groupoids at D = 3") {
    CHECK(validate_sset(nerve(ref("C4").groupoid(), 3)).ok());
    CHECK(validate_sset(nerve(ref("C2xC2").groupoid(), 3)).ok());
    CHECK(validate_sset(nerve(spread_group(FinGroup::trivial(), 2), 3)).ok());
  }
  SUBCASE("small constructors") {
    CHECK(validate_sset(simplex_boundary(2, 3)).ok());
    CHECK(validate_sset(simplex_subcomplex(2, {{0, 1}, {1, 2}}, 3)).ok());
    CHECK(validate_sset(coproduct(standard_simplex(2, 2), discrete_sset(2, 2))).ok());
    CHECK(validate_sset(standard_simplex(3, 3)).ok());
  }
}

TEST_CASE("pi0") {
  CHECK(pi0(standard_simplex(1, 2)).class_count() == 1);
  CHECK(pi0(discrete_sset(2, 2)).class_count() == 2);
  CHECK_THROWS_WITH_AS(pi0(standard_simplex(1, 0)), "need 1-cells", std::invalid_argument);
  SUBCASE("{a ~ b} + {c}") {
    const auto g = disjoint_union(spread_group(FinGroup::trivial(), 2), discrete_groupoid(1));
    const auto x = nerve(g, 2);
    const auto p = pi0(x);
    CHECK(p.class_of == std::vector<int>{0, 0, 1});
    CHECK(p.representatives == std::vector<int>{0, 2});
    CHECK(p.class_count() == oracle::component_count(x));
  }
  SUBCASE("agrees with the breadth-first oracle") {
    for (const auto& x : {simplex_boundary(2, 2), coproduct(simplex_boundary(2, 2), discrete_sset(3, 2)),
                          simplex_subcomplex(3, {{0, 1}, {2, 3}}, 2)})
      CHECK(pi0(x).class_count() == oracle::component_count(x));
  }
}

TEST_CASE("fiber_product") {
  SUBCASE("over the point: products of cell counts") {
    const auto x = standard_simplex(1, 2), y = simplex_boundary(2, 2);
    const auto fp = fiber_product(to_point(x), to_point(y));
    for (int k = 0; k <= 2; ++k) CHECK(fp.object->cell_count(k) == x.cell_count(k) * y.cell_count(k));
    CHECK(validate_sset(*fp.object).ok());
  }
  SUBCASE("identity with identity is the diagonal") {
    const auto x = nerve(ref("C3").groupoid(), 2);
    const auto fp = fiber_product(identity(x), identity(x));
    CHECK(fp.pr1.as_multi().is_levelwise_bijective());
    CHECK(fp.pr2.as_multi().is_levelwise_bijective());
  }
  SUBCASE("N(C2) x_N(1) N(C2)") {
    const auto c2 = std::make_shared<const FinGroupoid>(ref("C2").groupoid());
    const auto one = std::make_shared<const FinGroupoid>(FinGroup::trivial().groupoid());
    const auto f = nerve(make_functor(c2, one, {0}, {0, 0}), 2);
    const auto fp = fiber_product(f, f);
    CHECK(fp.object->cell_count(1) == 4);
    CHECK(validate_sset(*fp.object).ok());
  }
  SUBCASE("target mismatch") {
    CHECK_THROWS_AS(fiber_product(identity(standard_simplex(1, 2)), identity(standard_simplex(2, 2))),
                    std::invalid_argument);
  }
}

TEST_CASE("segal_map") {
  SUBCASE("m = 1 is the identity on X_1") {
    const auto x = simplex_boundary(2, 2);
    const auto s = segal_map(x, 1);
    REQUIRE(s.map.size() == static_cast<std::size_t>(x.cell_count(1)));
    for (int e = 0; e < x.cell_count(1); ++e) {
      CHECK(s.spine_tuples[s.map[e]] == std::vector<int>{e});
    }
    CHECK(s.bijective());
  }
  SUBCASE("N(C2), m = 2") {
    const auto s = segal_map(nerve(ref("C2").groupoid(), 3), 2);
    CHECK(s.source_size == 4);
    CHECK(s.spine_tuples.size() == 4);
    CHECK(s.bijective());
  }
  SUBCASE("horn: a spine pair without filler") {
    const auto s = segal_map(simplex_subcomplex(2, {{0, 1}, {1, 2}}, 2), 2);
    CHECK_FALSE(s.surjective());
    CHECK(s.unfilled().has_value());
  }
  SUBCASE("boundary of Delta^3 at m = 3") {
    CHECK_FALSE(segal_map(simplex_boundary(3, 3), 3).surjective());
  }
  CHECK_THROWS_WITH_AS(segal_map(standard_simplex(1, 2), 3), "level not stored", std::out_of_range);
  CHECK_THROWS_AS(segal_map(standard_simplex(1, 2), 0), std::invalid_argument);
}

TEST_CASE("is_nerve_of_groupoid") {
  SUBCASE("N(C2) at D = 3 reconstructs C2") {
    const auto r = is_nerve_of_groupoid(nerve(ref("C2").groupoid(), 3));
    CHECK(r.is_nerve);
    REQUIRE(r.groupoid.has_value());
    CHECK(oracle::groupoids_isomorphic(*r.groupoid, ref("C2").groupoid()));
  }
  SUBCASE("Delta^2: Segal holds, inverses missing") {
    const auto x = standard_simplex(2, 3);
    for (int m = 2; m <= 3; ++m) CHECK(segal_map(x, m).bijective());
    const auto r = is_nerve_of_groupoid(x);
    CHECK_FALSE(r.is_nerve);
    REQUIRE_FALSE(r.failures.empty());
    bool inverse = false;
    for (const auto& f : r.failures) inverse = inverse || f.find("invers") != std::string::npos;
    CHECK(inverse);
  }
  SUBCASE("discrete on 3 vertices") {
    const auto r = is_nerve_of_groupoid(discrete_sset(3, 3));
    CHECK(r.is_nerve);
    REQUIRE(r.groupoid.has_value());
    CHECK(r.groupoid->object_count() == 3);
    CHECK(r.groupoid->morphism_count() == 3);
  }
  SUBCASE("dim_bound below 3 is reported") {
    const auto r = is_nerve_of_groupoid(nerve(ref("C2").groupoid(), 2));
    CHECK_FALSE(r.is_nerve);
    CHECK_FALSE(r.failures.empty());
  }
}

TEST_CASE("edge_path_groupoid and vertex_group") {
  SUBCASE("boundary of Delta^2") {
    const auto p = edge_path_groupoid(simplex_boundary(2, 2));
    CHECK(p.generators.size() == 3);
    CHECK(p.relators.empty());
    CHECK(validate_fp_groupoid(p).ok());
    for (int v = 0; v < 3; ++v) {
      const auto g = vertex_group(p, v);
      CHECK(g.generator_count() == 1);  // E - V + 1
      CHECK(g.relators.empty());
      CHECK(abelianization(g) == AbelianInvariants{1, {}});
    }
  }
  SUBCASE("Delta^2") {
    const auto p = edge_path_groupoid(standard_simplex(2, 2));
    CHECK(p.generators.size() == 3);
    CHECK(p.relators.size() == 1);
    const auto g = vertex_group(p, 0);
    CHECK(g.generator_count() == 1);
    CHECK(g.relators.size() == 1);
    CHECK(abelianization(g) == AbelianInvariants{0, {}});
  }
  SUBCASE("N(C3) at D = 2") {
    const auto x = nerve(ref("C3").groupoid(), 2);
    const auto p = edge_path_groupoid(x);
    CHECK(p.generators.size() == 2);
    CHECK(p.relators.size() == 4);
    CHECK(abelianization(vertex_group(p, 0)) == AbelianInvariants{0, {3}});
  }
  SUBCASE("a discrete component has trivial vertex group") {
    const auto p = edge_path_groupoid(coproduct(simplex_boundary(2, 2), discrete_sset(1, 2)));
    const auto g = vertex_group(p, 3);
    CHECK(g.generator_count() == 0);
    CHECK(group_invariants(g).trivial());
  }
  CHECK_THROWS_WITH_AS(edge_path_groupoid(standard_simplex(1, 1)), "relations need 2-cells", std::invalid_argument);
  CHECK_THROWS_AS(vertex_group(edge_path_groupoid(standard_simplex(1, 2)), 5), std::out_of_range);
}

TEST_CASE("total_diag of an arity-1 object is the object") {
  const auto x = nerve(ref("S3").groupoid(), 2);
  CHECK(static_cast<const MultiSSet&>(total_diag(x)) == static_cast<const MultiSSet&>(x));
}
