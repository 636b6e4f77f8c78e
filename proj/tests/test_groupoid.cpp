#include <set>

#include "doctest.h"
#include "ngpd/corpus.hpp"
#include "ngpd/fp_group.hpp"
#include "ngpd/groupoid.hpp"
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

std::shared_ptr<const FinGroupoid> share(FinGroupoid g) { return std::make_shared<const FinGroupoid>(std::move(g)); }

Word word(std::initializer_list<int> letters) {
  // positive k is generator k-1, negative its inverse
  Word w;
  for (int l : letters) w.push_back({std::abs(l) - 1, l < 0});
  return w;
}

FpGroup presentation(int generators, std::vector<Word> relators) {
  FpGroup p;
  for (int i = 0; i < generators; ++i) p.generators.push_back(std::string(1, static_cast<char>('a' + i)));
  p.relators = std::move(relators);
  return p;
}

/// Independent count: every assignment of generators, relators evaluated
/// left to right.
std::int64_t brute_hom_count(const FpGroup& p, const FinGroup& t) {
  const int n = p.generator_count(), order = t.order();
  std::vector<int> image(n, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : p.relators) {
      int acc = t.unit();
      for (const auto& l : r) acc = t.mul(l.inverse ? t.inv(image[l.generator]) : image[l.generator], acc);
      ok = ok && acc == t.unit();
    }
    count += ok;
    int i = 0;
    while (i < n && ++image[i] == order) image[i++] = 0;
    if (i == n) return count;
  }
}

}  // namespace

TEST_CASE("validate_groupoid") {
  CHECK(validate_groupoid(ref("C2").groupoid()).ok());
  SUBCASE("broken associativity is named") {
    const FinGroupoid& c3 = ref("C3").groupoid();
    auto table = c3.composition_table();
    // elements 0 = e, 1 = a, 2 = a^2: claim a o a = e
    const int m = c3.morphism_count();
    table[1 * m + 1] = 0;
    const FinGroupoid broken(c3.objects(), c3.morphisms(), table, c3.identities(), c3.inverses());
    const auto r = validate_groupoid(broken);
    REQUIRE_FALSE(r.ok());
    bool assoc = false;
    for (const auto& v : r.violations) assoc = assoc || v.rule.find("associativ") != std::string::npos;
    CHECK(assoc);
  }
  SUBCASE("every corpus groupoid is valid") {
    for (const auto& g : build_corpus(0, SizeClass::medium).groupoids) CHECK_MESSAGE(validate_groupoid(g.groupoid).ok(), g.name);
  }
  SUBCASE("constructed groups") {
    for (const auto& g : reference_groups()) CHECK_MESSAGE(validate_groupoid(g.group.groupoid()).ok(), g.name);
    CHECK(validate_groupoid(product_groupoid(ref("S3").groupoid(), spread_group(ref("C2"), 2))).ok());
  }
}

TEST_CASE("reference groups") {
  const std::vector<std::pair<std::string, int>> orders = {{"1", 1},  {"C2", 2}, {"C3", 3},   {"C4", 4},    {"C2xC2", 4},
                                                           {"C5", 5}, {"C6", 6}, {"S3", 6},   {"C7", 7},    {"C8", 8},
                                                           {"C4xC2", 8}, {"C2^3", 8}, {"D4", 8}, {"Q8", 8}};
  REQUIRE(reference_groups().size() == orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    CHECK(reference_groups()[i].name == orders[i].first);
    CHECK(reference_groups()[i].group.order() == orders[i].second);
  }
  CHECK_FALSE(ref("S3").is_abelian());
  CHECK_FALSE(ref("D4").is_abelian());
  CHECK_FALSE(ref("Q8").is_abelian());
  CHECK(ref("C4xC2").is_abelian());
  CHECK(oracle::is_commutative(ref("C2^3")));
  CHECK_FALSE(oracle::is_commutative(ref("Q8")));
}

TEST_CASE("nerve") {
  SUBCASE("one object, |G| = 2") {
    const auto x = nerve(ref("C2").groupoid(), 3);
    CHECK(x.cell_count(0) == 1);
    CHECK(x.cell_count(1) == 2);
    CHECK(x.cell_count(2) == 4);
    CHECK(x.cell_count(3) == 8);
  }
  SUBCASE("discrete on 3 objects") {
    const auto x = nerve(discrete_groupoid(3), 3);
    for (int k = 0; k <= 3; ++k) CHECK(x.cell_count(k) == 3);
  }
  SUBCASE("chains agree with brute force") {
    const auto g = disjoint_union(spread_group(ref("C2"), 2), ref("C3").groupoid());
    for (int k = 1; k <= 3; ++k) CHECK(composable_chains(g, k) == oracle::brute_force_chains(g, k));
  }
  SUBCASE("reconstruction is isomorphic") {
    for (const auto& g : build_corpus(0, SizeClass::small).groupoids) {
      const auto r = is_nerve_of_groupoid(nerve(g.groupoid, 3));
      REQUIRE_MESSAGE(r.groupoid.has_value(), g.name);
      CHECK_MESSAGE(oracle::groupoids_isomorphic(*r.groupoid, g.groupoid), g.name);
    }
  }
  CHECK_THROWS_AS(nerve(ref("C2").groupoid(), 0), std::invalid_argument);
  SUBCASE("names join morphisms with |") {
    const auto x = nerve(ref("C2").groupoid(), 2);
    const std::string n = x.name(2, 3);
    CHECK(n.find('|') != std::string::npos);
  }
}

TEST_CASE("iso_classes") {
  CHECK(iso_classes(spread_group(ref("C2"), 3)).class_count() == 1);
  CHECK(iso_classes(discrete_groupoid(4)).class_count() == 4);
  for (const auto& g : build_corpus(0, SizeClass::small).groupoids) {
    CHECK_MESSAGE(iso_classes(g.groupoid) == pi0(nerve(g.groupoid, 1)), g.name);
    CHECK_MESSAGE(iso_classes(g.groupoid) == pi0(nerve(g.groupoid, 2)), g.name);
    const auto labels = oracle::groupoid_components(g.groupoid);
    CHECK(iso_classes(g.groupoid).class_count() == static_cast<int>(std::set<int>(labels.begin(), labels.end()).size()));
  }
}

TEST_CASE("automorphism_group") {
  CHECK(automorphism_group(discrete_groupoid(3), 1).order() == 1);
  const auto c3 = automorphism_group(ref("C3").groupoid(), 0);
  CHECK(groups_isomorphic(c3, ref("C3")));
  SUBCASE("stabiliser in an action groupoid") {
    const auto g = action_groupoid(ref("C4"), 2, [](int a, int x) { return (x + a) % 2; });
    const auto aut = automorphism_group(g, 0);
    CHECK(aut.order() == static_cast<int>(oracle::endomorphisms(g, 0).size()));
    CHECK(aut.order() == 2);
  }
}

TEST_CASE("is_equivalence") {
  SUBCASE("skeleton inclusion") {
    const auto pair = share(spread_group(ref("C2"), 2));
    const auto skeleton = share(ref("C2").groupoid());
    // loops at object 0 of the spread groupoid, identity first
    std::vector<int> mor = pair->hom(0, 0);
    REQUIRE(mor.size() == 2);
    if (mor[0] != pair->identity(0)) std::swap(mor[0], mor[1]);
    const auto inc = make_functor(skeleton, pair, {0}, mor);
    REQUIRE(validate_functor(inc).ok());
    CHECK(is_equivalence(inc).equivalent);
  }
  SUBCASE("C2 -> 1 fails on Hom") {
    const auto f = make_functor(share(ref("C2").groupoid()), share(FinGroup::trivial().groupoid()), {0}, {0, 0});
    const auto r = is_equivalence(f);
    CHECK_FALSE(r.equivalent);
    CHECK(r.witness.find("Hom") != std::string::npos);
  }
  SUBCASE("not essentially surjective") {
    const auto f = make_functor(share(FinGroup::trivial().groupoid()), share(discrete_groupoid(2)), {0}, {0});
    CHECK_FALSE(is_equivalence(f).equivalent);
  }
  SUBCASE("agreement with the quasi-inverse oracle on small groupoids") {
    const std::vector<FinGroupoid> gs = {FinGroup::trivial().groupoid(), ref("C2").groupoid(), discrete_groupoid(2),
                                         spread_group(FinGroup::trivial(), 2), ref("C3").groupoid(),
                                         disjoint_union(spread_group(FinGroup::trivial(), 2), discrete_groupoid(1))};
    int functors = 0, equivalences = 0;
    for (const auto& a : gs) {
      for (const auto& b : gs) {
        const auto sa = share(a), sb = share(b);
        for (const auto& raw : oracle::all_functors(a, b)) {
          const auto f = make_functor(sa, sb, raw.objects, raw.morphisms);
          const bool got = is_equivalence(f).equivalent;
          CHECK(got == oracle::has_quasi_inverse(a, b, raw));
          ++functors;
          equivalences += got;
        }
      }
    }
    CHECK(functors > 50);
    CHECK(equivalences > 5);
  }
  SUBCASE("identities, composition, 2-out-of-3") {
    const auto a = share(spread_group(ref("C2"), 2)), b = share(ref("C2").groupoid());
    CHECK(is_equivalence(identity_functor(a)).equivalent);
    std::vector<int> mor;
    for (int f = 0; f < a->morphism_count(); ++f) mor.push_back(f % 2);
    const auto collapse = make_functor(a, b, {0, 0}, mor);
    REQUIRE(validate_functor(collapse).ok());
    const auto back = make_functor(b, a, {0}, {0, 1});
    REQUIRE(validate_functor(back).ok());
    const bool e1 = is_equivalence(collapse).equivalent, e2 = is_equivalence(back).equivalent;
    const bool e12 = is_equivalence(compose(collapse, back)).equivalent;
    CHECK(e1);
    CHECK(e2);
    CHECK(e12);
    // 2-out-of-3 with a non-equivalence: composing with C2 -> 1 stays a non-equivalence
    const auto kill = make_functor(b, share(FinGroup::trivial().groupoid()), {0}, {0, 0});
    CHECK_FALSE(is_equivalence(compose(collapse, kill)).equivalent);
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(presentation(1, {})) == AbelianInvariants{1, {}});
  CHECK(abelianization(presentation(1, {word({1, 1})})) == AbelianInvariants{0, {2}});
  CHECK(abelianization(presentation(2, {word({1, 2, -1, -2}), word({1, 1, 1, 2, 2, 2})})) == AbelianInvariants{1, {3}});
  CHECK(invariant_factors({{0, 0}, {3, 3}}) == std::vector<std::int64_t>{3});
  CHECK(invariant_factors({{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
  CHECK(invariant_factors({{4, 6}, {6, 4}}) == std::vector<std::int64_t>{2, 10});
  SUBCASE("table presentations recover the abelianization") {
    CHECK(abelianization(table_presentation(ref("C4xC2"))) == AbelianInvariants{0, {2, 4}});
    CHECK(abelianization(table_presentation(ref("S3"))) == AbelianInvariants{0, {2}});
    CHECK(abelianization(table_presentation(ref("Q8"))) == AbelianInvariants{0, {2, 2}});
    CHECK(abelianization(table_presentation(ref("C6"))) == AbelianInvariants{0, {6}});
  }
}

TEST_CASE("hom_count") {
  CHECK(hom_count(presentation(1, {}), ref("C2")) == 2);
  CHECK(hom_count(presentation(1, {word({1, 1})}), ref("C3")) == 1);
  CHECK(hom_count(presentation(1, {word({1, 1})}), ref("C2")) == 2);
  SUBCASE("brute force agreement") {
    const std::vector<FpGroup> ps = {presentation(2, {word({1, 2, -1, -2})}), presentation(2, {word({1, 1}), word({2, 2, 2}), word({1, 2, 1, 2})}),
                                     presentation(2, {word({1, 1, 1, 1}), word({1, 1, -2, -2}), word({-2, 1, 2, 1})})};
    for (const auto& p : ps)
      for (const auto& t : reference_groups()) CHECK_MESSAGE(hom_count(p, t.group) == brute_hom_count(p, t.group), t.name);
  }
  SUBCASE("S3 into S3 via its table presentation") { CHECK(hom_count(table_presentation(ref("S3")), ref("S3")) == 10); }
}

TEST_CASE("group invariants survive Tietze moves") {
  const FpGroup base = presentation(2, {word({1, 1, 1}), word({2, 2}), word({2, 1, -2, 1})});  // S3
  // add generator c with relator c = ab
  FpGroup more = base;
  more.generators.push_back("c");
  more.relators.push_back(word({3, -2, -1}));
  // add a consequence: a conjugate of an existing relator
  FpGroup conj = base;
  conj.relators.push_back(word({2, 1, 1, 1, -2}));
  const auto inv = group_invariants(base);
  CHECK(group_invariants(more) == inv);
  CHECK(group_invariants(conj) == inv);
  CHECK(inv == group_invariants(table_presentation(ref("S3"))));
  CHECK_FALSE(inv == group_invariants(table_presentation(ref("C6"))));
}

TEST_CASE("free_reduce and invert") {
  CHECK(free_reduce(word({1, 2, -2, -1, 3})) == word({3}));
  CHECK(invert(word({1, -2})) == word({2, -1}));
  CHECK(free_reduce(word({})).empty());
}
