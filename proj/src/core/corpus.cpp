#include "ngpd/corpus.hpp"

#include <algorithm>
#include <random>

#include "ngpd/ngroupoid.hpp"

namespace ngpd {

namespace {

constexpr int kNerveBound = 2;     // simplicial-set fixtures
constexpr int kBisimplicial = 2;   // bounds of the bisimplicial fixtures
constexpr int kCarrierBound = 3;   // bounds of the 2-groupoid carriers
constexpr int kRandomSmall = 6;
constexpr int kRandomMedium = 16;
constexpr int kRandomPairsSmall = 3;
constexpr int kRandomPairsMedium = 6;
constexpr std::size_t kPullbackLevelCap = 256;  // self-pullbacks square the level size

std::shared_ptr<const FinGroupoid> share(FinGroupoid g) { return std::make_shared<const FinGroupoid>(std::move(g)); }

const FinGroup& group(const std::string& name) {
  for (const auto& g : reference_groups())
    if (g.name == name) return g.group;
  throw std::logic_error("corpus: unknown group " + name);
}

FinGroupoid spread(const std::string& name, int objects) { return spread_group(group(name), objects); }

MultiSSetMap to_terminal(const MultiSSet& x) {
  auto src = std::make_shared<const MultiSSet>(x);
  auto tgt = std::make_shared<const MultiSSet>(terminal_multisset(x.dim_bounds()));
  std::vector<CellMap> levels;
  for (std::size_t l = 0; l < x.level_count(); ++l) levels.emplace_back(x.level_at(l).names.size(), 0);
  return MultiSSetMap(src, tgt, std::move(levels));
}

std::vector<NamedGroupoid> random_groupoids(std::mt19937_64& rng, int count, int max_morphisms) {
  auto draw = [&](std::uint64_t n) { return static_cast<int>(rng() % n); };
  const auto& groups = reference_groups();
  std::vector<NamedGroupoid> out;
  for (int i = 0; i < count; ++i) {
    while (true) {
      const int pieces = 1 + draw(2);
      std::string name = "random" + std::to_string(i) + ":";
      FinGroupoid g;
      bool first = true;
      for (int p = 0; p < pieces; ++p) {
        int gi, k;
        do {
          gi = draw(groups.size());
          k = 1 + draw(3);
        } while (groups[gi].group.order() * k * k > max_morphisms);
        FinGroupoid piece = spread_group(groups[gi].group, k);
        name += (first ? "" : "+") + groups[gi].name + "@" + std::to_string(k);
        g = first ? piece : disjoint_union(g, piece);
        first = false;
      }
      if (g.morphism_count() <= max_morphisms && g.object_count() <= 5) {
        out.push_back({name, std::move(g)});
        break;
      }
    }
  }
  return out;
}

const FinGroupoid& find(const std::vector<NamedGroupoid>& gs, const std::string& name) {
  for (const auto& g : gs)
    if (g.name == name) return g.groupoid;
  throw std::logic_error("corpus: unknown groupoid " + name);
}

}  // namespace

const char* to_string(SizeClass s) { return s == SizeClass::small ? "small" : "medium"; }

std::optional<SizeClass> parse_size_class(std::string_view s) {
  if (s == "small") return SizeClass::small;
  if (s == "medium") return SizeClass::medium;
  return std::nullopt;
}

Corpus build_corpus(std::uint64_t seed, SizeClass size) {
  Corpus c;
  c.seed = seed;
  c.size = size;

  // --- groupoids -------------------------------------------------------------
  auto& gs = c.groupoids;
  for (const char* name : {"1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C2^3"}) gs.push_back({name, group(name).groupoid()});
  gs.push_back({"discrete3", discrete_groupoid(3)});
  gs.push_back({"pair", spread("1", 2)});
  gs.push_back({"pair+point", disjoint_union(spread("1", 2), discrete_groupoid(1))});
  gs.push_back({"C2@2", spread("C2", 2)});
  gs.push_back({"C3@2", spread("C3", 2)});
  gs.push_back({"triple", spread("1", 3)});
  gs.push_back({"C2+C3", disjoint_union(group("C2").groupoid(), group("C3").groupoid())});
  gs.push_back({"C4-on-2", action_groupoid(group("C4"), 2, [](int g, int x) { return (x + g) % 2; })});
  gs.push_back({"C2xC2@2", spread("C2xC2", 2)});
  gs.push_back({"C2@2+C2", disjoint_union(spread("C2", 2), group("C2").groupoid())});
  gs.push_back({"discrete2+C3", disjoint_union(discrete_groupoid(2), group("C3").groupoid())});
  std::mt19937_64 rng(seed);
  for (auto& r : random_groupoids(rng, size == SizeClass::small ? kRandomSmall : kRandomMedium, 16)) gs.push_back(std::move(r));

  // --- functors ----------------------------------------------------------------
  auto g = [&](const std::string& n) { return share(find(gs, n)); };
  auto add_functor = [&](std::string name, std::shared_ptr<const FinGroupoid> s, std::shared_ptr<const FinGroupoid> t,
                         std::vector<int> obj, std::vector<int> mor) {
    c.functors.push_back({std::move(name), make_functor(s, t, std::move(obj), std::move(mor))});
  };
  add_functor("C2->1", g("C2"), g("1"), {0}, {0, 0});
  add_functor("1->C2", g("1"), g("C2"), {0}, {0});
  add_functor("C3-negate", g("C3"), g("C3"), {0}, {0, 2, 1});
  add_functor("pair->1", g("pair"), g("1"), {0, 0}, {0, 0, 0, 0});
  add_functor("C2->C2@2", g("C2"), g("C2@2"), {0}, {0, 1});
  {
    std::vector<int> mor;
    for (int m = 0; m < g("C2@2")->morphism_count(); ++m) mor.push_back(m % 2);
    add_functor("C2@2->C2", g("C2@2"), g("C2"), {0, 0}, mor);
  }
  add_functor("discrete2->1", share(discrete_groupoid(2)), g("1"), {0, 0}, {0, 0});
  add_functor("1->discrete2", g("1"), share(discrete_groupoid(2)), {0}, {0});
  add_functor("C4->C2", g("C4"), g("C2"), {0}, {0, 1, 0, 1});

  // --- simplicial sets -----------------------------------------------------------
  for (const auto& ng : gs) c.ssets.push_back({"N(" + ng.name + ")", nerve(ng.groupoid, kNerveBound), ng.groupoid, false});
  c.ssets.push_back({"point", standard_simplex(0, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"interval", standard_simplex(1, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"triangle", standard_simplex(2, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"tetrahedron", standard_simplex(3, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"horn", simplex_subcomplex(2, {{0, 1}, {1, 2}}, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"discrete3", discrete_sset(3, kNerveBound), std::nullopt, true});
  c.ssets.push_back({"two-edges", coproduct(standard_simplex(1, kNerveBound), standard_simplex(1, kNerveBound)),
                     std::nullopt, true});
  c.ssets.push_back({"circle", simplex_boundary(2, kNerveBound), std::nullopt, false});
  c.ssets.push_back({"circle+point", coproduct(simplex_boundary(2, kNerveBound), discrete_sset(1, kNerveBound)),
                     std::nullopt, false});

  // --- bisimplicial objects ----------------------------------------------------------
  const int B = kBisimplicial;
  auto N = [&](const std::string& n) { return nerve(find(gs, n), B); };
  auto& bi = c.bisimplicial;
  bi.push_back({"N(C2)xN(C3)", external_product(N("C2"), N("C3"))});
  bi.push_back({"discrete2xN(C3)", external_product(discrete_sset(2, B), N("C3"))});
  bi.push_back({"N(pair+point)xN(C2)", external_product(N("pair+point"), N("C2"))});
  bi.push_back({"N(C2)xdiscrete2", external_product(N("C2"), discrete_sset(2, B))});
  bi.push_back({"circlexN(C2)", external_product(simplex_boundary(2, B), N("C2"))});
  bi.push_back({"intervalxinterval", external_product(standard_simplex(1, B), standard_simplex(1, B))});
  bi.push_back({"K(C2,2)", k_a2_carrier(group("C2"), B, B)});
  bi.push_back({"K(C3,2)", k_a2_carrier(group("C3"), B, B)});
  bi.push_back({"N(C2@2)xpoint", lift_carrier(N("C2@2"), B)});
  bi.push_back({"N(S3)xN(C2)", external_product(N("S3"), N("C2"))});
  bi.push_back({"N(C2)xN(C2)+point",
                coproduct(external_product(N("C2"), N("C2")), terminal_multisset({B, B}))});
  bi.push_back({"N(discrete2+C3)xN(pair)", external_product(N("discrete2+C3"), N("pair"))});
  const std::size_t fixed_bisimplicial = bi.size();
  {
    const int pairs = size == SizeClass::small ? kRandomPairsSmall : kRandomPairsMedium;
    const auto factors = random_groupoids(rng, 2 * pairs, 8);
    for (int i = 0; i < pairs; ++i) {
      const auto &a = factors[2 * i], &b = factors[2 * i + 1];
      bi.push_back({"N(" + a.name + ")xN(" + b.name + ")", external_product(nerve(a.groupoid, B), nerve(b.groupoid, B))});
    }
  }

  // --- 2-groupoid carriers -------------------------------------------------------------
  const int D = kCarrierBound;
  auto lifted = [&](const FinGroupoid& x) { return lift_carrier(nerve(x, D), D); };
  for (const char* name : {"1", "C2", "C3", "C2xC2", "S3", "C2@2", "pair+point", "C2+C3"})
    c.ngroupoids.push_back({std::string("lift(") + name + ")", lifted(find(gs, name))});
  c.ngroupoids.push_back({"K(1,2)", k_a2_carrier(group("1"), D, D)});
  c.ngroupoids.push_back({"K(C2,2)", k_a2_carrier(group("C2"), D, D)});
  c.ngroupoids.push_back({"K(C3,2)", k_a2_carrier(group("C3"), D, D)});
  c.ngroupoids.push_back({"lift(C2)+K(C2,2)", coproduct(lifted(find(gs, "C2")), k_a2_carrier(group("C2"), D, D))});

  // --- n-functors -------------------------------------------------------------------------
  for (const auto& x : c.ngroupoids)
    c.nfunctors.push_back({"id:" + x.name, MultiSSetMap::identity(std::make_shared<const MultiSSet>(x.object))});
  // Maps between 2-groupoid carriers, built at a given bound.
  auto two_maps = [&](int bound) {
    std::vector<NamedMap> out;
    for (const auto& f : c.functors) out.push_back({"lift:" + f.name, lift_map(nerve(f.functor, bound).as_multi(), bound)});
    out.push_back({"K:C2->1", k_a2_map(group("C2"), group("1"), {0, 0}, bound, bound)});
    out.push_back({"K:1->C2", k_a2_map(group("1"), group("C2"), {0}, bound, bound)});
    out.push_back({"K:C3-negate", k_a2_map(group("C3"), group("C3"), {0, 2, 1}, bound, bound)});
    out.push_back({"K:C2-zero", k_a2_map(group("C2"), group("C2"), {0, 0}, bound, bound)});
    return out;
  };
  for (auto& m : two_maps(D)) c.nfunctors.push_back(std::move(m));
  for (const auto& f : c.functors) c.nfunctors.push_back({"nerve:" + f.name, nerve(f.functor, D).as_multi()});

  // --- pullbacks ---------------------------------------------------------------------------
  // Pullback legs use the bisimplicial bound: the check is cell for cell, and
  // self-pullbacks of collapsing maps grow quadratically with the level size.
  for (const auto& t : two_maps(B)) {
    c.pullbacks.push_back({t.name + " x " + t.name, t.map, t.map});
    c.pullbacks.push_back({t.name + " x id", t.map, MultiSSetMap::identity(t.map.target)});
  }
  for (std::size_t i = 0; i < fixed_bisimplicial; ++i) {
    const auto& x = bi[i];
    std::size_t widest = 0;
    for (std::size_t l = 0; l < x.object.level_count(); ++l) widest = std::max(widest, x.object.level_at(l).names.size());
    if (widest > kPullbackLevelCap) continue;
    auto p = to_terminal(x.object);
    c.pullbacks.push_back({x.name + " x " + x.name + " over point", p, p});
  }
  {
    const auto& fc = c.functors.back();  // C4 -> C2
    auto nh = std::make_shared<const MultiSSet>(N("C3"));
    auto id = MultiSSetMap::identity(nh);
    auto f = external_product(nerve(fc.functor, B).as_multi(), id);
    auto gmap = external_product(nerve(identity_functor(fc.functor.target), B).as_multi(), id);
    c.pullbacks.push_back({"C4->C2<-C2 x N(C3)", f, gmap});
  }
  return c;
}

std::vector<Document> corpus_documents(const Corpus& c) {
  std::vector<Document> out;
  auto meta = [&](const std::string& name, const std::string& provenance) {
    return DocumentMetadata{name, c.seed, provenance + " (corpus " + to_string(c.size) + ")"};
  };
  for (const auto& g : c.groupoids) out.emplace_back(DocumentKind::groupoid, g.groupoid, meta(g.name, "groupoid"));
  for (const auto& f : c.functors) out.emplace_back(DocumentKind::functor, f.functor, meta(f.name, "functor"));
  for (const auto& s : c.ssets)
    out.emplace_back(DocumentKind::sset, static_cast<const MultiSSet&>(s.sset), meta(s.name, "simplicial set"));
  for (const auto& b : c.bisimplicial) out.emplace_back(DocumentKind::multisset, b.object, meta(b.name, "bisimplicial set"));
  for (const auto& n : c.ngroupoids) out.emplace_back(DocumentKind::ngroupoid, n.object, meta(n.name, "2-groupoid carrier"));
  for (const auto& f : c.nfunctors) out.emplace_back(DocumentKind::nfunctor, f.map, meta(f.name, "n-functor"));
  for (const auto& p : c.pullbacks) {
    out.emplace_back(DocumentKind::nfunctor, p.f, meta(p.name + "/f", "pullback leg"));
    out.emplace_back(DocumentKind::nfunctor, p.g, meta(p.name + "/g", "pullback leg"));
  }
  return out;
}

std::vector<Document> generate_corpus(std::uint64_t seed, SizeClass size) {
  return corpus_documents(build_corpus(seed, size));
}

}  // namespace ngpd
