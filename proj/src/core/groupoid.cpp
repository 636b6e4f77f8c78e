#include "ngpd/groupoid.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "builder.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd {

FinGroupoid::FinGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<int> composition, std::vector<int> identities, std::vector<int> inverses)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      composition_(std::move(composition)),
      identities_(std::move(identities)),
      inverses_(std::move(inverses)) {
  const int n_obj = object_count();
  const int n_mor = morphism_count();
  for (const auto& m : morphisms_) {
    if (m.source < 0 || m.source >= n_obj || m.target < 0 || m.target >= n_obj) {
      throw std::invalid_argument("groupoid: morphism '" + m.name + "' has an endpoint outside the object set");
    }
  }
  if (composition_.size() != static_cast<std::size_t>(n_mor) * n_mor) {
    throw std::invalid_argument("groupoid: composition table has wrong size");
  }
  for (int v : composition_)
    if (v < -1 || v >= n_mor) throw std::invalid_argument("groupoid: composition entry out of range");
  if (static_cast<int>(identities_.size()) != n_obj) throw std::invalid_argument("groupoid: identities table has wrong size");
  for (int v : identities_)
    if (v < 0 || v >= n_mor) throw std::invalid_argument("groupoid: identity entry out of range");
  if (static_cast<int>(inverses_.size()) != n_mor) throw std::invalid_argument("groupoid: inverse table has wrong size");
  for (int v : inverses_)
    if (v < 0 || v >= n_mor) throw std::invalid_argument("groupoid: inverse entry out of range");
}

FinGroupoid FinGroupoid::from_composition(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                          const std::function<int(int, int)>& compose_gf) {
  const int n_obj = static_cast<int>(objects.size());
  const int n_mor = static_cast<int>(morphisms.size());
  std::vector<int> comp(static_cast<std::size_t>(n_mor) * n_mor, -1);
  for (int g = 0; g < n_mor; ++g)
    for (int f = 0; f < n_mor; ++f)
      if (morphisms[f].target == morphisms[g].source) comp[static_cast<std::size_t>(g) * n_mor + f] = compose_gf(g, f);
  std::vector<int> ids(n_obj, -1);
  for (int e = 0; e < n_mor; ++e) {
    const int x = morphisms[e].source;
    if (morphisms[e].target != x || ids[x] >= 0) continue;
    bool neutral = true;
    for (int f = 0; f < n_mor && neutral; ++f) {
      if (morphisms[f].source == x && comp[static_cast<std::size_t>(f) * n_mor + e] != f) neutral = false;
      if (morphisms[f].target == x && comp[static_cast<std::size_t>(e) * n_mor + f] != f) neutral = false;
    }
    if (neutral) ids[x] = e;
  }
  for (int x = 0; x < n_obj; ++x)
    if (ids[x] < 0) throw std::invalid_argument("groupoid: object '" + objects[x] + "' has no identity");
  std::vector<int> inv(n_mor, -1);
  for (int f = 0; f < n_mor; ++f) {
    for (int g = 0; g < n_mor && inv[f] < 0; ++g) {
      if (morphisms[g].source != morphisms[f].target || morphisms[g].target != morphisms[f].source) continue;
      if (comp[static_cast<std::size_t>(g) * n_mor + f] == ids[morphisms[f].source] &&
          comp[static_cast<std::size_t>(f) * n_mor + g] == ids[morphisms[f].target]) {
        inv[f] = g;
      }
    }
    if (inv[f] < 0) throw std::invalid_argument("groupoid: morphism '" + morphisms[f].name + "' has no inverse");
  }
  return FinGroupoid(std::move(objects), std::move(morphisms), std::move(comp), std::move(ids), std::move(inv));
}

std::vector<int> FinGroupoid::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < morphism_count(); ++f)
    if (morphisms_[f].source == x && morphisms_[f].target == y) out.push_back(f);
  return out;
}

int FinGroupoid::find_object(std::string_view name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[i] == name) return i;
  return -1;
}

int FinGroupoid::find_morphism(std::string_view name) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms_[i].name == name) return i;
  return -1;
}

// ---------------------------------------------------------------------------

FinGroup::FinGroup(FinGroupoid g) : groupoid_(std::move(g)) {
  if (groupoid_.object_count() != 1) throw std::invalid_argument("group: groupoid must have exactly one object");
}

FinGroup FinGroup::from_table(std::vector<std::string> names, const std::vector<int>& table) {
  const int n = static_cast<int>(names.size());
  if (table.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("group: table has wrong size");
  std::vector<FinGroupoid::Morphism> mor;
  for (auto& nm : names) mor.push_back({std::move(nm), 0, 0});
  return FinGroup(FinGroupoid::from_composition({"*"}, std::move(mor), [&](int g, int f) {
    return table[static_cast<std::size_t>(g) * n + f];
  }));
}

FinGroup FinGroup::trivial() { return FinGroup(FinGroupoid({"*"}, {{"e", 0, 0}}, {0}, {0}, {0})); }

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

ValidationReport validate_groupoid(const FinGroupoid& g) {
  ValidationReport rep;
  const int n = g.morphism_count();
  auto nm = [&](int f) { return "'" + g.morphism(f).name + "'"; };
  for (int x = 0; x < g.object_count(); ++x) {
    int e = g.identity(x);
    if (g.source(e) != x || g.target(e) != x) rep.add("identity endpoints", "object '" + g.objects()[x] + "'");
  }
  for (int f = 0; f < n; ++f) {
    for (int h = 0; h < n; ++h) {
      const int c = g.compose(h, f);
      const bool composable = g.target(f) == g.source(h);
      if (composable != (c >= 0)) {
        rep.add("composition defined iff composable", nm(h) + " o " + nm(f));
        continue;
      }
      if (c >= 0 && (g.source(c) != g.source(f) || g.target(c) != g.target(h))) {
        rep.add("composite endpoints", nm(h) + " o " + nm(f));
      }
    }
    if (g.compose(f, g.identity(g.source(f))) != f) rep.add("right identity", nm(f));
    if (g.compose(g.identity(g.target(f)), f) != f) rep.add("left identity", nm(f));
    const int inv = g.inverse(f);
    if (g.compose(inv, f) != g.identity(g.source(f)) || g.compose(f, inv) != g.identity(g.target(f))) {
      rep.add("two-sided inverse", nm(f));
    }
  }
  for (int f = 0; f < n; ++f)
    for (int h = 0; h < n; ++h) {
      const int hf = g.compose(h, f);
      if (hf < 0) continue;
      for (int k = 0; k < n; ++k) {
        const int kh = g.compose(k, h);
        if (kh < 0) continue;
        if (g.compose(k, hf) != g.compose(kh, f)) rep.add("associativity", nm(k) + " o " + nm(h) + " o " + nm(f));
      }
    }
  return rep;
}

GroupoidFunctor make_functor(std::shared_ptr<const FinGroupoid> source, std::shared_ptr<const FinGroupoid> target,
                             std::vector<int> objects, std::vector<int> morphisms) {
  if (!source || !target) throw std::invalid_argument("functor: null endpoint");
  if (static_cast<int>(objects.size()) != source->object_count() ||
      static_cast<int>(morphisms.size()) != source->morphism_count()) {
    throw std::invalid_argument("functor: table sizes do not match the source");
  }
  for (int v : objects)
    if (v < 0 || v >= target->object_count()) throw std::invalid_argument("functor: object image out of range");
  for (int v : morphisms)
    if (v < 0 || v >= target->morphism_count()) throw std::invalid_argument("functor: morphism image out of range");
  return GroupoidFunctor{std::move(source), std::move(target), std::move(objects), std::move(morphisms)};
}

ValidationReport validate_functor(const GroupoidFunctor& F) {
  ValidationReport rep;
  const auto& G = *F.source;
  const auto& H = *F.target;
  for (int f = 0; f < G.morphism_count(); ++f) {
    const int Ff = F.morphisms[f];
    if (H.source(Ff) != F.objects[G.source(f)] || H.target(Ff) != F.objects[G.target(f)]) {
      rep.add("preserves endpoints", "'" + G.morphism(f).name + "'");
    }
  }
  for (int x = 0; x < G.object_count(); ++x)
    if (F.morphisms[G.identity(x)] != H.identity(F.objects[x])) rep.add("preserves identities", "'" + G.objects()[x] + "'");
  for (int f = 0; f < G.morphism_count(); ++f)
    for (int g = 0; g < G.morphism_count(); ++g) {
      const int gf = G.compose(g, f);
      if (gf < 0) continue;
      if (F.morphisms[gf] != H.compose(F.morphisms[g], F.morphisms[f])) {
        rep.add("preserves composition", "'" + G.morphism(g).name + "' o '" + G.morphism(f).name + "'");
      }
    }
  return rep;
}

std::vector<std::vector<int>> composable_chains(const FinGroupoid& g, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int f = 0; f < g.morphism_count(); ++f) {
      if (!cur.empty() && g.source(f) != g.target(cur.back())) continue;
      cur.push_back(f);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

SimplicialSet nerve(const FinGroupoid& g, int dim_bound) {
  if (dim_bound < 1) throw std::invalid_argument("nerve: dim_bound must be >= 1");
  // Keys: level 0 -> {object}; level k >= 1 -> chain of morphisms.
  using Key = std::vector<int>;
  auto vertex_of = [&](const Key& chain, int i) { return i == 0 ? g.source(chain[0]) : g.target(chain[i - 1]); };
  auto cells = [&](const MultiIndex& at) {
    const int k = at[0];
    if (k >= 1) return composable_chains(g, k);
    std::vector<Key> out;
    for (int x = 0; x < g.object_count(); ++x) out.push_back({x});
    return out;
  };
  auto name = [&](const MultiIndex& at, const Key& key) {
    if (at[0] == 0) return g.objects()[key[0]];
    std::string s;
    for (std::size_t j = 0; j < key.size(); ++j) s += (j ? "|" : "") + g.morphism(key[j]).name;
    return s;
  };
  auto face = [&](const MultiIndex& at, int, int i, const Key& key) -> Key {
    const int k = at[0];
    if (k == 1) return {i == 0 ? g.target(key[0]) : g.source(key[0])};
    Key out;
    for (int j = 0; j < k; ++j) {
      if (i == 0 && j == 0) continue;
      if (i == k && j == k - 1) continue;
      if (i > 0 && i < k && j == i) continue;
      if (i > 0 && i < k && j == i - 1) {
        out.push_back(g.compose(key[i], key[i - 1]));
        continue;
      }
      out.push_back(key[j]);
    }
    return out;
  };
  auto degen = [&](const MultiIndex& at, int, int i, const Key& key) -> Key {
    if (at[0] == 0) return {g.identity(key[0])};
    Key out(key.begin(), key.begin() + i);
    out.push_back(g.identity(vertex_of(key, i)));
    out.insert(out.end(), key.begin() + i, key.end());
    return out;
  };
  return SimplicialSet(detail::build_multisset<Key>({dim_bound}, cells, name, face, degen));
}

SSetMap nerve(const GroupoidFunctor& f, int dim_bound) {
  auto src = std::make_shared<const SimplicialSet>(nerve(*f.source, dim_bound));
  auto tgt = std::make_shared<const SimplicialSet>(nerve(*f.target, dim_bound));
  std::vector<CellMap> levels{f.objects};
  for (int k = 1; k <= dim_bound; ++k) {
    std::map<std::vector<int>, int> index;
    const auto target_chains = composable_chains(*f.target, k);
    for (std::size_t c = 0; c < target_chains.size(); ++c) index.emplace(target_chains[c], static_cast<int>(c));
    CellMap cm;
    for (auto chain : composable_chains(*f.source, k)) {
      for (int& m : chain) m = f.morphisms[m];
      const auto it = index.find(chain);
      if (it == index.end()) throw std::invalid_argument("nerve: functor does not preserve composable chains");
      cm.push_back(it->second);
    }
    levels.push_back(std::move(cm));
  }
  return SSetMap(src, tgt, std::move(levels));
}

Partition iso_classes(const FinGroupoid& g) {
  DisjointSets ds(g.object_count());
  for (const auto& m : g.morphisms()) ds.unite(m.source, m.target);
  return ds.partition();
}

FinGroup automorphism_group(const FinGroupoid& g, int x) {
  if (x < 0 || x >= g.object_count()) throw std::out_of_range("automorphism_group: no such object");
  const auto elems = g.hom(x, x);
  std::vector<int> pos(g.morphism_count(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    names.push_back(g.morphism(elems[a]).name);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = pos[g.compose(elems[a], elems[b])];
  }
  return FinGroup::from_table(std::move(names), table);
}

EquivalenceResult is_equivalence(const GroupoidFunctor& F) {
  const auto& G = *F.source;
  const auto& H = *F.target;
  const Partition classes = iso_classes(H);
  std::vector<bool> hit(classes.class_count(), false);
  for (int x = 0; x < G.object_count(); ++x) hit[classes.class_of[F.objects[x]]] = true;
  for (int c = 0; c < classes.class_count(); ++c) {
    if (!hit[c]) {
      return {false, "not essentially surjective: object '" + H.objects()[classes.representatives[c]] +
                         "' is not isomorphic to any image"};
    }
  }
  auto hom_index = [](const FinGroupoid& g) {
    std::map<std::pair<int, int>, std::vector<int>> out;
    for (int f = 0; f < g.morphism_count(); ++f) out[{g.source(f), g.target(f)}].push_back(f);
    return out;
  };
  const auto homs_g = hom_index(G);
  const auto homs_h = hom_index(H);
  auto lookup = [](const auto& index, int x, int y) -> const std::vector<int>& {
    static const std::vector<int> empty;
    auto it = index.find({x, y});
    return it == index.end() ? empty : it->second;
  };
  const Partition source_classes = iso_classes(G);
  // Pairs in different components have empty Hom; their images must too.
  std::vector<int> image_class(source_classes.class_count(), -1);
  std::vector<int> first_object(classes.class_count(), -1);
  for (int x = 0; x < G.object_count(); ++x) {
    const int c = classes.class_of[F.objects[x]];
    const int first = first_object[c];
    if (first >= 0 && source_classes.class_of[first] != source_classes.class_of[x]) {
      const auto& tgt = lookup(homs_h, F.objects[first], F.objects[x]);
      return {false, "Hom('" + G.objects()[first] + "','" + G.objects()[x] + "') -> Hom('" +
                         H.objects()[F.objects[first]] + "','" + H.objects()[F.objects[x]] +
                         "') is not a bijection (0 -> " + std::to_string(tgt.size()) + ")"};
    }
    if (first < 0) first_object[c] = x;
  }
  std::vector<int> count(H.morphism_count(), 0);
  for (const auto& members : source_classes.classes())
    for (int x : members)
      for (int y : members) {
        const auto& src = lookup(homs_g, x, y);
        const auto& tgt = lookup(homs_h, F.objects[x], F.objects[y]);
        for (int f : src) ++count[F.morphisms[f]];
        bool bijective = src.size() == tgt.size();
        for (int f : tgt) bijective = bijective && count[f] == 1;
        for (int f : src) count[F.morphisms[f]] = 0;
        if (!bijective) {
          return {false, "Hom('" + G.objects()[x] + "','" + G.objects()[y] + "') -> Hom('" +
                             H.objects()[F.objects[x]] + "','" + H.objects()[F.objects[y]] +
                             "') is not a bijection (" + std::to_string(src.size()) + " -> " +
                             std::to_string(tgt.size()) + ")"};
        }
      }
  return {true, {}};
}

GroupoidFunctor identity_functor(std::shared_ptr<const FinGroupoid> g) {
  std::vector<int> obj(g->object_count()), mor(g->morphism_count());
  std::iota(obj.begin(), obj.end(), 0);
  std::iota(mor.begin(), mor.end(), 0);
  return GroupoidFunctor{g, g, std::move(obj), std::move(mor)};
}

GroupoidFunctor compose(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (!(*f.target == *g.source)) throw std::invalid_argument("compose: functors are not composable");
  GroupoidFunctor out{f.source, g.target, {}, {}};
  for (int x : f.objects) out.objects.push_back(g.objects[x]);
  for (int m : f.morphisms) out.morphisms.push_back(g.morphisms[m]);
  return out;
}

// ---------------------------------------------------------------------------

FinGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FinGroup::from_table(std::move(names), table);
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FinGroup::from_table(std::move(names), table);
}

FinGroup dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_group: n must be positive");
  // element f*n + k is s^f r^k; r^k s = s r^-k
  const int order = 2 * n;
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int f1 = x / n, k1 = x % n;
    names.push_back((f1 ? "s" : "r") + std::to_string(k1));
    for (int y = 0; y < order; ++y) {
      const int f2 = y / n, k2 = y % n;
      const int k = ((f2 ? -k1 : k1) + k2 % n + 2 * n) % n;
      table[static_cast<std::size_t>(x) * order + y] = ((f1 + f2) % 2) * n + k;
    }
  }
  return FinGroup::from_table(std::move(names), table);
}

FinGroup quaternion_group() {
  // element sign*4 + unit, units 1,i,j,k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x) {
    names.push_back(std::string(x / 4 ? "-" : "+") + unit_name[x % 4]);
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int sign = (x / 4 + y / 4 + unit_sign[u][v]) % 2;
      table[x * 8 + y] = sign * 4 + unit_mul[u][v];
    }
  }
  return FinGroup::from_table(std::move(names), table);
}

const std::vector<NamedGroup>& reference_groups() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> g;
    g.push_back({"1", FinGroup::trivial()});
    g.push_back({"C2", cyclic_group(2)});
    g.push_back({"C3", cyclic_group(3)});
    g.push_back({"C4", cyclic_group(4)});
    g.push_back({"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))});
    g.push_back({"C5", cyclic_group(5)});
    g.push_back({"C6", cyclic_group(6)});
    g.push_back({"S3", dihedral_group(3)});
    g.push_back({"C7", cyclic_group(7)});
    g.push_back({"C8", cyclic_group(8)});
    g.push_back({"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))});
    g.push_back({"C2^3", direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))});
    g.push_back({"D4", dihedral_group(4)});
    g.push_back({"Q8", quaternion_group()});
    return g;
  }();
  return groups;
}

FinGroupoid discrete_groupoid(int objects) {
  std::vector<std::string> obj;
  std::vector<FinGroupoid::Morphism> mor;
  for (int x = 0; x < objects; ++x) {
    obj.push_back("x" + std::to_string(x));
    mor.push_back({"id" + std::to_string(x), x, x});
  }
  return FinGroupoid::from_composition(std::move(obj), std::move(mor), [](int g, int) { return g; });
}

FinGroupoid spread_group(const FinGroup& g, int objects) {
  if (objects < 1) throw std::invalid_argument("spread_group: need at least one object");
  if (objects == 1) return g.groupoid();
  const int n = g.order();
  std::vector<std::string> obj;
  for (int x = 0; x < objects; ++x) obj.push_back("x" + std::to_string(x));
  std::vector<FinGroupoid::Morphism> mor;
  // index ((i * k) + j) * n + e for (j, e, i): i -> j
  for (int i = 0; i < objects; ++i)
    for (int j = 0; j < objects; ++j)
      for (int e = 0; e < n; ++e) mor.push_back({g.name(e) + "@" + std::to_string(i) + ">" + std::to_string(j), i, j});
  return FinGroupoid::from_composition(std::move(obj), std::move(mor), [&](int h, int f) {
    const int fi = f / n / objects, fe = f % n;
    const int hj = (h / n) % objects, he = h % n;
    return (fi * objects + hj) * n + g.mul(he, fe);
  });
}

FinGroupoid disjoint_union(const FinGroupoid& a, const FinGroupoid& b) {
  const int oa = a.object_count(), ma = a.morphism_count();
  std::vector<std::string> obj;
  for (const auto& x : a.objects()) obj.push_back("0." + x);
  for (const auto& x : b.objects()) obj.push_back("1." + x);
  std::vector<FinGroupoid::Morphism> mor;
  for (const auto& m : a.morphisms()) mor.push_back({"0." + m.name, m.source, m.target});
  for (const auto& m : b.morphisms()) mor.push_back({"1." + m.name, m.source + oa, m.target + oa});
  return FinGroupoid::from_composition(std::move(obj), std::move(mor), [&](int g, int f) {
    if (g < ma && f < ma) return a.compose(g, f);
    if (g >= ma && f >= ma) return b.compose(g - ma, f - ma) + ma;
    return -1;
  });
}

FinGroupoid product_groupoid(const FinGroupoid& a, const FinGroupoid& b) {
  const int ob = b.object_count(), mb = b.morphism_count();
  std::vector<std::string> obj;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) obj.push_back("(" + x + "," + y + ")");
  std::vector<FinGroupoid::Morphism> mor;
  for (const auto& f : a.morphisms())
    for (const auto& g : b.morphisms())
      mor.push_back({"(" + f.name + "," + g.name + ")", f.source * ob + g.source, f.target * ob + g.target});
  return FinGroupoid::from_composition(std::move(obj), std::move(mor), [&](int h, int f) {
    return a.compose(h / mb, f / mb) * mb + b.compose(h % mb, f % mb);
  });
}

FinGroupoid action_groupoid(const FinGroup& g, int points, const std::function<int(int, int)>& act) {
  const int n = g.order();
  std::vector<std::string> obj;
  for (int x = 0; x < points; ++x) obj.push_back("p" + std::to_string(x));
  std::vector<FinGroupoid::Morphism> mor;
  // index x * n + e for (e, x): x -> e.x
  for (int x = 0; x < points; ++x)
    for (int e = 0; e < n; ++e) mor.push_back({g.name(e) + "|" + std::to_string(x), x, act(e, x)});
  return FinGroupoid::from_composition(std::move(obj), std::move(mor), [&](int h, int f) {
    return (f / n) * n + g.mul(h % n, f % n);
  });
}

}  // namespace ngpd
