#include "ngpd/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "builder.hpp"

namespace ngpd {

SimplicialSet::SimplicialSet() : MultiSSet(std::vector<int>{0}, std::vector<Level>(1, [] {
                                             Level l;
                                             l.face.resize(1);
                                             l.degen.resize(1);
                                             return l;
                                           }())) {}

SimplicialSet::SimplicialSet(MultiSSet x) : MultiSSet(std::move(x)) {
  if (arity() != 1) throw std::invalid_argument("simplicial set: expected arity 1, got " + std::to_string(arity()));
}

int SimplicialSet::vertex(int k, int cell, int v) const { return act(k, MonotoneMap::vertex(k, v), cell); }

bool SimplicialSet::is_degenerate(int k, int cell) const {
  if (k == 0) return false;
  const auto& lower = level({k - 1});
  for (const auto& s : lower.degen[0])
    for (int image : s)
      if (image == cell) return true;
  return false;
}

namespace {

std::vector<bool> degenerate_flags(const SimplicialSet& x, int k) {
  std::vector<bool> flags(x.cell_count(k), false);
  if (k == 0) return flags;
  for (const auto& s : x.level({k - 1}).degen[0])
    for (int image : s) flags[image] = true;
  return flags;
}

}  // namespace

SSetMap::SSetMap(std::shared_ptr<const SimplicialSet> src, std::shared_ptr<const SimplicialSet> tgt,
                 std::vector<CellMap> lv)
    : source(std::move(src)), target(std::move(tgt)), levels(std::move(lv)) {
  // Reuse the general shape checks.
  (void)MultiSSetMap(source, target, levels);
}

SSetMap SSetMap::from_multi(const MultiSSetMap& f) {
  return SSetMap(std::make_shared<const SimplicialSet>(*f.source), std::make_shared<const SimplicialSet>(*f.target),
                 f.levels);
}

MultiSSetMap SSetMap::as_multi() const { return MultiSSetMap(source, target, levels); }

ValidationReport validate_sset(const SimplicialSet& x) { return validate_multisset(x); }
ValidationReport validate_sset_map(const SSetMap& f) { return validate_map(f.as_multi()); }

Partition pi0(const SimplicialSet& x) {
  if (x.dim_bound() < 1) throw std::invalid_argument("need 1-cells");
  DisjointSets ds(x.cell_count(0));
  for (int e = 0; e < x.cell_count(1); ++e) ds.unite(x.face(1, 0, e), x.face(1, 1, e));
  return ds.partition();
}

SSetFiberProduct fiber_product(const SSetMap& f, const SSetMap& g) {
  auto fp = fiber_product(f.as_multi(), g.as_multi());
  auto obj = std::make_shared<const SimplicialSet>(*fp.object);
  return SSetFiberProduct{obj, SSetMap(obj, f.source, fp.pr1.levels), SSetMap(obj, g.source, fp.pr2.levels)};
}

// ---------------------------------------------------------------------------
// Segal maps

bool SegalMap::injective() const {
  std::vector<int> hits(spine_tuples.size(), 0);
  for (int t : map)
    if (++hits[t] > 1) return false;
  return true;
}

bool SegalMap::surjective() const { return !unfilled().has_value(); }

std::optional<std::vector<int>> SegalMap::unfilled() const {
  std::vector<bool> hit(spine_tuples.size(), false);
  for (int t : map) hit[t] = true;
  for (std::size_t t = 0; t < hit.size(); ++t)
    if (!hit[t]) return spine_tuples[t];
  return std::nullopt;
}

std::optional<std::pair<int, int>> SegalMap::collision() const {
  std::vector<int> first(spine_tuples.size(), -1);
  for (int c = 0; c < static_cast<int>(map.size()); ++c) {
    int& f = first[map[c]];
    if (f >= 0) return std::make_pair(f, c);
    f = c;
  }
  return std::nullopt;
}

SegalMap segal_map(const SimplicialSet& x, int m) {
  if (m < 1) throw std::invalid_argument("segal_map: m must be >= 1");
  if (m > x.dim_bound()) throw std::out_of_range("level not stored");
  SegalMap out;
  out.m = m;
  out.source_size = x.cell_count(m);
  const int edges = x.cell_count(1);
  std::vector<std::vector<int>> by_source(x.cell_count(0));
  for (int e = 0; e < edges; ++e) by_source[x.face(1, 1, e)].push_back(e);
  std::vector<int> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.spine_tuples.push_back(cur);
      return;
    }
    if (cur.empty()) {
      for (int e = 0; e < edges; ++e) {
        cur.push_back(e);
        self(self);
        cur.pop_back();
      }
      return;
    }
    for (int e : by_source[x.face(1, 0, cur.back())]) {
      cur.push_back(e);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  std::map<std::vector<int>, int> lookup;
  for (std::size_t t = 0; t < out.spine_tuples.size(); ++t) lookup.emplace(out.spine_tuples[t], static_cast<int>(t));
  for (int c = 0; c < out.source_size; ++c) {
    std::vector<int> spine;
    for (int j = 0; j < m; ++j) spine.push_back(x.act(m, MonotoneMap::spine_edge(m, j), c));
    out.map.push_back(lookup.at(spine));
  }
  return out;
}

NerveReport is_nerve_of_groupoid(const SimplicialSet& x) {
  NerveReport rep;
  if (x.dim_bound() < 3) {
    rep.failures.push_back("dim_bound " + std::to_string(x.dim_bound()) + " < 3: associativity level not stored");
    return rep;
  }
  const auto v = validate_sset(x);
  if (!v.ok()) {
    rep.failures.push_back("not a simplicial set: " + v.violations.front().rule + " at " + v.violations.front().where);
    return rep;
  }
  std::vector<SegalMap> segal;
  for (int m = 2; m <= x.dim_bound(); ++m) {
    segal.push_back(segal_map(x, m));
    const auto& s = segal.back();
    auto spine_name = [&](const std::vector<int>& t) {
      std::string str = "(";
      for (std::size_t j = 0; j < t.size(); ++j) str += (j ? "," : "") + x.name(1, t[j]);
      return str + ")";
    };
    if (auto t = s.unfilled()) {
      rep.failures.push_back("segal map m=" + std::to_string(m) + " not surjective: spine " + spine_name(*t) +
                             " has no filler");
    }
    if (auto c = s.collision()) {
      rep.failures.push_back("segal map m=" + std::to_string(m) + " not injective: cells '" +
                             x.name(m, c->first) + "' and '" + x.name(m, c->second) + "' share a spine");
    }
  }
  if (!rep.failures.empty()) return rep;

  // Reconstruct the category.
  std::vector<std::string> objects;
  for (int o = 0; o < x.cell_count(0); ++o) objects.push_back(x.name(0, o));
  std::vector<FinGroupoid::Morphism> morphisms;
  for (int e = 0; e < x.cell_count(1); ++e) morphisms.push_back({x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)});
  const int n = static_cast<int>(morphisms.size());
  const auto& s2 = segal.front();
  std::vector<int> filler(s2.spine_tuples.size());
  for (int c = 0; c < s2.source_size; ++c) filler[s2.map[c]] = c;
  std::vector<int> comp(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t t = 0; t < s2.spine_tuples.size(); ++t) {
    const int f = s2.spine_tuples[t][0], g = s2.spine_tuples[t][1];
    comp[static_cast<std::size_t>(g) * n + f] = x.face(2, 1, filler[t]);
  }
  std::vector<int> ids;
  for (int o = 0; o < x.cell_count(0); ++o) ids.push_back(x.degen(0, 0, o));
  std::map<std::pair<int, int>, std::vector<int>> by_ends;
  for (int f = 0; f < n; ++f) by_ends[{morphisms[f].source, morphisms[f].target}].push_back(f);
  std::vector<int> inv(n, -1);
  for (int f = 0; f < n; ++f) {
    const auto it = by_ends.find({morphisms[f].target, morphisms[f].source});
    if (it == by_ends.end()) continue;
    for (int g : it->second) {
      if (inv[f] >= 0) break;
      if (comp[static_cast<std::size_t>(g) * n + f] == ids[morphisms[f].source] &&
          comp[static_cast<std::size_t>(f) * n + g] == ids[morphisms[f].target]) {
        inv[f] = g;
      }
    }
  }
  for (int f = 0; f < n; ++f) {
    if (inv[f] < 0) rep.failures.push_back("1-cell '" + morphisms[f].name + "' has no two-sided inverse");
  }
  if (!rep.failures.empty()) return rep;
  FinGroupoid g(std::move(objects), std::move(morphisms), std::move(comp), std::move(ids), std::move(inv));
  const auto axioms = validate_groupoid(g);
  for (const auto& viol : axioms.violations) rep.failures.push_back(viol.rule + " fails at " + viol.where);
  if (!rep.failures.empty()) return rep;
  rep.is_nerve = true;
  rep.groupoid = std::move(g);
  return rep;
}

// ---------------------------------------------------------------------------
// edge-path groupoid

std::vector<int> edge_generator_index(const SimplicialSet& x) {
  if (x.dim_bound() < 1) throw std::invalid_argument("need 1-cells");
  const auto degenerate = degenerate_flags(x, 1);
  std::vector<int> index(x.cell_count(1), -1);
  int next = 0;
  for (int e = 0; e < x.cell_count(1); ++e)
    if (!degenerate[e]) index[e] = next++;
  return index;
}

FpGroupoid edge_path_groupoid(const SimplicialSet& x) {
  if (x.dim_bound() < 2) throw std::invalid_argument("relations need 2-cells");
  FpGroupoid p;
  for (int o = 0; o < x.cell_count(0); ++o) p.objects.push_back(x.name(0, o));
  const auto index = edge_generator_index(x);
  for (int e = 0; e < x.cell_count(1); ++e)
    if (index[e] >= 0) p.generators.push_back({x.name(1, e), x.face(1, 1, e), x.face(1, 0, e)});
  auto word = [&](int e) { return index[e] >= 0 ? Word{{index[e], false}} : Word{}; };
  const auto degenerate = degenerate_flags(x, 2);
  for (int s = 0; s < x.cell_count(2); ++s) {
    if (degenerate[s]) continue;
    FpGroupoid::Relator r;
    r.lhs = word(x.face(2, 1, s));
    r.rhs = word(x.face(2, 2, s));
    const Word second = word(x.face(2, 0, s));
    r.rhs.insert(r.rhs.end(), second.begin(), second.end());
    r.base = x.vertex(2, s, 0);
    r.origin = x.name(2, s);
    p.relators.push_back(std::move(r));
  }
  return p;
}

// ---------------------------------------------------------------------------
// diagonals

SimplicialSet total_diag(const MultiSSet& x) {
  const int n = x.arity();
  if (n < 1) throw std::invalid_argument("total_diag: arity 0");
  const int D = *std::min_element(x.dim_bounds().begin(), x.dim_bounds().end());
  std::vector<MultiSSet::Level> levels(D + 1);
  for (int k = 0; k <= D; ++k) {
    const MultiIndex at(n, k);
    const auto& src = x.level(at);
    auto& out = levels[k];
    out.names = src.names;
    out.face.resize(1);
    out.degen.resize(1);
    const int cells = static_cast<int>(src.names.size());
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_face = pass == 0;
      if (is_face ? k == 0 : k == D) continue;
      for (int i = 0; i <= k; ++i) {
        CellMap cm(cells);
        for (int c = 0; c < cells; ++c) {
          MultiIndex cur = at;
          int cell = c;
          for (int a = 0; a < n; ++a) {
            cell = is_face ? x.face(cur, a, i, cell) : x.degen(cur, a, i, cell);
            cur[a] += is_face ? -1 : 1;
          }
          cm[c] = cell;
        }
        (is_face ? out.face[0] : out.degen[0]).push_back(std::move(cm));
      }
    }
  }
  return SimplicialSet(MultiSSet({D}, std::move(levels)));
}

SSetMap total_diag(const MultiSSetMap& f) {
  auto src = std::make_shared<const SimplicialSet>(total_diag(*f.source));
  auto tgt = std::make_shared<const SimplicialSet>(total_diag(*f.target));
  const int n = f.source->arity();
  std::vector<CellMap> lv;
  for (int k = 0; k <= src->dim_bound(); ++k) lv.push_back(f.levels[f.source->flat_index(MultiIndex(n, k))]);
  return SSetMap(src, tgt, std::move(lv));
}

MultiSSet pairwise_diag(const MultiSSet& x) {
  const int n = x.arity();
  if (n < 2) throw std::invalid_argument("pairwise_diag: arity must be >= 2");
  std::vector<int> bounds{std::min(x.dim_bound(0), x.dim_bound(1))};
  bounds.insert(bounds.end(), x.dim_bounds().begin() + 2, x.dim_bounds().end());
  const auto indices = all_indices(bounds);
  std::vector<MultiSSet::Level> levels(indices.size());
  for (std::size_t f = 0; f < indices.size(); ++f) {
    const MultiIndex& at = indices[f];
    MultiIndex orig{at[0], at[0]};
    orig.insert(orig.end(), at.begin() + 1, at.end());
    const auto& src = x.level(orig);
    auto& out = levels[f];
    out.names = src.names;
    out.face.resize(n - 1);
    out.degen.resize(n - 1);
    const int cells = static_cast<int>(src.names.size());
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_face = pass == 0;
      if (!(is_face ? at[0] == 0 : at[0] == bounds[0])) {
        for (int i = 0; i <= at[0]; ++i) {
          CellMap cm(cells);
          for (int c = 0; c < cells; ++c) {
            MultiIndex cur = orig;
            int cell = c;
            for (int a = 0; a < 2; ++a) {
              cell = is_face ? x.face(cur, a, i, cell) : x.degen(cur, a, i, cell);
              cur[a] += is_face ? -1 : 1;
            }
            cm[c] = cell;
          }
          (is_face ? out.face[0] : out.degen[0]).push_back(std::move(cm));
        }
      }
      for (int a = 1; a < n - 1; ++a) {
        (is_face ? out.face[a] : out.degen[a]) = is_face ? src.face[a + 1] : src.degen[a + 1];
      }
    }
  }
  return MultiSSet(std::move(bounds), std::move(levels));
}

// ---------------------------------------------------------------------------

namespace {

std::string vertex_sequence_name(const std::vector<int>& seq, int n) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (n >= 10 && i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s;
}

}  // namespace

SimplicialSet simplex_subcomplex(int n, const std::vector<std::vector<int>>& maximal_faces, int dim_bound) {
  if (n < 0 || dim_bound < 0) throw std::invalid_argument("simplex_subcomplex: negative rank");
  using Key = std::vector<int>;
  auto allowed = [&](const Key& seq) {
    for (const auto& face : maximal_faces) {
      bool inside = true;
      for (int v : seq) inside = inside && std::find(face.begin(), face.end(), v) != face.end();
      if (inside) return true;
    }
    return false;
  };
  auto cells = [&](const MultiIndex& at) {
    std::vector<Key> out;
    Key cur;
    auto rec = [&](auto&& self, int lo) -> void {
      if (static_cast<int>(cur.size()) == at[0] + 1) {
        if (allowed(cur)) out.push_back(cur);
        return;
      }
      for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        self(self, v);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  auto name = [&](const MultiIndex&, const Key& k) { return vertex_sequence_name(k, n); };
  auto face = [](const MultiIndex&, int, int i, const Key& k) {
    Key out = k;
    out.erase(out.begin() + i);
    return out;
  };
  auto degen = [](const MultiIndex&, int, int i, const Key& k) {
    Key out = k;
    out.insert(out.begin() + i, k[i]);
    return out;
  };
  return SimplicialSet(detail::build_multisset<Key>({dim_bound}, cells, name, face, degen));
}

SimplicialSet standard_simplex(int n, int dim_bound) {
  std::vector<int> all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return simplex_subcomplex(n, {all}, dim_bound);
}

SimplicialSet simplex_boundary(int n, int dim_bound) {
  if (n < 1) throw std::invalid_argument("simplex_boundary: n must be >= 1");
  std::vector<std::vector<int>> faces;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    faces.push_back(std::move(f));
  }
  return simplex_subcomplex(n, faces, dim_bound);
}

SimplicialSet discrete_sset(int points, int dim_bound) {
  std::vector<std::string> names;
  for (int p = 0; p < points; ++p) names.push_back("p" + std::to_string(p));
  return SimplicialSet(constant_multisset({dim_bound}, names));
}

SimplicialSet coproduct(const SimplicialSet& x, const SimplicialSet& y) {
  return SimplicialSet(coproduct(static_cast<const MultiSSet&>(x), static_cast<const MultiSSet&>(y)));
}

}  // namespace ngpd
