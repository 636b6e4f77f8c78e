#include "ngpd/ngroupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "builder.hpp"

namespace ngpd {

namespace {

std::size_t outer_stride(const MultiSSet& c) {
  return c.level_count() / static_cast<std::size_t>(c.dim_bound(0) + 1);
}

// First structure map of outer level 0 that is not the identity.
std::optional<std::string> constancy_failure(const MultiSSet& c) {
  const std::size_t per = outer_stride(c);
  for (std::size_t k = 0; k < per; ++k) {
    const auto& lvl = c.level_at(k);
    const auto& base = c.level_at(0);
    if (lvl.names.size() != base.names.size()) {
      return "level " + index_to_string(c.multi_index(k)) + " has " + std::to_string(lvl.names.size()) +
             " cells, level " + index_to_string(c.multi_index(0)) + " has " + std::to_string(base.names.size());
    }
    for (int a = 1; a < c.arity(); ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& maps = pass == 0 ? lvl.face[a] : lvl.degen[a];
        for (std::size_t i = 0; i < maps.size(); ++i)
          for (std::size_t cell = 0; cell < maps[i].size(); ++cell)
            if (maps[i][cell] != static_cast<int>(cell)) {
              return std::string(pass == 0 ? "d" : "s") + std::to_string(i) + " along axis " + std::to_string(a) +
                     " moves cell '" + lvl.names[cell] + "' at " + index_to_string(c.multi_index(k));
            }
      }
  }
  return std::nullopt;
}

std::string segal_failure(const SimplicialSet& s, const SegalMap& seg) {
  if (auto c = seg.collision()) {
    return "cells '" + s.name(seg.m, c->first) + "' and '" + s.name(seg.m, c->second) + "' share a spine";
  }
  if (auto t = seg.unfilled()) {
    std::string str = "(";
    for (std::size_t j = 0; j < t->size(); ++j) str += (j ? "," : "") + s.name(1, (*t)[j]);
    return "spine " + str + ") has no filler";
  }
  return {};
}

std::vector<int> canonical_classes(const std::vector<int>& class_of) {
  std::map<int, int> renumber;
  std::vector<int> out;
  out.reserve(class_of.size());
  for (int c : class_of) out.push_back(renumber.emplace(c, static_cast<int>(renumber.size())).first->second);
  return out;
}

int object_count(const MultiSSet& c) { return c.cell_count(MultiIndex(c.arity(), 0)); }

}  // namespace

ValidationReport validate_ngroupoid(const MultiSSet& x) {
  ValidationReport rep;
  const int n = x.arity();
  if (n < 1) {
    rep.add("carrier has arity >= 1", "arity 0");
    return rep;
  }
  const auto base = validate_multisset(x);
  if (!base.ok()) {
    rep.append(base, "carrier: ");
    return rep;
  }
  const int B = x.dim_bound(0);
  if (n == 1) {
    const SimplicialSet s(x);
    for (int m = 2; m <= B; ++m) {
      const auto seg = segal_map(s, m);
      if (!seg.bijective()) rep.add("G1 Segal map is a bijection", "m=" + std::to_string(m) + ": " + segal_failure(s, seg));
    }
    const auto nr = is_nerve_of_groupoid(s);
    for (const auto& f : nr.failures) rep.add("G2 groupoid nerve", f);
    return rep;
  }
  const auto g0 = constancy_failure(x);
  if (g0) rep.add("G0 outer level 0 is constant", *g0);
  for (int m = 0; m <= B; ++m) {
    const auto sub = validate_ngroupoid(outer_level(x, m));
    for (const auto& v : sub.violations) {
      rep.add("G3 outer level is an (n-1)-groupoid", "m=" + std::to_string(m) + ": " + v.rule + ": " + v.where);
    }
  }
  if (!g0) {
    for (int m = 2; m <= B; ++m) {
      const auto eq = equivalence_of_carriers(outer_segal_map(x, m));
      if (!eq.equivalent) rep.add("G1 Segal map is an (n-1)-equivalence", "m=" + std::to_string(m) + ": " + eq.witness);
    }
  }
  try {
    const SimplicialSet t(T_power(x, n - 1));
    const auto nr = is_nerve_of_groupoid(t);
    for (const auto& f : nr.failures) rep.add("G2 groupoid nerve", "T^" + std::to_string(n - 1) + ": " + f);
  } catch (const std::logic_error& e) {
    rep.add("G2 groupoid nerve", std::string("truncation failed: ") + e.what());
  }
  return rep;
}

NGroupoid::NGroupoid(MultiSSet carrier) : NGroupoid(std::make_shared<const MultiSSet>(std::move(carrier))) {}

NGroupoid::NGroupoid(std::shared_ptr<const MultiSSet> carrier) : carrier_(std::move(carrier)) {
  if (!carrier_ || carrier_->arity() < 1) throw std::invalid_argument("n-groupoid carrier must have arity >= 1");
  validation_ = std::make_shared<const ValidationReport>(validate_ngroupoid(*carrier_));
}

void NGroupoid::require_valid() const {
  if (!valid()) {
    const auto& v = validation_->violations.front();
    throw std::invalid_argument("not a valid " + std::to_string(n()) + "-groupoid: " + v.rule + ": " + v.where);
  }
}

std::vector<std::string> objects(const MultiSSet& c) {
  if (c.arity() < 1) throw std::invalid_argument("objects: arity 0");
  if (auto f = constancy_failure(c)) throw std::invalid_argument("G0 fails: " + *f);
  return c.level_at(0).names;
}

std::vector<std::string> objects(const NGroupoid& x) { return objects(x.carrier()); }

ArrowObject arrow_object(const MultiSSet& c, int x, int y) {
  const int n = c.arity();
  if (n < 1) throw std::invalid_argument("arrow_object: arity 0");
  if (c.dim_bound(0) < 1) throw std::out_of_range("arrow_object: outer level 1 not stored");
  const int nobj = object_count(c);
  if (x < 0 || x >= nobj || y < 0 || y >= nobj) throw std::out_of_range("arrow_object: no such object");
  if (n >= 2)
    if (auto f = constancy_failure(c)) throw std::invalid_argument("G0 fails: " + *f);
  const std::size_t per = outer_stride(c);
  std::vector<int> inner_bounds(c.dim_bounds().begin() + 1, c.dim_bounds().end());
  ArrowObject out;
  std::vector<std::vector<int>> position(per);
  out.inclusion.resize(per);
  for (std::size_t k = 0; k < per; ++k) {
    const auto& lvl = c.level_at(per + k);
    position[k].assign(lvl.names.size(), -1);
    for (std::size_t cell = 0; cell < lvl.names.size(); ++cell) {
      if (lvl.face[0][1][cell] == x && lvl.face[0][0][cell] == y) {
        position[k][cell] = static_cast<int>(out.inclusion[k].size());
        out.inclusion[k].push_back(static_cast<int>(cell));
      }
    }
  }
  const auto indices = all_indices(inner_bounds);
  std::map<MultiIndex, std::size_t> flat;
  for (std::size_t k = 0; k < indices.size(); ++k) flat[indices[k]] = k;
  std::vector<MultiSSet::Level> levels(per);
  for (std::size_t k = 0; k < per; ++k) {
    const auto& src = c.level_at(per + k);
    auto& dst = levels[k];
    for (int cell : out.inclusion[k]) dst.names.push_back(src.names[cell]);
    dst.face.resize(n - 1);
    dst.degen.resize(n - 1);
    for (int a = 0; a < n - 1; ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& maps = pass == 0 ? src.face[a + 1] : src.degen[a + 1];
        if (maps.empty()) continue;
        MultiIndex to = indices[k];
        to[a] += pass == 0 ? -1 : 1;
        const auto& pos = position[flat.at(to)];
        for (const auto& m : maps) {
          CellMap cm;
          for (int cell : out.inclusion[k]) {
            const int image = pos[m[cell]];
            if (image < 0) throw std::logic_error("arrow_object: structure map leaves the arrow object");
            cm.push_back(image);
          }
          (pass == 0 ? dst.face[a] : dst.degen[a]).push_back(std::move(cm));
        }
      }
  }
  out.object = MultiSSet(std::move(inner_bounds), std::move(levels));
  return out;
}

NGroupoid arrow_object(const NGroupoid& phi, int x, int y) {
  phi.require_valid();
  if (phi.n() == 1) {
    // The Hom-set as a discrete 0-groupoid has no carrier of arity >= 1;
    // present it as a constant simplicial set.
    auto a = arrow_object(phi.carrier(), x, y);
    return NGroupoid(constant_multisset({3}, a.object.level_at(0).names));
  }
  return NGroupoid(arrow_object(phi.carrier(), x, y).object);
}

int identity_arrow(const MultiSSet& c, int x) {
  const int n = c.arity();
  const int s0 = c.degen(MultiIndex(n, 0), 0, 0, x);
  const auto a = arrow_object(c, x, x);
  const auto& inc = a.inclusion[0];
  const auto it = std::find(inc.begin(), inc.end(), s0);
  if (it == inc.end()) throw std::logic_error("identity_arrow: s_0 x is not an arrow x -> x");
  return static_cast<int>(it - inc.begin());
}

MultiSSetMap arrow_map(const MultiSSetMap& f, int x, int y) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (S.arity() != T.arity()) throw std::invalid_argument("arrow_map: arities differ");
  const int fx = f.levels[0].at(x), fy = f.levels[0].at(y);
  auto sa = arrow_object(S, x, y);
  auto ta = arrow_object(T, fx, fy);
  const std::size_t per = outer_stride(S);
  std::vector<CellMap> levels(per);
  for (std::size_t k = 0; k < per; ++k) {
    std::map<int, int> pos;
    for (std::size_t j = 0; j < ta.inclusion[k].size(); ++j) pos[ta.inclusion[k][j]] = static_cast<int>(j);
    for (int cell : sa.inclusion[k]) {
      const auto it = pos.find(f.levels[per + k][cell]);
      if (it == pos.end()) throw std::logic_error("arrow_map: image leaves the arrow object");
      levels[k].push_back(it->second);
    }
  }
  return MultiSSetMap(std::make_shared<const MultiSSet>(std::move(sa.object)),
                      std::make_shared<const MultiSSet>(std::move(ta.object)), std::move(levels));
}

Pi0Set pi0_set(const MultiSSet& c) {
  const int n = c.arity();
  Pi0Set out;
  out.quotient.resize(object_count(c));
  std::iota(out.quotient.begin(), out.quotient.end(), 0);
  MultiSSet cur = c;
  for (int i = 0; i < n; ++i) {
    auto t = truncate_with_quotient(cur);
    for (int& v : out.quotient) v = t.quotient[0][v];
    cur = std::move(t.object);
  }
  out.classes = cur.level_at(0).names;
  return out;
}

Pi0Set pi0_set(const NGroupoid& phi) {
  phi.require_valid();
  return pi0_set(phi.carrier());
}

EquivalenceResult equivalence_of_carriers(const MultiSSetMap& f) {
  const int n = f.source->arity();
  if (f.target->arity() != n) throw std::invalid_argument("equivalence: arities differ");
  if (n == 0) {
    const auto& sn = f.source->level_at(0).names;
    const auto& tn = f.target->level_at(0).names;
    std::vector<int> pre(tn.size(), -1);
    for (std::size_t c = 0; c < sn.size(); ++c) {
      int& p = pre[f.levels[0][c]];
      if (p >= 0) {
        return {false, "not injective: '" + sn[p] + "' and '" + sn[c] + "' both map to '" + tn[f.levels[0][c]] + "'"};
      }
      p = static_cast<int>(c);
    }
    for (std::size_t t = 0; t < tn.size(); ++t)
      if (pre[t] < 0) return {false, "not surjective: '" + tn[t] + "' is not hit"};
    return {true, {}};
  }
  try {
    if (n == 1) {
      const auto ns = is_nerve_of_groupoid(SimplicialSet(*f.source));
      if (!ns.is_nerve) return {false, "source is not a groupoid nerve: " + ns.failures.front()};
      const auto nt = is_nerve_of_groupoid(SimplicialSet(*f.target));
      if (!nt.is_nerve) return {false, "target is not a groupoid nerve: " + nt.failures.front()};
      auto F = make_functor(std::make_shared<const FinGroupoid>(*ns.groupoid),
                            std::make_shared<const FinGroupoid>(*nt.groupoid), f.levels[0],
                            f.levels[f.source->flat_index({1})]);
      const auto vf = validate_functor(F);
      if (!vf.ok()) return {false, "not a functor: " + vf.violations.front().rule + " at " + vf.violations.front().where};
      return is_equivalence(F);
    }
    const auto p = T_power_map(f, n);
    std::vector<bool> hit(p.target->level_at(0).names.size(), false);
    for (int v : p.levels[0]) hit[v] = true;
    for (std::size_t t = 0; t < hit.size(); ++t)
      if (!hit[t]) return {false, "pi_0 not surjective: class of '" + p.target->level_at(0).names[t] + "' is not hit"};
    const int nobj = object_count(*f.source);
    const auto& sn = f.source->level_at(0).names;
    const auto& tn = f.target->level_at(0).names;
    for (int x = 0; x < nobj; ++x)
      for (int y = 0; y < nobj; ++y) {
        const auto r = equivalence_of_carriers(arrow_map(f, x, y));
        if (!r.equivalent) {
          return {false, "arrow object ('" + sn[x] + "','" + sn[y] + "') -> ('" + tn[f.levels[0][x]] + "','" +
                             tn[f.levels[0][y]] + "'): " + r.witness};
        }
      }
    return {true, {}};
  } catch (const std::logic_error& e) {
    return {false, std::string("recursion step failed: ") + e.what()};
  }
}

EquivalenceResult n_equivalence(const NFunctor& f) {
  if (f.source->arity() != f.target->arity()) throw std::invalid_argument("n_equivalence: arities differ");
  NGroupoid(f.source).require_valid();
  NGroupoid(f.target).require_valid();
  return equivalence_of_carriers(f);
}

namespace {

FinGroupoid truncated_groupoid(const MultiSSet& c) {
  const SimplicialSet t(T_power(c, c.arity() - 1));
  auto nr = is_nerve_of_groupoid(t);
  if (!nr.is_nerve) throw std::invalid_argument("G2 fails: " + nr.failures.front());
  return std::move(*nr.groupoid);
}

}  // namespace

FinGroup homotopy_group(const MultiSSet& c, int x, int i) {
  const int n = c.arity();
  if (i < 1 || i > n) {
    throw std::out_of_range("homotopy_group: degree " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  if (x < 0 || x >= object_count(c)) throw std::out_of_range("homotopy_group: no such object");
  if (i == 1) return automorphism_group(truncated_groupoid(c), x);
  const auto a = arrow_object(c, x, x);
  return homotopy_group(a.object, identity_arrow(c, x), i - 1);
}

FinGroup homotopy_group(const NGroupoid& phi, int x, int i) {
  phi.require_valid();
  return homotopy_group(phi.carrier(), x, i);
}

std::vector<int> induced_homotopy_map(const MultiSSetMap& f, int x, int i) {
  const int n = f.source->arity();
  if (i < 1 || i > n) throw std::out_of_range("induced_homotopy_map: degree out of range");
  if (i > 1) return induced_homotopy_map(arrow_map(f, x, x), identity_arrow(*f.source, x), i - 1);
  const auto tf = T_power_map(f, n - 1);
  const auto gs = truncated_groupoid(*f.source);
  const auto gt = truncated_groupoid(*f.target);
  const int y = f.levels[0].at(x);
  const auto hs = gs.hom(x, x);
  const auto ht = gt.hom(y, y);
  const auto& level1 = tf.levels[tf.source->flat_index({1})];
  std::vector<int> out;
  for (int m : hs) {
    const auto it = std::find(ht.begin(), ht.end(), level1[m]);
    if (it == ht.end()) throw std::logic_error("induced_homotopy_map: image is not an automorphism");
    out.push_back(static_cast<int>(it - ht.begin()));
  }
  return out;
}

std::string group_isomorphism_failure(const FinGroup& a, const FinGroup& b, const std::vector<int>& phi) {
  if (a.order() != b.order()) {
    return "orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
  }
  if (static_cast<int>(phi.size()) != a.order()) return "map has the wrong size";
  std::vector<bool> hit(b.order(), false);
  for (int v : phi) {
    if (v < 0 || v >= b.order()) return "map leaves the target";
    if (hit[v]) return "not injective at '" + b.name(v) + "'";
    hit[v] = true;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) {
        return "not a homomorphism at ('" + a.name(x) + "','" + a.name(y) + "')";
      }
  return {};
}

bool groups_isomorphic(const FinGroup& a, const FinGroup& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  auto element_order = [](const FinGroup& g, int x) {
    int k = 1;
    for (int p = x; p != g.unit(); p = g.mul(x, p)) ++k;
    return k;
  };
  // Greedy generating set of a.
  std::vector<int> gens;
  std::vector<bool> in_span(n, false);
  in_span[a.unit()] = true;
  auto close = [&](std::vector<bool>& span) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u = 0; u < n; ++u)
        if (span[u])
          for (int g : gens)
            if (!span[a.mul(g, u)]) span[a.mul(g, u)] = grew = true;
    }
  };
  for (int x = 0; x < n; ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    close(in_span);
  }
  std::vector<int> image(gens.size(), -1);
  auto extend = [&]() -> bool {
    std::vector<int> phi(n, -1);
    phi[a.unit()] = b.unit();
    std::vector<int> queue{a.unit()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int u = queue[q];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const int v = a.mul(gens[j], u);
        const int w = b.mul(image[j], phi[u]);
        if (phi[v] < 0) {
          phi[v] = w;
          queue.push_back(v);
        } else if (phi[v] != w) {
          return false;
        }
      }
    }
    return group_isomorphism_failure(a, b, phi).empty();
  };
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == gens.size()) return extend();
    const int order = element_order(a, gens[j]);
    for (int y = 0; y < n; ++y) {
      if (element_order(b, y) != order) continue;
      image[j] = y;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// unit checks

Report unit_check_n1(const FinGroupoid& g) {
  Report rep;
  rep.subject = "unit L: G -> Pi_1(N G)";
  const auto vg = validate_groupoid(g);
  if (!vg.ok()) {
    rep.add_error("input", "not a groupoid: " + vg.violations.front().rule + " at " + vg.violations.front().where);
    return rep;
  }
  const SimplicialSet x = nerve(g, 2);
  const FpGroupoid p = edge_path_groupoid(x);
  const auto index = edge_generator_index(x);
  std::vector<int> ev(p.generators.size(), -1);
  for (int f = 0; f < g.morphism_count(); ++f)
    if (index[f] >= 0) ev[index[f]] = f;

  // L on objects is the identity on names; on morphisms, the edge word.
  rep.add("L and ev are the identity on objects", p.objects == g.objects(),
          std::to_string(p.objects.size()) + " vs " + std::to_string(g.object_count()) + " objects");
  auto L = [&](int f) { return index[f] >= 0 ? Word{{index[f], false}} : Word{}; };
  auto eval = [&](const Word& w, int base) {
    int cur = g.identity(base);
    for (const auto& l : w) {
      const int m = l.inverse ? g.inverse(ev[l.generator]) : ev[l.generator];
      cur = g.compose(m, cur);
      if (cur < 0) return -1;
    }
    return cur;
  };
  auto mname = [&](int f) { return f < 0 ? std::string("<undefined>") : "'" + g.morphism(f).name + "'"; };

  std::string witness;
  for (const auto& r : p.relators) {
    const int lhs = eval(r.lhs, r.base), rhs = eval(r.rhs, r.base);
    if (lhs < 0 || lhs != rhs) {
      witness = "relator from 2-cell '" + r.origin + "': " + mname(lhs) + " != " + mname(rhs);
      break;
    }
  }
  rep.add("ev respects every relator (" + std::to_string(p.relators.size()) + " relators)", witness.empty(), witness);

  witness.clear();
  for (int f = 0; f < g.morphism_count() && witness.empty(); ++f) {
    const int back = eval(L(f), g.source(f));
    if (back != f) witness = "ev(L(" + mname(f) + ")) = " + mname(back);
  }
  rep.add("ev o L = id on morphisms", witness.empty(), witness);

  witness.clear();
  for (std::size_t e = 0; e < ev.size() && witness.empty(); ++e) {
    const Word back = free_reduce(L(ev[e]));
    if (back != Word{{static_cast<int>(e), false}}) witness = "L(ev(" + p.generators[e].name + ")) is not the generator";
  }
  rep.add("L o ev = id on generators", witness.empty(), witness);

  // L is a functor: each composable pair of non-identities is a relator.
  std::set<std::pair<std::vector<std::pair<int, bool>>, std::vector<std::pair<int, bool>>>> relator_set;
  auto key = [](const Word& w) {
    std::vector<std::pair<int, bool>> k;
    for (const auto& l : w) k.emplace_back(l.generator, l.inverse);
    return k;
  };
  for (const auto& r : p.relators) relator_set.emplace(key(r.lhs), key(r.rhs));
  witness.clear();
  for (int f = 0; f < g.morphism_count() && witness.empty(); ++f)
    for (int h = 0; h < g.morphism_count() && witness.empty(); ++h) {
      const int hf = g.compose(h, f);
      if (hf < 0 || index[f] < 0 || index[h] < 0) continue;
      Word rhs = L(f);
      rhs.push_back(L(h).front());
      if (!relator_set.count({key(L(hf)), key(rhs)})) {
        witness = "no relation L(" + mname(h) + " o " + mname(f) + ") = L(" + mname(f) + ") L(" + mname(h) + ")";
      }
    }
  rep.add("L preserves composition", witness.empty(), witness);

  witness.clear();
  const auto classes = iso_classes(g);
  for (int rep_obj : classes.representatives) {
    const auto lhs = group_invariants(vertex_group(p, rep_obj));
    const auto rhs = group_invariants(table_presentation(automorphism_group(g, rep_obj)));
    if (!(lhs == rhs)) {
      witness = "object '" + g.objects()[rep_obj] + "': edge-path " + to_string(lhs) + " vs Aut " + to_string(rhs);
      break;
    }
  }
  rep.add("vertex-group invariants equal Aut invariants", witness.empty(), witness);

  rep.notes.push_back("ev is a functor on the presentation and L, ev are mutually inverse, so L is an isomorphism");
  rep.notes.push_back("groups are compared by abelianization and homomorphism counts into the groups of order <= 8");
  rep.not_checked.push_back("pi_i for i >= 2 of the realization");
  return rep;
}

Report unit_invariants_n2(const NGroupoid& phi, int x) {
  Report rep;
  rep.subject = "(pi_0, pi_1) of a 2-groupoid vs its diagonal";
  if (phi.n() != 2) {
    rep.add_error("input", "expected a 2-groupoid, got n = " + std::to_string(phi.n()));
    return rep;
  }
  if (!phi.valid()) {
    const auto& v = phi.validation().violations.front();
    rep.add_error("input", "not a valid 2-groupoid: " + v.rule + ": " + v.where);
    return rep;
  }
  const auto objs = objects(phi);
  if (x < 0 || x >= static_cast<int>(objs.size())) {
    rep.add_error("input", "no object with index " + std::to_string(x));
    return rep;
  }
  const SimplicialSet d = total_diag(phi.carrier());
  const Partition pd = pi0(d);
  const Pi0Set ps = pi0_set(phi);
  rep.add("|pi_0(diag)| = |pi_0(Phi)|", pd.class_count() == static_cast<int>(ps.classes.size()),
          std::to_string(pd.class_count()) + " vs " + std::to_string(ps.classes.size()));
  rep.add("pi_0 partitions of the objects agree", canonical_classes(pd.class_of) == canonical_classes(ps.quotient),
          std::to_string(objs.size()) + " objects");
  const auto lhs = group_invariants(vertex_group(edge_path_groupoid(d), x));
  const auto rhs = group_invariants(table_presentation(homotopy_group(phi, x, 1)));
  rep.add("pi_1 invariants at '" + objs[x] + "'", lhs == rhs, "diag " + to_string(lhs) + " vs pi_1 " + to_string(rhs));
  rep.notes.push_back("groups are compared by abelianization and homomorphism counts into the groups of order <= 8");
  rep.not_checked.push_back("pi_2 and higher");
  return rep;
}

// ---------------------------------------------------------------------------

MultiSSet lift_carrier(const MultiSSet& x, int bound) {
  return external_product(x, terminal_multisset({bound}));
}

MultiSSetMap lift_map(const MultiSSetMap& f, int bound) {
  auto src = std::make_shared<const MultiSSet>(lift_carrier(*f.source, bound));
  auto tgt = std::make_shared<const MultiSSet>(lift_carrier(*f.target, bound));
  std::vector<CellMap> levels;
  for (const auto& lv : f.levels)
    for (int k = 0; k <= bound; ++k) levels.push_back(lv);
  return MultiSSetMap(src, tgt, std::move(levels));
}

namespace {

using Matrix = std::vector<int>;  // k rows of m entries, row-major

Matrix chain_face_rows(const FinGroup& a, const Matrix& key, int m, int k, int i) {
  // Rows are chains of length m; apply d_i to each.
  Matrix out;
  for (int r = 0; r < k; ++r) {
    const int* row = key.data() + static_cast<std::size_t>(r) * m;
    for (int j = 0; j < m; ++j) {
      if (i == 0 && j == 0) continue;
      if (i == m && j == m - 1) continue;
      if (i > 0 && i < m && j == i) continue;
      out.push_back(i > 0 && i < m && j == i - 1 ? a.mul(row[i], row[i - 1]) : row[j]);
    }
  }
  return out;
}

Matrix chain_degen_rows(const FinGroup& a, const Matrix& key, int m, int k, int i) {
  Matrix out;
  for (int r = 0; r < k; ++r) {
    const int* row = key.data() + static_cast<std::size_t>(r) * m;
    for (int j = 0; j < i; ++j) out.push_back(row[j]);
    out.push_back(a.unit());
    for (int j = i; j < m; ++j) out.push_back(row[j]);
  }
  return out;
}

Matrix chain_face_cols(const FinGroup& a, const Matrix& key, int m, int k, int i) {
  // The matrix is a chain of k rows in A^m; apply d_i.
  Matrix out;
  for (int r = 0; r < k; ++r) {
    if (i == 0 && r == 0) continue;
    if (i == k && r == k - 1) continue;
    if (i > 0 && i < k && r == i) continue;
    for (int j = 0; j < m; ++j) {
      const int v = key[static_cast<std::size_t>(r) * m + j];
      out.push_back(i > 0 && i < k && r == i - 1 ? a.mul(key[static_cast<std::size_t>(i) * m + j], v) : v);
    }
  }
  return out;
}

Matrix chain_degen_cols(const FinGroup& a, const Matrix& key, int m, int k, int i) {
  Matrix out(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(i) * m);
  for (int j = 0; j < m; ++j) out.push_back(a.unit());
  out.insert(out.end(), key.begin() + static_cast<std::ptrdiff_t>(i) * m, key.end());
  (void)k;
  return out;
}

std::vector<Matrix> all_matrices(int entries, int q) {
  std::vector<Matrix> out;
  Matrix cur(entries, 0);
  while (true) {
    out.push_back(cur);
    int j = entries - 1;
    while (j >= 0 && cur[j] == q - 1) cur[j--] = 0;
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

int matrix_rank(const Matrix& key, int q) {
  int r = 0;
  for (int v : key) r = r * q + v;
  return r;
}

}  // namespace

MultiSSet k_a2_carrier(const FinGroup& a, int outer_bound, int inner_bound) {
  if (!a.is_abelian()) throw std::invalid_argument("k_a2_carrier: group is not abelian");
  if (outer_bound < 0 || inner_bound < 0) throw std::invalid_argument("k_a2_carrier: negative bound");
  const int q = a.order();
  return detail::build_multisset<Matrix>(
      {outer_bound, inner_bound}, [&](const MultiIndex& at) { return all_matrices(at[0] * at[1], q); },
      [&](const MultiIndex& at, const Matrix& key) {
        if (key.empty()) return std::string("*");
        std::string s;
        for (int r = 0; r < at[1]; ++r) {
          if (r) s += ";";
          for (int j = 0; j < at[0]; ++j) s += (j ? "," : "") + a.name(key[static_cast<std::size_t>(r) * at[0] + j]);
        }
        return s;
      },
      [&](const MultiIndex& at, int axis, int i, const Matrix& key) {
        return axis == 0 ? chain_face_rows(a, key, at[0], at[1], i) : chain_face_cols(a, key, at[0], at[1], i);
      },
      [&](const MultiIndex& at, int axis, int i, const Matrix& key) {
        return axis == 0 ? chain_degen_rows(a, key, at[0], at[1], i) : chain_degen_cols(a, key, at[0], at[1], i);
      });
}

MultiSSetMap k_a2_map(const FinGroup& a, const FinGroup& b, const std::vector<int>& phi, int outer_bound,
                      int inner_bound) {
  if (static_cast<int>(phi.size()) != a.order()) throw std::invalid_argument("k_a2_map: map has the wrong size");
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) throw std::invalid_argument("k_a2_map: not a homomorphism");
  auto src = std::make_shared<const MultiSSet>(k_a2_carrier(a, outer_bound, inner_bound));
  auto tgt = std::make_shared<const MultiSSet>(k_a2_carrier(b, outer_bound, inner_bound));
  std::vector<CellMap> levels;
  for (const auto& at : all_indices({outer_bound, inner_bound})) {
    CellMap cm;
    for (auto key : all_matrices(at[0] * at[1], a.order())) {
      for (int& v : key) v = phi[v];
      cm.push_back(matrix_rank(key, b.order()));
    }
    levels.push_back(std::move(cm));
  }
  return MultiSSetMap(src, tgt, std::move(levels));
}

}  // namespace ngpd
