#include "ngpd/verify.hpp"

#include <map>
#include <stdexcept>

namespace ngpd {

namespace {

std::vector<int> canonical_classes(const std::vector<int>& class_of) {
  std::map<int, int> renumber;
  std::vector<int> out;
  out.reserve(class_of.size());
  for (int c : class_of) out.push_back(renumber.emplace(c, static_cast<int>(renumber.size())).first->second);
  return out;
}

// Presentation structure without generator names, for memoizing invariants.
std::string structure_key(const FpGroup& p) {
  std::string k = std::to_string(p.generator_count()) + ":";
  for (const auto& r : p.relators) {
    for (const auto& l : r) k += std::to_string(l.generator) + (l.inverse ? "-" : "+");
    k += ";";
  }
  return k;
}

class InvariantCache {
 public:
  const GroupInvariants& get(const FpGroup& p) {
    auto key = structure_key(p);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), group_invariants(p)).first;
    return it->second;
  }

 private:
  std::map<std::string, GroupInvariants> cache_;
};

struct Restriction {
  SimplicialSet object;
  std::vector<CellMap> inclusion;
};

// Sub-simplicial set on the cells with keep[k][c]; must be closed under the
// structure maps.
Restriction restrict_sset(const SimplicialSet& x, const std::vector<std::vector<bool>>& keep) {
  const int D = x.dim_bound();
  std::vector<std::vector<int>> position(D + 1);
  Restriction out;
  out.inclusion.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    position[k].assign(x.cell_count(k), -1);
    for (int c = 0; c < x.cell_count(k); ++c)
      if (keep[k][c]) {
        position[k][c] = static_cast<int>(out.inclusion[k].size());
        out.inclusion[k].push_back(c);
      }
  }
  std::vector<MultiSSet::Level> levels(D + 1);
  for (int k = 0; k <= D; ++k) {
    auto& lvl = levels[k];
    lvl.face.resize(1);
    lvl.degen.resize(1);
    for (int c : out.inclusion[k]) lvl.names.push_back(x.name(k, c));
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_face = pass == 0;
      if (is_face ? k == 0 : k == D) continue;
      const auto& to = position[is_face ? k - 1 : k + 1];
      for (int i = 0; i <= k; ++i) {
        CellMap cm;
        for (int c : out.inclusion[k]) {
          const int image = to[is_face ? x.face(k, i, c) : x.degen(k, i, c)];
          if (image < 0) throw std::logic_error("restriction is not closed under structure maps");
          cm.push_back(image);
        }
        (is_face ? lvl.face[0] : lvl.degen[0]).push_back(std::move(cm));
      }
    }
  }
  out.object = SimplicialSet(MultiSSet({D}, std::move(levels)));
  return out;
}

std::string vertex_name(const SimplicialSet& x, int v) { return "'" + x.name(0, v) + "'"; }

bool same_tables(const MultiSSet& a, const MultiSSet& b) {
  if (a.dim_bounds() != b.dim_bounds()) return false;
  for (std::size_t f = 0; f < a.level_count(); ++f) {
    const auto& la = a.level_at(f);
    const auto& lb = b.level_at(f);
    if (la.names.size() != lb.names.size() || la.face != lb.face || la.degen != lb.degen) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

ComponentDecomposition components_decomposition(const SimplicialSet& x) {
  const Partition p = pi0(x);
  const int D = x.dim_bound();
  ComponentDecomposition out;
  out.base = std::make_shared<const SimplicialSet>(x);
  std::vector<std::vector<int>> cls(D + 1);
  for (int k = 0; k <= D; ++k)
    for (int c = 0; c < x.cell_count(k); ++c) cls[k].push_back(p.class_of[x.vertex(k, c, 0)]);
  for (int comp = 0; comp < p.class_count(); ++comp) {
    std::vector<std::vector<bool>> keep(D + 1);
    for (int k = 0; k <= D; ++k)
      for (int c = 0; c < x.cell_count(k); ++c) keep[k].push_back(cls[k][c] == comp);
    auto r = restrict_sset(x, keep);
    out.components.push_back(std::move(r.object));
    out.inclusions.push_back(std::move(r.inclusion));
    out.pr2.push_back(comp);
  }
  // The disjoint union, components in order.
  std::vector<MultiSSet::Level> levels(D + 1);
  std::vector<CellMap> pr1(D + 1);
  for (int k = 0; k <= D; ++k) {
    auto& lvl = levels[k];
    lvl.face.resize(1);
    lvl.degen.resize(1);
    std::vector<int> offset_here, offset_down, offset_up;
    int here = 0, down = 0, up = 0;
    for (const auto& c : out.components) {
      offset_here.push_back(here);
      offset_down.push_back(down);
      offset_up.push_back(up);
      here += c.cell_count(k);
      if (k > 0) down += c.cell_count(k - 1);
      if (k < D) up += c.cell_count(k + 1);
    }
    for (std::size_t comp = 0; comp < out.components.size(); ++comp) {
      const auto& c = out.components[comp];
      for (int cell = 0; cell < c.cell_count(k); ++cell) {
        lvl.names.push_back(std::to_string(comp) + "." + c.name(k, cell));
        pr1[k].push_back(out.inclusions[comp][k][cell]);
      }
    }
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_face = pass == 0;
      if (is_face ? k == 0 : k == D) continue;
      for (int i = 0; i <= k; ++i) {
        CellMap cm;
        for (std::size_t comp = 0; comp < out.components.size(); ++comp) {
          const auto& c = out.components[comp];
          const int off = is_face ? offset_down[comp] : offset_up[comp];
          for (int cell = 0; cell < c.cell_count(k); ++cell) {
            cm.push_back(off + (is_face ? c.face(k, i, cell) : c.degen(k, i, cell)));
          }
        }
        (is_face ? lvl.face[0] : lvl.degen[0]).push_back(std::move(cm));
      }
    }
  }
  auto disjoint = std::make_shared<const SimplicialSet>(MultiSSet({D}, std::move(levels)));
  out.pr1 = SSetMap(disjoint, out.base, std::move(pr1));
  return out;
}

FDecompositionResult check_pr_weak_equiv(const SimplicialSet& x) {
  FDecompositionResult res;
  Report& rep = res.report;
  rep.subject = "F(X) decomposition: pr1 and pr2";
  if (x.dim_bound() < 2) {
    rep.add_error("input", "dim_bound " + std::to_string(x.dim_bound()) + " < 2: vertex groups need 2-cells");
    return res;
  }
  const auto dec = components_decomposition(x);
  const Partition p = pi0(x);
  res.component_count = static_cast<int>(dec.components.size());
  const auto& u = *dec.pr1.source;

  rep.add("pr1 commutes with structure maps", validate_sset_map(dec.pr1).ok());
  rep.add("pr1 is a levelwise bijection", dec.pr1.as_multi().is_levelwise_bijective());
  rep.add("component count equals union-find pi_0", res.component_count == p.class_count(),
          std::to_string(res.component_count) + " components, " + std::to_string(p.class_count()) + " classes");

  // pi_0 of the disjoint union maps bijectively onto pi_0(X).
  const Partition pu = pi0(u);
  std::vector<int> image(pu.class_count(), -1);
  std::string witness;
  for (int v = 0; v < u.cell_count(0) && witness.empty(); ++v) {
    const int target = p.class_of[dec.pr1(0, v)];
    int& slot = image[pu.class_of[v]];
    if (slot >= 0 && slot != target) witness = "class of " + vertex_name(u, v) + " maps to two classes";
    slot = target;
  }
  std::vector<int> hits(p.class_count(), 0);
  for (int t : image) ++hits[t];
  for (int c = 0; c < p.class_count() && witness.empty(); ++c)
    if (hits[c] != 1) witness = "class of " + vertex_name(x, p.representatives[c]) + " has " + std::to_string(hits[c]) + " preimages";
  rep.add("pr1 induces a bijection on pi_0", witness.empty(), witness);

  // Vertex groups of each component agree with those of X.
  const FpGroupoid px = edge_path_groupoid(x);
  InvariantCache cache;
  bool all_trivial = true;
  witness.clear();
  std::string collapse;
  for (std::size_t comp = 0; comp < dec.components.size(); ++comp) {
    const auto& c = dec.components[comp];
    const int base_vertex = dec.inclusions[comp][0][0];
    const FpGroup in_component = vertex_group(edge_path_groupoid(c), 0);
    const FpGroup in_base = vertex_group(px, base_vertex);
    if (witness.empty() && !(in_component == in_base)) {
      witness = "component " + std::to_string(comp) + " at " + vertex_name(x, base_vertex) + ": presentations differ";
    }
    if (collapse.empty()) {
      if (pi0(c).class_count() != 1) collapse = "component " + std::to_string(comp) + " is not connected";
      else if (dec.pr2[comp] != p.class_of[base_vertex]) collapse = "pr2 sends component " + std::to_string(comp) + " to the wrong class";
    }
    if (all_trivial && !cache.get(in_component).trivial()) all_trivial = false;
  }
  rep.add("pr1 preserves vertex-group presentations", witness.empty(), witness);
  rep.add("pr2 collapses each component to its pi_0 point", collapse.empty(), collapse);
  res.zero_truncated = all_trivial;
  rep.notes.push_back(std::string("0-truncated: ") + (all_trivial ? "yes" : "no") +
                      " (judged by the vertex-group invariants of each component)");
  rep.notes.push_back("pr1 is an isomorphism of simplicial sets; the topology of pi_0 has no combinatorial counterpart");
  return res;
}

WeakEquivCertificate weak_equiv_certificate(const SSetMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (s.dim_bound() < 2 || t.dim_bound() < 2) throw std::invalid_argument("certificate: need 2-cells");
  WeakEquivCertificate cert;
  const Partition ps = pi0(s), pt = pi0(t);
  std::vector<int> image(ps.class_count(), -1);
  std::vector<int> hits(pt.class_count(), 0);
  for (int c = 0; c < ps.class_count(); ++c) ++hits[image[c] = pt.class_of[f(0, ps.representatives[c])]];
  cert.pi0_bijection = true;
  for (int c = 0; c < pt.class_count(); ++c) {
    if (hits[c] != 1) {
      cert.pi0_bijection = false;
      cert.witness = "pi_0: class of " + vertex_name(t, pt.representatives[c]) + " has " + std::to_string(hits[c]) +
                     " preimages";
      break;
    }
  }
  const FpGroupoid es = edge_path_groupoid(s), et = edge_path_groupoid(t);
  InvariantCache cache;
  cert.invariants_equal = true;
  for (int c = 0; c < ps.class_count(); ++c) {
    const int x = ps.representatives[c];
    const auto& a = cache.get(vertex_group(es, x));
    const auto b = cache.get(vertex_group(et, f(0, x)));
    if (!(a == b)) {
      cert.invariants_equal = false;
      if (cert.witness.empty()) {
        cert.witness = "vertex group at " + vertex_name(s, x) + ": " + to_string(a) + " vs at " +
                       vertex_name(t, f(0, x)) + ": " + to_string(b);
      }
      break;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------

Report segal_pi0_law(const MultiSSet& phi) {
  Report rep;
  rep.subject = "pi_0(diag Phi) vs T(pi_0 Phi)";
  if (phi.arity() != 2) {
    rep.add_error("input", "expected a 2-fold object, got arity " + std::to_string(phi.arity()));
    return rep;
  }
  const auto v = validate_multisset(phi);
  if (!v.ok()) {
    rep.add_error("input", "not a 2-fold simplicial set: " + v.violations.front().rule + " at " + v.violations.front().where);
    return rep;
  }
  if (phi.dim_bound(0) < 1 || phi.dim_bound(1) < 1) {
    rep.add_error("input", "both dim_bounds must be >= 1");
    return rep;
  }
  struct Sides {
    std::vector<int> diag, truncated;
  };
  auto compute = [](const MultiSSet& x) {
    Sides s;
    s.diag = pi0(total_diag(x)).class_of;
    const auto tr = truncate_with_quotient(x);
    const Partition q = pi0(SimplicialSet(tr.object));
    for (int c : tr.quotient[0]) s.truncated.push_back(q.class_of[c]);
    return s;
  };
  const Sides s = compute(phi);
  const int nv = static_cast<int>(s.diag.size());
  const auto& names = phi.level_at(0).names;
  std::string not_defined, not_injective;
  std::map<int, int> forward, backward;
  for (int x = 0; x < nv; ++x) {
    auto [fi, fnew] = forward.emplace(s.diag[x], s.truncated[x]);
    if (!fnew && fi->second != s.truncated[x] && not_defined.empty()) {
      not_defined = "'" + names[x] + "' lies in a diagonal class sent to two T-classes";
    }
    auto [bi, bnew] = backward.emplace(s.truncated[x], s.diag[x]);
    if (!bnew && bi->second != s.diag[x] && not_injective.empty()) {
      not_injective = "'" + names[x] + "' lies in a T-class hit by two diagonal classes";
    }
  }
  rep.add("canonical map pi_0(diag) -> T(pi_0 Phi) is well defined", not_defined.empty(), not_defined);
  rep.add("canonical map is a bijection", not_injective.empty(),
          std::to_string(forward.size()) + " vs " + std::to_string(backward.size()) + " classes");
  const Sides swapped = compute(permute_axes(phi, {1, 0}));
  rep.add("same partition with the axes swapped",
          canonical_classes(swapped.diag) == canonical_classes(s.diag) &&
              canonical_classes(swapped.truncated) == canonical_classes(s.truncated),
          "axis order changes the partition");
  std::string bij;
  std::map<int, int> first;
  for (int x = 0; x < nv; ++x) first.emplace(s.diag[x], x);
  for (const auto& [cls, x] : first) {
    int t_rep = x;
    for (int y = 0; y < nv; ++y)
      if (s.truncated[y] == s.truncated[x]) {
        t_rep = y;
        break;
      }
    bij += (bij.empty() ? "" : ", ") + ("[" + names[x] + "] -> [" + names[t_rep] + "]");
  }
  rep.notes.push_back("bijection: " + bij);
  return rep;
}

std::vector<LevelCertificate> levelwise_certificates(const MultiSSetMap& t) {
  if (t.source->arity() != 2) throw std::invalid_argument("levelwise certificates need a map of 2-fold objects");
  std::vector<LevelCertificate> out;
  for (int m = 0; m <= t.source->dim_bound(0); ++m) {
    out.push_back({m, weak_equiv_certificate(SSetMap::from_multi(outer_level_map(t, m)))});
  }
  return out;
}

Report levelwise_equiv_to_diag(const MultiSSetMap& t, const std::vector<LevelCertificate>& certificates) {
  Report rep;
  rep.subject = "levelwise weak equivalence -> diagonal";
  if (t.source->arity() != 2) {
    rep.add_error("input", "expected a map of 2-fold objects");
    return rep;
  }
  const auto derived = levelwise_certificates(t);
  for (const auto& d : derived) {
    const LevelCertificate* given = nullptr;
    for (const auto& c : certificates)
      if (c.m == d.m) given = &c;
    const std::string id = "certificate m=" + std::to_string(d.m);
    if (!given) {
      rep.add_error(id, "missing certificate for outer level " + std::to_string(d.m));
      return rep;
    }
    if (!(*given == d)) {
      rep.add_error(id, "certificate does not match the map at outer level " + std::to_string(d.m));
      return rep;
    }
    if (!d.certificate.ok()) {
      rep.add_error(id, "precondition fails at outer level " + std::to_string(d.m) + ": " + d.certificate.witness);
      return rep;
    }
    rep.add(id, true, "pi_0 bijection and equal vertex-group invariants");
  }
  const auto diag = weak_equiv_certificate(total_diag(t));
  rep.add("pi_0(diag t) is a bijection", diag.pi0_bijection, diag.witness);
  rep.add("vertex-group invariants of the diagonals agree", diag.invariants_equal, diag.witness);
  rep.notes.push_back("groups are compared by abelianization and homomorphism counts into the groups of order <= 8");
  rep.not_checked.push_back("pi_i for i >= 2 of the diagonal");
  return rep;
}

bool diag_fiber_product_check(const MultiSSetMap& f, const MultiSSetMap& g, std::string* witness) {
  auto fail = [&](std::string why) {
    if (witness) *witness = std::move(why);
    return false;
  };
  const FiberProduct fp = fiber_product(f, g);
  const SimplicialSet lhs = total_diag(*fp.object);
  const SSetFiberProduct rhs = fiber_product(total_diag(f), total_diag(g));
  const auto& r = *rhs.object;
  if (lhs.dim_bound() != r.dim_bound()) return fail("dim_bounds differ");
  for (int k = 0; k <= lhs.dim_bound(); ++k) {
    if (lhs.level({k}).names != r.level({k}).names) return fail("cells differ at level " + std::to_string(k));
    if (!(lhs.level({k}) == r.level({k}))) return fail("structure maps differ at level " + std::to_string(k));
  }
  if (total_diag(fp.pr1).levels != rhs.pr1.levels) return fail("first projections differ");
  if (total_diag(fp.pr2).levels != rhs.pr2.levels) return fail("second projections differ");
  if (witness) witness->clear();
  return true;
}

PObject p_object(const MultiSSet& phi) {
  if (phi.arity() < 2) throw std::invalid_argument("p_object: arity must be >= 2");
  const auto tower = outer_tower(phi);
  PObject p;
  const int B = phi.dim_bound(0);
  for (int m = 0; m <= B; ++m) p.levels.push_back(std::make_shared<const SimplicialSet>(total_diag(*tower.levels[m])));
  p.face.resize(B + 1);
  p.degen.resize(B + 1);
  for (int m = 0; m <= B; ++m) {
    for (const auto& f : tower.face[m]) p.face[m].emplace_back(p.levels[m], p.levels[m - 1], total_diag(f).levels);
    for (const auto& s : tower.degen[m]) p.degen[m].emplace_back(p.levels[m], p.levels[m + 1], total_diag(s).levels);
  }
  return p;
}

Report segal_report_for_P(const NGroupoid& phi) {
  Report rep;
  rep.subject = "P(Phi) is a Segal space";
  if (phi.n() < 2) {
    rep.add_error("input", "expected n >= 2, got n = " + std::to_string(phi.n()));
    return rep;
  }
  if (!phi.valid()) {
    const auto& v = phi.validation().violations.front();
    rep.add_error("input", "not a valid " + std::to_string(phi.n()) + "-groupoid: " + v.rule + ": " + v.where);
    return rep;
  }
  const MultiSSet& x = phi.carrier();
  const PObject P = p_object(x);
  const int B = x.dim_bound(0);
  rep.add("(P Phi)_0 is discrete and constant", is_constant(*P.levels[0]));
  if (B >= 1) {
    // Iterated fiber product P_1 x_{P_0} ... x_{P_0} P_1 for comparison.
    auto p1 = std::make_shared<const MultiSSet>(*P.levels[1]);
    MultiSSetMap d0 = P.face[1][0].as_multi(), d1 = P.face[1][1].as_multi();
    MultiSSetMap last_target = d0;
    for (int m = 2; m <= B; ++m) {
      const std::string tag = "m=" + std::to_string(m) + ": ";
      const FiberProduct fp = fiber_product(last_target, d1);
      last_target = compose(fp.pr2, d0);
      const SSetMap seg = total_diag(outer_segal_map(x, m));
      rep.add(tag + "spine target equals the iterated fiber product over (P Phi)_0",
              same_tables(*seg.target, *fp.object));
      const auto cert = weak_equiv_certificate(seg);
      rep.add(tag + "Segal map induces a pi_0 bijection", cert.pi0_bijection, cert.witness);
      rep.add(tag + "Segal map preserves vertex-group invariants", cert.invariants_equal, cert.witness);
    }
    // T(pi_0 P): classes of P_0 vertices glued along pi_0(P_1).
    const Partition q0 = pi0(*P.levels[0]);
    const Partition q1 = pi0(*P.levels[1]);
    DisjointSets ds(q0.class_count());
    for (int v : q1.representatives) ds.unite(q0.class_of[P.face[1][0](0, v)], q0.class_of[P.face[1][1](0, v)]);
    const Partition glued = ds.partition();
    std::vector<int> lhs;
    for (int c : q0.class_of) lhs.push_back(glued.class_of[c]);
    const Pi0Set rhs = pi0_set(phi);
    rep.add("T(pi_0 P Phi) = T^n Phi with quotient maps", canonical_classes(lhs) == canonical_classes(rhs.quotient),
            std::to_string(glued.class_count()) + " vs " + std::to_string(rhs.classes.size()) + " classes");
  }
  rep.notes.push_back("realization of outer levels is the total diagonal");
  return rep;
}

}  // namespace ngpd
