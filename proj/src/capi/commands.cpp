#include "commands.hpp"

#include <algorithm>

#include "ngpd/fp_group.hpp"
#include "ngpd/ngroupoid.hpp"
#include "ngpd/simplicial_set.hpp"
#include "ngpd/verify.hpp"

namespace ngpd::commands {

namespace {

constexpr int kDefaultNerveBound = 3;

const char* kind_name(const Document& d) { return to_string(d.kind); }

[[noreturn]] void wrong_kind(const std::string& verb, const Document& d, const std::string& expected) {
  throw UsageError(verb + ": expected " + expected + ", got a " + kind_name(d) + " document");
}

Report start(const std::string& verb, const Document& d) {
  Report r;
  r.subject = verb + " " + (d.metadata.name.empty() ? std::string(kind_name(d)) : d.metadata.name);
  return r;
}

void add_validation(Report& r, const std::string& id, const ValidationReport& v) {
  if (v.ok()) {
    r.add(id, true);
    return;
  }
  for (const auto& x : v.violations) r.add(id + ": " + x.rule, false, x.where);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string class_note(const std::vector<std::string>& names, const Partition& p) {
  std::vector<std::string> out;
  for (const auto& cls : p.classes()) {
    std::vector<std::string> members;
    for (int x : cls) members.push_back(names[x]);
    out.push_back("{" + join(members, ", ") + "}");
  }
  return std::to_string(p.class_count()) + " class(es): " + join(out, " ");
}

std::string describe(const FinGroup& g) {
  return "order " + std::to_string(g.order()) + ", " + (g.is_abelian() ? "abelian" : "nonabelian") + ", " +
         to_string(group_invariants(table_presentation(g)));
}

/// Object indices to report on: the --object one, else one per pi_0 class.
std::vector<int> chosen_objects(int count, const std::vector<int>& representatives, const Options& o) {
  if (o.object < 0) return representatives;
  if (o.object >= count) throw UsageError("--object " + std::to_string(o.object) + " out of range");
  return {o.object};
}

NGroupoid require_ngroupoid(const std::string& verb, const Document& d) {
  if (d.kind != DocumentKind::ngroupoid && d.kind != DocumentKind::multisset)
    wrong_kind(verb, d, "an ngroupoid or multisset");
  return NGroupoid(d.carrier());
}

std::vector<int> class_representatives(const Pi0Set& p) {
  std::vector<int> reps(p.classes.size(), -1);
  for (std::size_t x = 0; x < p.quotient.size(); ++x)
    if (reps[p.quotient[x]] < 0) reps[p.quotient[x]] = static_cast<int>(x);
  return reps;
}

std::string spine_names(const SimplicialSet& x, const std::vector<int>& edges) {
  std::vector<std::string> names;
  for (int e : edges) names.push_back(x.name(1, e));
  return "(" + join(names, ", ") + ")";
}

Report segal_sset(const SimplicialSet& x, const Options& o, Report r) {
  int top = x.dim_bound();
  if (o.dim_bound > 0) top = std::min(top, o.dim_bound);
  if (top < 2) {
    r.add_error("Segal maps", "need dim_bound >= 2");
    return r;
  }
  for (int m = 2; m <= top; ++m) {
    const SegalMap s = segal_map(x, m);
    const std::string id = "Segal map at m=" + std::to_string(m) + " is a bijection";
    if (auto c = s.collision())
      r.add(id, false, "cells " + x.name(m, c->first) + " and " + x.name(m, c->second) + " have the same spine");
    else if (auto u = s.unfilled())
      r.add(id, false, "spine " + spine_names(x, *u) + " has no filler");
    else
      r.add(id, true);
  }
  if (top >= 3) {
    const NerveReport n = is_nerve_of_groupoid(x);
    r.add("nerve of a groupoid", n.is_nerve, join(n.failures, "; "));
    if (n.groupoid)
      r.notes.push_back("reconstructed groupoid: " + std::to_string(n.groupoid->object_count()) + " objects, " +
                        std::to_string(n.groupoid->morphism_count()) + " morphisms");
  } else {
    r.not_checked.push_back("nerve recognition (needs dim_bound >= 3)");
  }
  return r;
}

}  // namespace

Report validate(const Document& d, const Options&) {
  Report r = start("validate", d);
  switch (d.kind) {
    case DocumentKind::sset:
      add_validation(r, "simplicial identities", validate_sset(d.sset()));
      break;
    case DocumentKind::multisset:
      add_validation(r, "multisimplicial identities", validate_multisset(d.carrier()));
      break;
    case DocumentKind::ngroupoid:
      add_validation(r, "multisimplicial identities", validate_multisset(d.carrier()));
      add_validation(r, "n-groupoid axioms", validate_ngroupoid(d.carrier()));
      break;
    case DocumentKind::groupoid:
      add_validation(r, "groupoid axioms", validate_groupoid(d.groupoid()));
      break;
    case DocumentKind::functor:
      add_validation(r, "source groupoid", validate_groupoid(*d.functor().source));
      add_validation(r, "target groupoid", validate_groupoid(*d.functor().target));
      add_validation(r, "functor", validate_functor(d.functor()));
      break;
    case DocumentKind::nfunctor:
      add_validation(r, "source", validate_multisset(*d.map().source));
      add_validation(r, "target", validate_multisset(*d.map().target));
      add_validation(r, "structure maps commute", validate_map(d.map()));
      break;
  }
  return r;
}

Report pi0(const Document& d, const Options&) {
  Report r = start("pi0", d);
  switch (d.kind) {
    case DocumentKind::sset: {
      const SimplicialSet x = d.sset();
      std::vector<std::string> names;
      for (int v = 0; v < x.cell_count(0); ++v) names.push_back(x.name(0, v));
      r.add("pi_0 by union-find over 1-cells", true);
      r.notes.push_back(class_note(names, ngpd::pi0(x)));
      break;
    }
    case DocumentKind::multisset: {
      const SimplicialSet x = total_diag(d.carrier());
      std::vector<std::string> names;
      for (int v = 0; v < x.cell_count(0); ++v) names.push_back(x.name(0, v));
      r.add("pi_0 of the diagonal", true);
      r.notes.push_back(class_note(names, ngpd::pi0(x)));
      break;
    }
    case DocumentKind::groupoid:
      r.add("isomorphism classes", true);
      r.notes.push_back(class_note(d.groupoid().objects(), iso_classes(d.groupoid())));
      break;
    case DocumentKind::ngroupoid: {
      const NGroupoid phi(d.carrier());
      if (!phi.valid()) {
        r.add_error("pi_0 set", "not a valid n-groupoid: " + phi.validation().violations[0].rule);
        break;
      }
      const Pi0Set p = pi0_set(phi);
      r.add("T^n quotient of the objects", true);
      r.notes.push_back(std::to_string(p.classes.size()) + " class(es): " + join(p.classes, ", "));
      break;
    }
    default:
      wrong_kind("pi0", d, "an sset, multisset, groupoid or ngroupoid");
  }
  return r;
}

Report pi1(const Document& d, const Options& o) {
  Report r = start("pi1", d);
  switch (d.kind) {
    case DocumentKind::sset: {
      const SimplicialSet x = d.sset();
      if (x.dim_bound() < 2) {
        r.add_error("edge-path groupoid", "relations need 2-cells (dim_bound >= 2)");
        break;
      }
      const FpGroupoid p = edge_path_groupoid(x);
      add_validation(r, "edge-path presentation", validate_fp_groupoid(p));
      for (int v : chosen_objects(x.cell_count(0), ngpd::pi0(x).representatives, o)) {
        const FpGroup g = vertex_group(p, v);
        std::vector<std::string> rel;
        for (const auto& w : g.relators) rel.push_back(word_to_string(w, g.generators));
        r.notes.push_back("pi_1 at " + x.name(0, v) + ": <" + join(g.generators, ", ") + " | " + join(rel, ", ") +
                          ">, " + to_string(group_invariants(g)));
      }
      r.not_checked.push_back("pi_i for i >= 2");
      break;
    }
    case DocumentKind::groupoid: {
      const FinGroupoid& g = d.groupoid();
      add_validation(r, "groupoid axioms", validate_groupoid(g));
      if (!r.passed()) break;
      for (int x : chosen_objects(g.object_count(), iso_classes(g).representatives, o))
        r.notes.push_back("Aut(" + g.objects()[x] + "): " + describe(automorphism_group(g, x)));
      break;
    }
    case DocumentKind::ngroupoid: {
      Options one = o;
      one.level = 1;
      Report q = ngpd_pi(d, one);
      q.subject = r.subject;
      return q;
    }
    default:
      wrong_kind("pi1", d, "an sset, groupoid or ngroupoid");
  }
  return r;
}

Report segal(const Document& d, const Options& o) {
  Report r = start("segal", d);
  switch (d.kind) {
    case DocumentKind::sset:
      return segal_sset(d.sset(), o, std::move(r));
    case DocumentKind::multisset:
      if (d.carrier().arity() != 2) throw UsageError("segal: multisset documents must have arity 2");
      r.merge(segal_pi0_law(d.carrier()), "");
      return r;
    case DocumentKind::ngroupoid:
      r.merge(segal_report_for_P(NGroupoid(d.carrier())), "");
      return r;
    default:
      wrong_kind("segal", d, "an sset, multisset or ngroupoid");
  }
}

Report ngpd_validate(const Document& d, const Options&) {
  Report r = start("ngpd-validate", d);
  const NGroupoid phi = require_ngroupoid("ngpd-validate", d);
  add_validation(r, "n-groupoid axioms (n=" + std::to_string(phi.n()) + ")", phi.validation());
  return r;
}

Report ngpd_pi(const Document& d, const Options& o) {
  Report r = start("ngpd-pi", d);
  const NGroupoid phi = require_ngroupoid("ngpd-pi", d);
  add_validation(r, "valid n-groupoid", phi.validation());
  if (!phi.valid()) return r;
  const int n = phi.n();
  if (o.level < 0 || o.level > n) throw UsageError("--level must lie in [1, " + std::to_string(n) + "]");
  const Pi0Set p = pi0_set(phi);
  const auto names = objects(phi);
  r.notes.push_back("pi_0: " + std::to_string(p.classes.size()) + " class(es): " + join(p.classes, ", "));
  for (int x : chosen_objects(static_cast<int>(names.size()), class_representatives(p), o)) {
    for (int i = o.level ? o.level : 1; i <= (o.level ? o.level : n); ++i) {
      const FinGroup g = homotopy_group(phi, x, i);
      const std::string label = "pi_" + std::to_string(i) + "(" + names[x] + ")";
      r.notes.push_back(label + ": " + describe(g));
      if (i >= 2) r.add(label + " is abelian", g.is_abelian(), label + " has non-commuting elements");
    }
  }
  return r;
}

Report equiv(const Document& d, const Options&) {
  Report r = start("equiv", d);
  if (d.kind == DocumentKind::functor) {
    add_validation(r, "functor", validate_functor(d.functor()));
    if (!r.passed()) return r;
    const EquivalenceResult e = is_equivalence(d.functor());
    r.add("essentially surjective and fully faithful", e.equivalent, e.witness);
    return r;
  }
  if (d.kind == DocumentKind::nfunctor) {
    const NGroupoid s(d.map().source), t(d.map().target);
    if (!s.valid() || !t.valid()) {
      const auto& v = s.valid() ? t.validation() : s.validation();
      r.add_error("n-equivalence", std::string(s.valid() ? "target" : "source") +
                                       " is not a valid n-groupoid: " + v.violations[0].rule + ": " +
                                       v.violations[0].where);
      return r;
    }
    const EquivalenceResult e = n_equivalence(d.map());
    r.add("n-equivalence (pi_0 surjective, arrow objects (n-1)-equivalent)", e.equivalent, e.witness);
    return r;
  }
  wrong_kind("equiv", d, "a functor or nfunctor");
}

Report unit_n1(const Document& d, const Options&) {
  if (d.kind != DocumentKind::groupoid) wrong_kind("unit-n1", d, "a groupoid");
  Report r = start("unit-n1", d);
  r.merge(unit_check_n1(d.groupoid()), "");
  return r;
}

Report unit_n2(const Document& d, const Options& o) {
  Report r = start("unit-n2", d);
  const NGroupoid phi = require_ngroupoid("unit-n2", d);
  if (phi.n() != 2) throw UsageError("unit-n2: expected a 2-groupoid, got arity " + std::to_string(phi.n()));
  add_validation(r, "valid 2-groupoid", phi.validation());
  if (!phi.valid()) return r;
  const auto names = objects(phi);
  for (int x : chosen_objects(static_cast<int>(names.size()), class_representatives(pi0_set(phi)), o))
    r.merge(unit_invariants_n2(phi, x), names[x] + ": ");
  return r;
}

Report f_decompose(const Document& d, const Options&) {
  if (d.kind != DocumentKind::sset) wrong_kind("f-decompose", d, "an sset");
  Report r = start("f-decompose", d);
  const FDecompositionResult f = check_pr_weak_equiv(d.sset());
  r.merge(f.report, "");
  if (f.report.verdict() != Verdict::error) r.notes.push_back("components: " + std::to_string(f.component_count));
  return r;
}

Document nerve(const Document& d, const Options& o) {
  const int bound = o.dim_bound > 0 ? o.dim_bound : kDefaultNerveBound;
  DocumentMetadata meta{"N(" + d.metadata.name + ")", d.metadata.seed,
                        "nerve at dim_bound " + std::to_string(bound)};
  if (d.kind == DocumentKind::groupoid)
    return Document(DocumentKind::sset, static_cast<const MultiSSet&>(ngpd::nerve(d.groupoid(), bound)), meta);
  if (d.kind == DocumentKind::functor)
    return Document(DocumentKind::nfunctor, ngpd::nerve(d.functor(), bound).as_multi(), meta);
  wrong_kind("nerve", d, "a groupoid or functor");
}

Document diag(const Document& d, const Options&) {
  DocumentMetadata meta{"diag(" + d.metadata.name + ")", d.metadata.seed, "total diagonal"};
  if (d.kind == DocumentKind::multisset || d.kind == DocumentKind::ngroupoid || d.kind == DocumentKind::sset)
    return Document(DocumentKind::sset, static_cast<const MultiSSet&>(total_diag(d.carrier())), meta);
  if (d.kind == DocumentKind::nfunctor)
    return Document(DocumentKind::nfunctor, total_diag(d.map()).as_multi(), meta);
  wrong_kind("diag", d, "a multisset, ngroupoid or nfunctor");
}

std::string render(const Report& r, const Options& o) {
  return o.json ? report_to_json(r, o.witness) : r.to_text(o.witness);
}

int status(const Report& r) { return r.passed() ? 0 : 1; }

}  // namespace ngpd::commands
