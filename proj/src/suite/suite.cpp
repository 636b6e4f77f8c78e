#include "ngpd/suite.hpp"

#include <json.hpp>
#include <sstream>

#include "ngpd/ngroupoid.hpp"
#include "ngpd/verify.hpp"
#include "oracle.hpp"

namespace ngpd {

namespace {

constexpr std::size_t kMaxFailureLines = 12;

class Criterion {
 public:
  Criterion(int id, std::string title) {
    r_.id = id;
    r_.title = std::move(title);
  }
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (r_.failures.size() < kMaxFailureLines) r_.failures.push_back(what);
  }
  void not_checked(std::string s) { r_.not_checked.push_back(std::move(s)); }
  CriterionResult finish(std::string summary) {
    if (failures_ > kMaxFailureLines)
      r_.failures.push_back("... and " + std::to_string(failures_ - kMaxFailureLines) + " more");
    r_.passed = failures_ == 0;
    r_.summary = std::move(summary);
    return std::move(r_);
  }

 private:
  CriterionResult r_;
  std::size_t failures_ = 0;
};

std::string describe(const std::exception& e) { return std::string("exception: ") + e.what(); }

const FinGroupoid* find_groupoid(const Corpus& c, const std::string& name) {
  for (const auto& g : c.groupoids)
    if (g.name == name) return &g.groupoid;
  return nullptr;
}

// Aut(x) read off the table, as a group.
FinGroup endomorphism_group(const FinGroupoid& g, int x) {
  const auto elems = oracle::endomorphisms(g, x);
  std::vector<std::string> names;
  std::vector<int> pos(g.morphism_count(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(g.morphism(elems[i]).name);
    pos[elems[i]] = static_cast<int>(i);
  }
  std::vector<int> table;
  for (int a : elems)
    for (int b : elems) table.push_back(pos[g.compose(a, b)]);
  return FinGroup::from_table(names, table);
}

// phi is a bijective homomorphism, checked on the tables.
bool bijective_homomorphism(const FinGroup& a, const FinGroup& b, const std::vector<int>& phi) {
  if (a.order() != b.order() || static_cast<int>(phi.size()) != a.order()) return false;
  std::vector<char> hit(b.order(), 0);
  for (int v : phi) {
    if (v < 0 || v >= b.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------

CriterionResult nerve_segal(const Corpus& c) {
  Criterion cr(1, "nerve-Segal exactness");
  int count = 0;
  for (const auto& [name, g] : c.groupoids) {
    ++count;
    cr.expect(g.object_count() <= 5 && g.morphism_count() <= 16, name + ": exceeds corpus size limits");
    try {
      const SimplicialSet x = nerve(g, 3);
      for (int m = 2; m <= 3; ++m) cr.expect(segal_map(x, m).bijective(), name + ": Segal map m=" + std::to_string(m) + " is not a bijection");
      const NerveReport r = is_nerve_of_groupoid(x);
      cr.expect(r.is_nerve, name + ": not recognised as a groupoid nerve");
      if (r.groupoid) cr.expect(oracle::groupoids_isomorphic(*r.groupoid, g), name + ": reconstruction is not isomorphic");
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.expect(count >= 20, "corpus has only " + std::to_string(count) + " groupoids");
  return cr.finish(std::to_string(count) +
                   " groupoids: Segal maps bijective at m=2,3, nerve recognised, reconstruction isomorphic");
}

CriterionResult unit_n1(const Corpus& c) {
  Criterion cr(2, "unit at n=1");
  for (const auto& [name, g] : c.groupoids) {
    try {
      const Report r = unit_check_n1(g);
      cr.expect(r.passed(), name + ": " + (r.checks.empty() ? "no checks" : r.to_text()));
      cr.expect(!r.not_checked.empty(), name + ": report lacks its not-checked entry");
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.not_checked("pi_i for i >= 2 of the realization");
  return cr.finish(std::to_string(c.groupoids.size()) + " groupoids: L is an isomorphism onto the edge-path groupoid");
}

CriterionResult pi0_law(const Corpus& c) {
  Criterion cr(3, "Segal pi_0 law");
  int disconnected = 0;
  for (const auto& [name, x] : c.bisimplicial) {
    try {
      const Report r = segal_pi0_law(x);
      cr.expect(r.passed(), name + ": " + r.to_text());
      const SimplicialSet d = total_diag(x);
      const int classes = pi0(d).class_count();
      cr.expect(classes == oracle::component_count(d), name + ": class count disagrees with graph search");
      disconnected += classes > 1;
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.expect(c.bisimplicial.size() >= 10, "fewer than 10 bisimplicial objects");
  cr.expect(disconnected >= 1, "no disconnected bisimplicial object");
  return cr.finish(std::to_string(c.bisimplicial.size()) + " bisimplicial objects (" + std::to_string(disconnected) +
                   " disconnected): canonical bijection exhibited");
}

CriterionResult equivalence_oracle(const Corpus& c) {
  Criterion cr(4, "equivalence-checker oracle agreement");
  std::vector<const NamedGroupoid*> small;
  for (const auto& g : c.groupoids)
    if (g.groupoid.object_count() <= 3 && g.groupoid.morphism_count() <= 8) small.push_back(&g);
  long functors = 0, equivalences = 0, disagreements = 0;
  for (const auto* a : small) {
    auto sa = std::make_shared<const FinGroupoid>(a->groupoid);
    for (const auto* b : small) {
      auto sb = std::make_shared<const FinGroupoid>(b->groupoid);
      oracle::for_each_functor(
          a->groupoid, b->groupoid, [](const std::vector<int>&) { return true; },
          [&](const oracle::RawFunctor& f) {
            ++functors;
            const bool lib = is_equivalence(make_functor(sa, sb, f.objects, f.morphisms)).equivalent;
            const bool ref = oracle::has_quasi_inverse(a->groupoid, b->groupoid, f);
            equivalences += ref;
            if (lib != ref) {
              ++disagreements;
              cr.expect(false, a->name + " -> " + b->name + ": library says " + (lib ? "equivalence" : "not") +
                                   ", quasi-inverse search says " + (ref ? "equivalence" : "not"));
            }
            return true;
          });
    }
  }
  return cr.finish(std::to_string(small.size() * small.size()) + " ordered pairs, " + std::to_string(functors) +
                   " functors, " + std::to_string(equivalences) + " equivalences, " + std::to_string(disagreements) +
                   " disagreements");
}

CriterionResult homotopy_groups(const Corpus& c) {
  Criterion cr(5, "recursive homotopy groups");
  int lifted = 0, k_objects = 0, abelian_checks = 0;
  for (const auto& [name, carrier] : c.ngroupoids) {
    try {
      NGroupoid phi(carrier);
      cr.expect(phi.valid(), name + ": invalid 2-groupoid");
      if (!phi.valid()) continue;
      const int objects = carrier.cell_count(MultiIndex(carrier.arity(), 0));
      for (int x = 0; x < objects; ++x) {
        const FinGroup p2 = homotopy_group(phi, x, 2);
        cr.expect(oracle::is_commutative(p2), name + ": pi_2 is not abelian at object " + std::to_string(x));
        ++abelian_checks;
      }
      if (name.rfind("lift(", 0) == 0) {
        const FinGroupoid* g = find_groupoid(c, name.substr(5, name.size() - 6));
        if (!g) continue;
        ++lifted;
        for (int x = 0; x < objects; ++x) {
          cr.expect(oracle::groupoids_isomorphic(homotopy_group(phi, x, 1).groupoid(), endomorphism_group(*g, x).groupoid()),
                    name + ": pi_1 at object " + std::to_string(x) + " differs from Aut");
          cr.expect(homotopy_group(phi, x, 2).order() == 1, name + ": pi_2 is not trivial");
        }
      } else if (name.rfind("K(", 0) == 0 && name.find('+') == std::string::npos) {
        const std::string gname = name.substr(2, name.find(',') - 2);
        const FinGroupoid* g = find_groupoid(c, gname);
        if (!g) continue;
        ++k_objects;
        cr.expect(oracle::groupoids_isomorphic(homotopy_group(phi, 0, 2).groupoid(), *g), name + ": pi_2 differs from A");
        cr.expect(homotopy_group(phi, 0, 1).order() == 1, name + ": pi_1 is not trivial");
      }
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.expect(lifted >= 1 && k_objects >= 1, "corpus lacks lifted or K(A,2) carriers");
  return cr.finish(std::to_string(lifted) + " lifted K(G,1), " + std::to_string(k_objects) + " K(A,2); pi_2 abelian at " +
                   std::to_string(abelian_checks) + " base points");
}

CriterionResult diagonal_realization(const Corpus& c) {
  Criterion cr(6, "diagonal realization");
  struct Pair {
    const char* g;
    const char* h;
    int a, b;  // cyclic orders when both factors are cyclic groups, else 0
  };
  const Pair pairs[] = {{"C2", "C3", 2, 3}, {"C2", "C2", 2, 2}, {"C3", "C3", 3, 3}, {"C4", "C2", 4, 2},
                        {"C2", "C4", 2, 4}, {"S3", "C2", 0, 0}, {"C2@2", "C3", 0, 0}, {"pair+point", "C2", 0, 0}};
  int invariant_pairs = 0;
  for (const auto& p : pairs) {
    const std::string name = std::string(p.g) + " x " + p.h;
    const FinGroupoid* g = find_groupoid(c, p.g);
    const FinGroupoid* h = find_groupoid(c, p.h);
    if (!g || !h) {
      cr.expect(false, name + ": missing from corpus");
      continue;
    }
    try {
      const SimplicialSet d = total_diag(external_product(nerve(*g, 3), nerve(*h, 3)));
      const std::string why = oracle::diag_product_mismatch(*g, *h, 3, d);
      cr.expect(why.empty(), name + ": " + why);
      if (p.a > 0) {
        ++invariant_pairs;
        const GroupInvariants got = group_invariants(vertex_group(edge_path_groupoid(d), 0));
        const GroupInvariants want = oracle::cyclic_product_invariants(p.a, p.b);
        cr.expect(got == want, name + ": vertex-group invariants " + to_string(got) + ", expected " + to_string(want));
      }
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.not_checked("pi_i for i >= 2 of the diagonal");
  return cr.finish(std::to_string(std::size(pairs)) + " pairs isomorphic to N(GxH) up to D=3; invariants match on " +
                   std::to_string(invariant_pairs) + " abelian pairs");
}

CriterionResult theta_law(const Corpus& c) {
  Criterion cr(7, "strict theta law");
  for (const auto& p : c.pullbacks) {
    try {
      std::string why;
      cr.expect(diag_fiber_product_check(p.f, p.g, &why), p.name + ": " + why);
    } catch (const std::exception& e) {
      cr.expect(false, p.name + ": " + describe(e));
    }
  }
  return cr.finish(std::to_string(c.pullbacks.size()) + " pullbacks: diagonal commutes with fiber products cell for cell");
}

CriterionResult equivalence_invariants(const Corpus& c) {
  Criterion cr(8, "equivalence implies homotopy-group isomorphism");
  int equivalences = 0, others = 0, invariant_witnessed = 0;
  for (const auto& [name, t] : c.nfunctors) {
    try {
      const NGroupoid src(t.source), tgt(t.target);
      if (!src.valid() || !tgt.valid()) {
        cr.expect(false, name + ": an end is not a valid n-groupoid");
        continue;
      }
      const EquivalenceResult r = n_equivalence(t);
      const int n = src.n();
      // pi_0: the induced class map must be a bijection.
      const Pi0Set ps = pi0_set(src), pt = pi0_set(tgt);
      std::vector<int> image(ps.classes.size(), -1);
      std::vector<int> hits(pt.classes.size(), 0);
      bool agree = true;
      std::string mismatch;
      for (std::size_t x = 0; x < ps.quotient.size(); ++x) {
        const int tc = pt.quotient[t.levels[0][x]];
        int& slot = image[ps.quotient[x]];
        if (slot < 0) {
          slot = tc;
          ++hits[tc];
        }
      }
      for (int h : hits)
        if (h != 1) agree = false;
      if (!agree) mismatch = "pi_0 classes do not correspond";
      for (std::size_t x = 0; x < ps.quotient.size() && agree; ++x) {
        for (int i = 1; i <= n && agree; ++i) {
          const FinGroup a = homotopy_group(src, static_cast<int>(x), i);
          const FinGroup b = homotopy_group(tgt, t.levels[0][x], i);
          if (!bijective_homomorphism(a, b, induced_homotopy_map(t, static_cast<int>(x), i))) {
            agree = false;
            mismatch = "pi_" + std::to_string(i) + " at object " + std::to_string(x) + " is not mapped isomorphically";
          }
        }
      }
      if (r.equivalent) {
        ++equivalences;
        cr.expect(agree, name + ": equivalence but " + mismatch);
      } else {
        ++others;
        invariant_witnessed += !agree;
        cr.expect(!agree || !r.witness.empty(), name + ": non-equivalence without witness");
      }
      if (name.rfind("nerve:", 0) == 0) {
        for (const auto& f : c.functors) {
          if ("nerve:" + f.name != name) continue;
          const oracle::RawFunctor raw{f.functor.objects, f.functor.morphisms};
          cr.expect(oracle::has_quasi_inverse(*f.functor.source, *f.functor.target, raw) == r.equivalent,
                    name + ": disagrees with quasi-inverse search");
        }
      }
    } catch (const std::exception& e) {
      cr.expect(false, name + ": " + describe(e));
    }
  }
  cr.expect(equivalences >= 1 && others >= 1, "corpus lacks equivalences or non-equivalences");
  cr.not_checked("pi_i for i >= 2 of the realizations");
  return cr.finish(std::to_string(equivalences) + " equivalences with matching pi_0 and pi_i; " + std::to_string(others) +
                   " non-equivalences witnessed (" + std::to_string(invariant_witnessed) + " by an invariant)");
}

CriterionResult f_decomposition(const Corpus& c) {
  Criterion cr(9, "F-decomposition");
  int truncated = 0;
  for (const auto& s : c.ssets) {
    try {
      const FDecompositionResult r = check_pr_weak_equiv(s.sset);
      for (const auto& ch : r.report.checks)
        cr.expect(ch.status == CheckStatus::pass, s.name + ": " + ch.id + " -- " + ch.witness);
      cr.expect(r.component_count == oracle::component_count(s.sset), s.name + ": component count disagrees with graph search");
      const bool expected = s.nerve_of ? oracle::all_automorphism_groups_trivial(*s.nerve_of) : s.contractible_components;
      cr.expect(r.zero_truncated == expected, s.name + ": 0-truncated flag is " + (r.zero_truncated ? "true" : "false"));
      truncated += r.zero_truncated;
    } catch (const std::exception& e) {
      cr.expect(false, s.name + ": " + describe(e));
    }
  }
  return cr.finish(std::to_string(c.ssets.size()) + " simplicial sets: pr1 checks pass, " + std::to_string(truncated) +
                   " flagged 0-truncated, all as expected");
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  os << "acceptance suite, seed " << seed << ", corpus " << ngpd::to_string(size) << '\n';
  for (const auto& c : criteria) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << c.summary << '\n';
    for (const auto& f : c.failures) os << "    failure: " << f << '\n';
    for (const auto& n : c.not_checked) os << "    not checked: " << n << '\n';
  }
  os << "verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string SuiteResult::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["corpus"] = ngpd::to_string(size);
  j["verdict"] = passed() ? "PASS" : "FAIL";
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    arr.push_back({{"id", c.id},
                   {"title", c.title},
                   {"status", c.passed ? "PASS" : "FAIL"},
                   {"summary", c.summary},
                   {"failures", c.failures},
                   {"not_checked", c.not_checked}});
  }
  j["criteria"] = std::move(arr);
  return j.dump(2) + "\n";
}

SuiteResult run_suite(std::uint64_t seed, SizeClass size) {
  const Corpus c = build_corpus(seed, size);
  SuiteResult r;
  r.seed = seed;
  r.size = size;
  r.criteria.push_back(nerve_segal(c));
  r.criteria.push_back(unit_n1(c));
  r.criteria.push_back(pi0_law(c));
  r.criteria.push_back(equivalence_oracle(c));
  r.criteria.push_back(homotopy_groups(c));
  r.criteria.push_back(diagonal_realization(c));
  r.criteria.push_back(theta_law(c));
  r.criteria.push_back(equivalence_invariants(c));
  r.criteria.push_back(f_decomposition(c));
  return r;
}

SuiteResult run_acceptance(std::uint64_t seed, SizeClass size) {
  SuiteResult first = run_suite(seed, size);
  const SuiteResult second = run_suite(seed, size);
  const std::string a = first.to_text(), b = second.to_text();
  CriterionResult det;
  det.id = 10;
  det.title = "determinism";
  det.passed = a == b && first.to_json() == second.to_json();
  det.summary = det.passed ? "two runs produced byte-identical reports (" + std::to_string(a.size()) + " bytes)"
                           : "two runs differ";
  if (!det.passed) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    det.failures.push_back("first difference at byte " + std::to_string(i));
  }
  first.criteria.push_back(std::move(det));
  return first;
}

}  // namespace ngpd
