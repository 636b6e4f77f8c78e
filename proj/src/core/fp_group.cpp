#include "ngpd/fp_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ngpd {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word invert(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += names.at(w[i].generator);
    if (w[i].inverse) s += "^-1";
  }
  return s;
}

ValidationReport validate_fp_groupoid(const FpGroupoid& p) {
  ValidationReport rep;
  const int n_obj = static_cast<int>(p.objects.size());
  const int n_gen = static_cast<int>(p.generators.size());
  for (const auto& g : p.generators) {
    if (g.source < 0 || g.source >= n_obj || g.target < 0 || g.target >= n_obj) {
      rep.add("generator endpoints are objects", g.name);
    }
  }
  auto walk = [&](const Word& w, int start, int& end) {
    int at = start;
    for (const auto& l : w) {
      if (l.generator < 0 || l.generator >= n_gen) return false;
      const auto& g = p.generators[l.generator];
      const int from = l.inverse ? g.target : g.source;
      if (from != at) return false;
      at = l.inverse ? g.source : g.target;
    }
    end = at;
    return true;
  };
  for (const auto& r : p.relators) {
    int e1 = -1, e2 = -1;
    if (!walk(r.lhs, r.base, e1) || !walk(r.rhs, r.base, e2)) {
      rep.add("relator sides are paths from the base object", r.origin);
    } else if (e1 != e2) {
      rep.add("relator sides have matching endpoints", r.origin);
    }
  }
  return rep;
}

FpGroup vertex_group(const FpGroupoid& p, int object) {
  const int n_obj = static_cast<int>(p.objects.size());
  const int n_gen = static_cast<int>(p.generators.size());
  if (object < 0 || object >= n_obj) throw std::out_of_range("vertex_group: object not in the groupoid");
  std::vector<bool> visited(n_obj, false), tree(n_gen, false);
  std::deque<int> queue{object};
  visited[object] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int g = 0; g < n_gen; ++g) {
      const auto& gen = p.generators[g];
      int other = -1;
      if (gen.source == u && !visited[gen.target]) other = gen.target;
      else if (gen.target == u && !visited[gen.source]) other = gen.source;
      if (other < 0) continue;
      visited[other] = true;
      tree[g] = true;
      queue.push_back(other);
    }
  }
  FpGroup out;
  std::vector<int> index(n_gen, -1);
  for (int g = 0; g < n_gen; ++g) {
    if (visited[p.generators[g].source] && !tree[g]) {
      index[g] = out.generator_count();
      out.generators.push_back(p.generators[g].name);
    }
  }
  std::set<std::vector<std::pair<int, bool>>> seen;
  for (const auto& r : p.relators) {
    if (!visited.at(r.base)) continue;
    Word w;
    for (const auto& l : r.lhs)
      if (index[l.generator] >= 0) w.push_back({index[l.generator], l.inverse});
    for (const auto& l : invert(r.rhs))
      if (index[l.generator] >= 0) w.push_back({index[l.generator], l.inverse});
    w = free_reduce(std::move(w));
    if (w.empty()) continue;
    std::vector<std::pair<int, bool>> key;
    for (const auto& l : w) key.emplace_back(l.generator, l.inverse);
    if (!seen.insert(key).second) continue;
    out.relators.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> invariant_factors(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      }
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && std::llabs(a[i][t]) < std::llabs(a[bi][bj])) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && std::llabs(a[t][j]) < std::llabs(a[bi][bj])) {
          bi = t;
          bj = j;
        }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) clean = clean && a[i][t] == 0;
      for (std::size_t j = t + 1; j < cols; ++j) clean = clean && a[t][j] == 0;
      if (clean) break;
      if (bi != t) std::swap(a[t], a[bi]);
      if (bj != t)
        for (auto& row : a) std::swap(row[t], row[bj]);
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = std::gcd(diag[i], diag[j]);
      const std::int64_t l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

AbelianInvariants abelianization(const FpGroup& p) {
  const int n = p.generator_count();
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& r : p.relators) {
    std::vector<std::int64_t> row(n, 0);
    for (const auto& l : r) row.at(l.generator) += l.inverse ? -1 : 1;
    m.push_back(std::move(row));
  }
  AbelianInvariants out;
  const auto factors = n == 0 ? std::vector<std::int64_t>{} : invariant_factors(std::move(m));
  out.free_rank = n - static_cast<int>(factors.size());
  for (auto d : factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::ostringstream os;
  bool first = true;
  if (a.free_rank > 0) {
    os << "Z";
    if (a.free_rank > 1) os << "^" << a.free_rank;
    first = false;
  }
  for (auto d : a.torsion) {
    os << (first ? "" : " x ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::int64_t hom_count(const FpGroup& p, const FinGroup& t) {
  const int n = p.generator_count();
  if (n == 0) {
    return 1;  // relators over no generators are empty after reduction
  }
  // Order generators greedily so that relators complete early.
  std::vector<std::vector<int>> gens_of(p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    std::set<int> s;
    for (const auto& l : p.relators[r]) s.insert(l.generator);
    gens_of[r].assign(s.begin(), s.end());
  }
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_score = -1;
    for (int g = 0; g < n; ++g) {
      if (placed[g]) continue;
      int score = 0;
      for (const auto& gs : gens_of) {
        if (std::find(gs.begin(), gs.end(), g) == gs.end()) continue;
        bool completes = true;
        for (int h : gs) completes = completes && (h == g || placed[h]);
        score += completes ? 1 : 0;
      }
      if (score > best_score) {
        best = g;
        best_score = score;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<std::size_t>> due(n);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (gens_of[r].empty()) continue;
    int last = 0;
    for (int g : gens_of[r]) last = std::max(last, position[g]);
    due[last].push_back(r);
  }
  std::vector<int> image(n, -1);
  std::int64_t count = 0;
  auto holds = [&](const Word& w) {
    int v = t.unit();
    for (const auto& l : w) {
      const int x = image[l.generator];
      v = t.mul(l.inverse ? t.inv(x) : x, v);
    }
    return v == t.unit();
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    const int g = order[depth];
    for (int x = 0; x < t.order(); ++x) {
      image[g] = x;
      bool ok = true;
      for (auto r : due[depth]) {
        if (!holds(p.relators[r])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
    image[g] = -1;
  };
  rec(rec, 0);
  return count;
}

FpGroup table_presentation(const FinGroup& g) {
  FpGroup out;
  const int n = g.order();
  std::vector<int> gen(n, -1);
  for (int a = 0; a < n; ++a) {
    if (a == g.unit()) continue;
    gen[a] = out.generator_count();
    out.generators.push_back(g.name(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (gen[a] < 0 || gen[b] < 0) continue;
      // path a then b composes to b o a
      const int c = g.mul(b, a);
      Word w{{gen[a], false}, {gen[b], false}};
      if (gen[c] >= 0) w.push_back({gen[c], true});
      out.relators.push_back(std::move(w));
    }
  return out;
}

bool GroupInvariants::trivial() const {
  if (!(abelian == AbelianInvariants{})) return false;
  for (auto c : hom_counts)
    if (c != 1) return false;
  return true;
}

GroupInvariants group_invariants(const FpGroup& p) {
  GroupInvariants out;
  out.abelian = abelianization(p);
  for (const auto& ref : reference_groups()) out.hom_counts.push_back(hom_count(p, ref.group));
  return out;
}

std::string to_string(const GroupInvariants& g) {
  std::ostringstream os;
  os << "ab=" << to_string(g.abelian) << " hom=[";
  const auto& refs = reference_groups();
  for (std::size_t i = 0; i < g.hom_counts.size(); ++i) {
    os << (i ? " " : "") << refs[i].name << ":" << g.hom_counts[i];
  }
  os << "]";
  return os.str();
}

}  // namespace ngpd
