#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>

namespace ngpd::oracle {

namespace {

std::vector<std::vector<int>> hom_buckets(const FinGroupoid& g) {
  const int n = g.object_count();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) * n);
  for (int f = 0; f < g.morphism_count(); ++f) out[static_cast<std::size_t>(g.source(f)) * n + g.target(f)].push_back(f);
  return out;
}

RawFunctor identity_raw(const FinGroupoid& g) {
  RawFunctor f;
  f.objects.resize(g.object_count());
  f.morphisms.resize(g.morphism_count());
  std::iota(f.objects.begin(), f.objects.end(), 0);
  std::iota(f.morphisms.begin(), f.morphisms.end(), 0);
  return f;
}

RawFunctor then(const RawFunctor& f, const RawFunctor& g) {
  RawFunctor out;
  for (int x : f.objects) out.objects.push_back(g.objects[x]);
  for (int m : f.morphisms) out.morphisms.push_back(g.morphisms[m]);
  return out;
}

int power(const FinGroup& g, int x, int k) {
  int r = g.unit();
  for (int i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

std::string chain_name(const FinGroupoid& g, const std::vector<int>& chain, int k) {
  if (k == 0) return g.objects()[chain[0]];
  std::string s;
  for (std::size_t j = 0; j < chain.size(); ++j) s += (j ? "|" : "") + g.morphism(chain[j]).name;
  return s;
}

}  // namespace

void for_each_functor(const FinGroupoid& a, const FinGroupoid& b,
                      const std::function<bool(const std::vector<int>&)>& accept,
                      const std::function<bool(const RawFunctor&)>& visit, bool injective) {
  const int na = a.object_count(), nb = b.object_count(), ma = a.morphism_count();
  if (na == 0) {
    visit(RawFunctor{});
    return;
  }
  if (nb == 0) return;
  const auto hom_b = hom_buckets(b);
  std::vector<int> identity_of(ma, -1);
  for (int x = 0; x < na; ++x) identity_of[a.identity(x)] = x;
  // Composition triples (p, q, p o q), checked once all three are assigned.
  std::vector<std::vector<std::array<int, 3>>> triples(ma);
  for (int p = 0; p < ma; ++p)
    for (int q = 0; q < ma; ++q) {
      const int r = a.compose(p, q);
      if (r >= 0) triples[std::max({p, q, r})].push_back({p, q, r});
    }
  RawFunctor cur;
  cur.objects.assign(na, 0);
  cur.morphisms.assign(ma, -1);
  std::vector<char> used(b.morphism_count(), 0);
  bool stop = false;
  std::function<void(int)> assign = [&](int i) {
    if (i == ma) {
      if (!visit(cur)) stop = true;
      return;
    }
    const auto& cands = hom_b[static_cast<std::size_t>(cur.objects[a.source(i)]) * nb + cur.objects[a.target(i)]];
    for (int c : cands) {
      if (identity_of[i] >= 0 && c != b.identity(cur.objects[identity_of[i]])) continue;
      if (injective && used[c]) continue;
      cur.morphisms[i] = c;
      bool ok = true;
      for (const auto& t : triples[i]) {
        if (b.compose(cur.morphisms[t[0]], cur.morphisms[t[1]]) != cur.morphisms[t[2]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[c] = 1;
      assign(i + 1);
      used[c] = 0;
      if (stop) return;
    }
  };
  while (!stop) {
    if (accept(cur.objects)) assign(0);
    int pos = 0;
    while (pos < na && ++cur.objects[pos] == nb) cur.objects[pos++] = 0;
    if (pos == na) break;
  }
}

std::vector<RawFunctor> all_functors(const FinGroupoid& a, const FinGroupoid& b) {
  std::vector<RawFunctor> out;
  for_each_functor(
      a, b, [](const std::vector<int>&) { return true; },
      [&](const RawFunctor& f) {
        out.push_back(f);
        return true;
      });
  return out;
}

bool natural_iso_exists(const FinGroupoid& a, const FinGroupoid& b, const RawFunctor& f, const RawFunctor& g) {
  const int na = a.object_count(), nb = b.object_count();
  const auto hom_b = hom_buckets(b);
  // Morphisms of a whose later endpoint is x, checked once x is assigned.
  std::vector<std::vector<int>> due(na);
  for (int m = 0; m < a.morphism_count(); ++m) due[std::max(a.source(m), a.target(m))].push_back(m);
  std::vector<int> eta(na, -1);
  std::function<bool(int)> assign = [&](int x) {
    if (x == na) return true;
    for (int c : hom_b[static_cast<std::size_t>(f.objects[x]) * nb + g.objects[x]]) {
      eta[x] = c;
      bool ok = true;
      for (int m : due[x]) {
        if (b.compose(g.morphisms[m], eta[a.source(m)]) != b.compose(eta[a.target(m)], f.morphisms[m])) {
          ok = false;
          break;
        }
      }
      if (ok && assign(x + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

bool has_quasi_inverse(const FinGroupoid& a, const FinGroupoid& b, const RawFunctor& f) {
  const auto ca = groupoid_components(a), cb = groupoid_components(b);
  const RawFunctor id_a = identity_raw(a), id_b = identity_raw(b);
  // An object map g can only carry natural isos when g f x ~ x and f g y ~ y.
  auto accept = [&](const std::vector<int>& g) {
    for (int y = 0; y < b.object_count(); ++y)
      if (cb[f.objects[g[y]]] != cb[y]) return false;
    for (int x = 0; x < a.object_count(); ++x)
      if (ca[g[f.objects[x]]] != ca[x]) return false;
    return true;
  };
  bool found = false;
  for_each_functor(b, a, accept, [&](const RawFunctor& g) {
    found = natural_iso_exists(a, a, id_a, then(f, g)) && natural_iso_exists(b, b, then(g, f), id_b);
    return !found;
  });
  return found;
}

bool groupoids_isomorphic(const FinGroupoid& a, const FinGroupoid& b) {
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  const int n = a.object_count();
  const auto ha = hom_buckets(a), hb = hom_buckets(b);
  auto accept = [&](const std::vector<int>& obj) {
    std::vector<char> hit(n, 0);
    for (int y : obj) {
      if (hit[y]) return false;
      hit[y] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (ha[static_cast<std::size_t>(x) * n + y].size() != hb[static_cast<std::size_t>(obj[x]) * n + obj[y]].size())
          return false;
    return true;
  };
  bool found = false;
  for_each_functor(
      a, b, accept,
      [&](const RawFunctor&) {
        found = true;
        return false;
      },
      true);
  return found;
}

std::vector<int> groupoid_components(const FinGroupoid& g) {
  const int n = g.object_count();
  std::vector<std::vector<int>> adj(n);
  for (int f = 0; f < g.morphism_count(); ++f) {
    adj[g.source(f)].push_back(g.target(f));
    adj[g.target(f)].push_back(g.source(f));
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (label[w] < 0) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const SimplicialSet& x) {
  const int n = x.cell_count(0);
  std::vector<std::vector<int>> adj(n);
  if (x.dim_bound() >= 1) {
    for (int e = 0; e < x.cell_count(1); ++e) {
      const int s = x.face(1, 1, e), t = x.face(1, 0, e);
      adj[s].push_back(t);
      adj[t].push_back(s);
    }
  }
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return count;
}

std::vector<int> endomorphisms(const FinGroupoid& g, int x) {
  std::vector<int> out;
  for (int f = 0; f < g.morphism_count(); ++f)
    if (g.source(f) == x && g.target(f) == x) out.push_back(f);
  return out;
}

bool all_automorphism_groups_trivial(const FinGroupoid& g) {
  for (int x = 0; x < g.object_count(); ++x)
    if (endomorphisms(g, x).size() != 1) return false;
  return true;
}

bool is_commutative(const FinGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> brute_force_chains(const FinGroupoid& g, int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    for (int x = 0; x < g.object_count(); ++x) out.push_back({x});
    return out;
  }
  const int m = g.morphism_count();
  if (m == 0) return out;
  std::vector<int> t(k, 0);
  while (true) {
    bool ok = true;
    for (int j = 0; j + 1 < k && ok; ++j) ok = g.target(t[j]) == g.source(t[j + 1]);
    if (ok) out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && ++t[pos] == m) t[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::string diag_product_mismatch(const FinGroupoid& g, const FinGroupoid& h, int dim_bound,
                                  const SimplicialSet& diagonal) {
  if (diagonal.dim_bound() != dim_bound) return "dim_bound differs";
  using Step = std::pair<int, int>;
  using Chain = std::vector<Step>;  // level 0: one pair of objects
  std::vector<std::map<Chain, int>> index(dim_bound + 1);
  std::vector<std::vector<Chain>> cells(dim_bound + 1);
  const int mg = g.morphism_count(), mh = h.morphism_count();
  for (int k = 0; k <= dim_bound; ++k) {
    const auto cg = brute_force_chains(g, k), ch = brute_force_chains(h, k);
    const std::size_t expected = cg.size() * ch.size();
    if (static_cast<std::size_t>(diagonal.cell_count(k)) != expected)
      return "level " + std::to_string(k) + ": " + std::to_string(diagonal.cell_count(k)) + " cells, expected " +
             std::to_string(expected);
    // Composable chains of pair morphisms, counted directly.
    std::size_t pair_chains = 0;
    if (k == 0) {
      pair_chains = static_cast<std::size_t>(g.object_count()) * h.object_count();
    } else {
      std::vector<int> t(k, 0);
      const int mp = mg * mh;
      while (mp > 0) {
        bool ok = true;
        for (int j = 0; j + 1 < k && ok; ++j) {
          ok = g.target(t[j] / mh) == g.source(t[j + 1] / mh) && h.target(t[j] % mh) == h.source(t[j + 1] % mh);
        }
        pair_chains += ok;
        int pos = k - 1;
        while (pos >= 0 && ++t[pos] == mp) t[pos--] = 0;
        if (pos < 0) break;
      }
    }
    if (pair_chains != expected) return "level " + std::to_string(k) + ": pair chains do not match the cell count";
    for (int c = 0; c < diagonal.cell_count(k); ++c) {
      const auto& a = cg[c / ch.size()];
      const auto& b = ch[c % ch.size()];
      const std::string want = "(" + chain_name(g, a, k) + "," + chain_name(h, b, k) + ")";
      if (diagonal.name(k, c) != want) return "level " + std::to_string(k) + ": cell " + diagonal.name(k, c) + " expected " + want;
      Chain chain;
      for (std::size_t j = 0; j < a.size(); ++j) chain.push_back({a[j], b[j]});
      index[k].emplace(chain, c);
      cells[k].push_back(std::move(chain));
    }
  }
  auto vertex = [&](const Chain& ch, int k, int i) -> Step {
    if (k == 0) return ch[0];
    if (i == 0) return {g.source(ch[0].first), h.source(ch[0].second)};
    return {g.target(ch[i - 1].first), h.target(ch[i - 1].second)};
  };
  for (int k = 0; k <= dim_bound; ++k) {
    for (int c = 0; c < diagonal.cell_count(k); ++c) {
      const Chain& ch = cells[k][c];
      const std::string where = "cell " + diagonal.name(k, c);
      for (int i = 0; k >= 1 && i <= k; ++i) {
        Chain f;
        if (k == 1) {
          f.push_back(vertex(ch, 1, i == 0 ? 1 : 0));
        } else {
          for (int j = 0; j < k; ++j) {
            if ((i == 0 && j == 0) || (i == k && j == k - 1) || (i > 0 && i < k && j == i)) continue;
            if (i > 0 && i < k && j == i - 1) {
              f.push_back({g.compose(ch[i].first, ch[i - 1].first), h.compose(ch[i].second, ch[i - 1].second)});
            } else {
              f.push_back(ch[j]);
            }
          }
        }
        auto it = index[k - 1].find(f);
        if (it == index[k - 1].end() || diagonal.face(k, i, c) != it->second)
          return where + ": face d" + std::to_string(i) + " differs";
      }
      for (int i = 0; k < dim_bound && i <= k; ++i) {
        const Step v = vertex(ch, k, i);
        const Step id = {g.identity(v.first), h.identity(v.second)};
        Chain s;
        if (k == 0) {
          s.push_back(id);
        } else {
          s.assign(ch.begin(), ch.begin() + i);
          s.push_back(id);
          s.insert(s.end(), ch.begin() + i, ch.end());
        }
        auto it = index[k + 1].find(s);
        if (it == index[k + 1].end() || diagonal.degen(k, i, c) != it->second)
          return where + ": degeneracy s" + std::to_string(i) + " differs";
      }
    }
  }
  return {};
}

GroupInvariants cyclic_product_invariants(int a, int b) {
  GroupInvariants out;
  const int g = std::gcd(a, b), l = std::lcm(a, b);
  if (g > 1) out.abelian.torsion.push_back(g);
  if (l > 1) out.abelian.torsion.push_back(l);
  for (const auto& ref : reference_groups()) {
    const FinGroup& t = ref.group;
    std::int64_t count = 0;
    for (int x = 0; x < t.order(); ++x) {
      if (power(t, x, a) != t.unit()) continue;
      for (int y = 0; y < t.order(); ++y)
        if (power(t, y, b) == t.unit() && t.mul(x, y) == t.mul(y, x)) ++count;
    }
    out.hom_counts.push_back(count);
  }
  return out;
}

}  // namespace ngpd::oracle
