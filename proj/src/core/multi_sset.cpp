#include "ngpd/multi_sset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "builder.hpp"
#include "ngpd/partition.hpp"

namespace ngpd {

namespace {

std::size_t product_of_extents(const std::vector<int>& bounds) {
  std::size_t n = 1;
  for (int b : bounds) n *= static_cast<std::size_t>(b + 1);
  return n;
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

std::vector<MultiIndex> all_indices(const std::vector<int>& bounds) {
  std::vector<MultiIndex> out;
  out.reserve(product_of_extents(bounds));
  MultiIndex cur(bounds.size(), 0);
  while (true) {
    out.push_back(cur);
    int a = static_cast<int>(bounds.size()) - 1;
    while (a >= 0 && cur[a] == bounds[a]) {
      cur[a] = 0;
      --a;
    }
    if (a < 0) break;
    ++cur[a];
  }
  return out;
}

std::string index_to_string(const MultiIndex& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

MultiSSet::MultiSSet() : levels_(1) {}

MultiSSet::MultiSSet(std::vector<int> dim_bounds, std::vector<Level> levels)
    : bounds_(std::move(dim_bounds)), levels_(std::move(levels)) {
  for (int b : bounds_)
    if (b < 0) throw std::invalid_argument("negative dim_bound");
  const int n = arity();
  strides_.assign(n, 1);
  for (int a = n - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * static_cast<std::size_t>(bounds_[a + 1] + 1);
  if (levels_.size() != product_of_extents(bounds_)) {
    throw std::invalid_argument("expected " + std::to_string(product_of_extents(bounds_)) + " levels, got " +
                                std::to_string(levels_.size()));
  }
  for (std::size_t f = 0; f < levels_.size(); ++f) {
    const MultiIndex at = multi_index(f);
    const Level& lvl = levels_[f];
    const std::string where = "level " + index_to_string(at);
    std::set<std::string_view> seen;
    for (const auto& nm : lvl.names) {
      if (!seen.insert(nm).second) throw std::invalid_argument(where + ": duplicate cell name '" + nm + "'");
    }
    if (static_cast<int>(lvl.face.size()) != n || static_cast<int>(lvl.degen.size()) != n) {
      throw std::invalid_argument(where + ": structure tables must have one entry per axis");
    }
    for (int a = 0; a < n; ++a) {
      auto check = [&](const std::vector<CellMap>& maps, bool present, int delta, const char* kind) {
        std::size_t expected = present ? static_cast<std::size_t>(at[a] + 1) : 0;
        if (maps.size() != expected) {
          throw std::invalid_argument(where + ": axis " + std::to_string(a) + " expects " +
                                      std::to_string(expected) + " " + kind + " maps");
        }
        if (!present) return;
        MultiIndex to = at;
        to[a] += delta;
        const int target_count = static_cast<int>(levels_[flat_index(to)].names.size());
        for (std::size_t i = 0; i < maps.size(); ++i) {
          if (maps[i].size() != lvl.names.size()) {
            throw std::invalid_argument(where + ": " + kind + " map " + std::to_string(i) + " has wrong length");
          }
          for (std::size_t c = 0; c < maps[i].size(); ++c) {
            if (maps[i][c] < 0 || maps[i][c] >= target_count) {
              throw std::invalid_argument(where + ": " + kind + " " + std::to_string(a) + ":" + std::to_string(i) +
                                          " of '" + lvl.names[c] + "' leaves the target level");
            }
          }
        }
      };
      check(lvl.face[a], at[a] >= 1, -1, "face");
      check(lvl.degen[a], at[a] < bounds_[a], +1, "degeneracy");
    }
  }
}

std::size_t MultiSSet::flat_index(const MultiIndex& m) const {
  if (m.size() != bounds_.size()) throw std::out_of_range("multi-index has wrong arity");
  std::size_t f = 0;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m[a] < 0 || m[a] > bounds_[a]) throw std::out_of_range("level " + index_to_string(m) + " not stored");
    f += static_cast<std::size_t>(m[a]) * strides_[a];
  }
  return f;
}

MultiIndex MultiSSet::multi_index(std::size_t flat) const {
  MultiIndex m(bounds_.size());
  for (std::size_t a = 0; a < m.size(); ++a) {
    m[a] = static_cast<int>(flat / strides_[a]);
    flat %= strides_[a];
  }
  return m;
}

bool MultiSSet::contains(const MultiIndex& m) const {
  if (m.size() != bounds_.size()) return false;
  for (std::size_t a = 0; a < m.size(); ++a)
    if (m[a] < 0 || m[a] > bounds_[a]) return false;
  return true;
}

int MultiSSet::find_cell(const MultiIndex& m, std::string_view name) const {
  const auto& names = level(m).names;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

const CellMap& MultiSSet::face_map(const MultiIndex& at, int axis, int i) const {
  const auto& maps = level(at).face.at(axis);
  if (i < 0 || i >= static_cast<int>(maps.size())) throw std::out_of_range("face index out of range");
  return maps[i];
}

const CellMap& MultiSSet::degen_map(const MultiIndex& at, int axis, int i) const {
  const auto& maps = level(at).degen.at(axis);
  if (maps.empty()) throw std::out_of_range("degeneracy leaves the stored levels (level not stored)");
  if (i < 0 || i >= static_cast<int>(maps.size())) throw std::out_of_range("degeneracy index out of range");
  return maps[i];
}

int MultiSSet::face(const MultiIndex& at, int axis, int i, int cell) const { return face_map(at, axis, i).at(cell); }

int MultiSSet::degen(const MultiIndex& at, int axis, int i, int cell) const {
  return degen_map(at, axis, i).at(cell);
}

int MultiSSet::act(const MultiIndex& at, int axis, const MonotoneMap& theta, int cell) const {
  if (at.at(axis) != theta.target_rank()) throw std::invalid_argument("act: rank mismatch");
  if (theta.source_rank() > bounds_.at(axis)) throw std::out_of_range("act: level not stored");
  const auto fac = factorize(theta);
  MultiIndex cur = at;
  for (int j : fac.deleted) {
    cell = face(cur, axis, j, cell);
    --cur[axis];
  }
  for (int i : fac.duplicated) {
    cell = degen(cur, axis, i, cell);
    ++cur[axis];
  }
  return cell;
}

std::size_t MultiSSet::total_cells() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.names.size();
  return n;
}

// ---------------------------------------------------------------------------
// maps

MultiSSetMap::MultiSSetMap(std::shared_ptr<const MultiSSet> src, std::shared_ptr<const MultiSSet> tgt,
                           std::vector<CellMap> lv)
    : source(std::move(src)), target(std::move(tgt)), levels(std::move(lv)) {
  if (!source || !target) throw std::invalid_argument("map: null endpoint");
  if (source->dim_bounds() != target->dim_bounds()) throw std::invalid_argument("map: dim_bounds differ");
  if (levels.size() != source->level_count()) throw std::invalid_argument("map: wrong number of levels");
  for (std::size_t f = 0; f < levels.size(); ++f) {
    const int n_src = static_cast<int>(source->level_at(f).names.size());
    const int n_tgt = static_cast<int>(target->level_at(f).names.size());
    if (static_cast<int>(levels[f].size()) != n_src) {
      throw std::invalid_argument("map: level " + index_to_string(source->multi_index(f)) + " has wrong length");
    }
    for (int v : levels[f]) {
      if (v < 0 || v >= n_tgt) {
        throw std::invalid_argument("map: level " + index_to_string(source->multi_index(f)) +
                                    " leaves the target cell set");
      }
    }
  }
}

MultiSSetMap MultiSSetMap::identity(std::shared_ptr<const MultiSSet> x) {
  std::vector<CellMap> lv(x->level_count());
  for (std::size_t f = 0; f < lv.size(); ++f) {
    lv[f].resize(x->level_at(f).names.size());
    std::iota(lv[f].begin(), lv[f].end(), 0);
  }
  return MultiSSetMap(x, x, std::move(lv));
}

bool MultiSSetMap::is_levelwise_injective() const {
  for (std::size_t f = 0; f < levels.size(); ++f) {
    std::vector<bool> hit(target->level_at(f).names.size(), false);
    for (int v : levels[f]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

bool MultiSSetMap::is_levelwise_surjective() const {
  for (std::size_t f = 0; f < levels.size(); ++f) {
    std::vector<bool> hit(target->level_at(f).names.size(), false);
    for (int v : levels[f]) hit[v] = true;
    for (bool h : hit)
      if (!h) return false;
  }
  return true;
}

bool MultiSSetMap::is_levelwise_bijective() const { return is_levelwise_injective() && is_levelwise_surjective(); }

MultiSSetMap compose(const MultiSSetMap& f, const MultiSSetMap& g) {
  if (!(*f.target == *g.source)) throw std::invalid_argument("compose: target of f is not the source of g");
  std::vector<CellMap> lv(f.levels.size());
  for (std::size_t l = 0; l < lv.size(); ++l) {
    lv[l].reserve(f.levels[l].size());
    for (int v : f.levels[l]) lv[l].push_back(g.levels[l][v]);
  }
  return MultiSSetMap(f.source, g.target, std::move(lv));
}

ValidationReport validate_map(const MultiSSetMap& f) {
  ValidationReport rep;
  const MultiSSet& x = *f.source;
  const MultiSSet& y = *f.target;
  const int n = x.arity();
  for (std::size_t fl = 0; fl < x.level_count(); ++fl) {
    const MultiIndex at = x.multi_index(fl);
    const auto& lvl = x.level_at(fl);
    for (int a = 0; a < n; ++a) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool is_face = pass == 0;
        const auto& maps = is_face ? lvl.face[a] : lvl.degen[a];
        if (maps.empty()) continue;
        MultiIndex to = at;
        to[a] += is_face ? -1 : 1;
        const auto& ymaps = is_face ? y.level(at).face[a] : y.level(at).degen[a];
        const std::size_t tf = x.flat_index(to);
        for (std::size_t i = 0; i < maps.size(); ++i) {
          for (std::size_t c = 0; c < maps[i].size(); ++c) {
            int lhs = f.levels[tf][maps[i][c]];
            int rhs = ymaps[i][f.levels[fl][c]];
            if (lhs != rhs) {
              rep.add(std::string(is_face ? "f d" : "f s") + std::to_string(a) + ":" + std::to_string(i) + " = " +
                          (is_face ? "d" : "s") + std::to_string(a) + ":" + std::to_string(i) + " f",
                      "level " + index_to_string(at) + " cell '" + lvl.names[c] + "'");
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// validation

ValidationReport validate_multisset(const MultiSSet& x) {
  ValidationReport rep;
  const int n = x.arity();
  const auto& bounds = x.dim_bounds();
  auto flat_shift = [&](const MultiIndex& at, int a, int delta) {
    MultiIndex to = at;
    to[a] += delta;
    return x.flat_index(to);
  };
  auto report = [&](const MultiIndex& at, int c, const std::string& rule) {
    rep.add(rule, "level " + index_to_string(at) + " cell '" + x.name(at, c) + "'");
  };
  auto tag = [](const char* op, int a, int i) { return std::string(op) + std::to_string(a) + ":" + std::to_string(i); };

  for (std::size_t fl = 0; fl < x.level_count(); ++fl) {
    const MultiIndex at = x.multi_index(fl);
    const auto& lvl = x.level_at(fl);
    const int cells = static_cast<int>(lvl.names.size());
    for (int a = 0; a < n; ++a) {
      const int k = at[a];
      // d_i d_j = d_{j-1} d_i, i < j
      if (k >= 2) {
        const auto& down = x.level_at(flat_shift(at, a, -1));
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            for (int c = 0; c < cells; ++c) {
              int lhs = down.face[a][i][lvl.face[a][j][c]];
              int rhs = down.face[a][j - 1][lvl.face[a][i][c]];
              if (lhs != rhs) report(at, c, tag("d", a, i) + " " + tag("d", a, j) + " = " + tag("d", a, j - 1) + " " + tag("d", a, i));
            }
      }
      // s_i s_j = s_{j+1} s_i, i <= j
      if (k + 2 <= bounds[a]) {
        const auto& up = x.level_at(flat_shift(at, a, +1));
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= j; ++i)
            for (int c = 0; c < cells; ++c) {
              int lhs = up.degen[a][i][lvl.degen[a][j][c]];
              int rhs = up.degen[a][j + 1][lvl.degen[a][i][c]];
              if (lhs != rhs) report(at, c, tag("s", a, i) + " " + tag("s", a, j) + " = " + tag("s", a, j + 1) + " " + tag("s", a, i));
            }
      }
      // mixed identities
      if (k + 1 <= bounds[a]) {
        const auto& up = x.level_at(flat_shift(at, a, +1));
        const MultiSSet::Level* down = k >= 1 ? &x.level_at(flat_shift(at, a, -1)) : nullptr;
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= k + 1; ++i)
            for (int c = 0; c < cells; ++c) {
              int lhs = up.face[a][i][lvl.degen[a][j][c]];
              if (i == j || i == j + 1) {
                if (lhs != c) report(at, c, tag("d", a, i) + " " + tag("s", a, j) + " = id");
              } else if (down != nullptr && i < j) {
                int rhs = down->degen[a][j - 1][lvl.face[a][i][c]];
                if (lhs != rhs) report(at, c, tag("d", a, i) + " " + tag("s", a, j) + " = " + tag("s", a, j - 1) + " " + tag("d", a, i));
              } else if (down != nullptr && i > j + 1) {
                int rhs = down->degen[a][j][lvl.face[a][i - 1][c]];
                if (lhs != rhs) report(at, c, tag("d", a, i) + " " + tag("s", a, j) + " = " + tag("s", a, j) + " " + tag("d", a, i - 1));
              }
            }
      }
    }
    // cross-axis commutation
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const bool da = at[a] >= 1, db = at[b] >= 1;
        const bool sa = at[a] < bounds[a], sb = at[b] < bounds[b];
        for (int pa = 0; pa < 2; ++pa)
          for (int pb = 0; pb < 2; ++pb) {
            const bool a_face = pa == 0, b_face = pb == 0;
            if ((a_face ? !da : !sa) || (b_face ? !db : !sb)) continue;
            const int shift_a = a_face ? -1 : 1, shift_b = b_face ? -1 : 1;
            const auto& via_a = x.level_at(flat_shift(at, a, shift_a));
            const auto& via_b = x.level_at(flat_shift(at, b, shift_b));
            const auto& amaps = a_face ? lvl.face[a] : lvl.degen[a];
            const auto& bmaps = b_face ? lvl.face[b] : lvl.degen[b];
            const auto& a_then_b = b_face ? via_a.face[b] : via_a.degen[b];
            const auto& b_then_a = a_face ? via_b.face[a] : via_b.degen[a];
            for (std::size_t i = 0; i < amaps.size(); ++i)
              for (std::size_t j = 0; j < bmaps.size(); ++j)
                for (int c = 0; c < cells; ++c) {
                  int lhs = a_then_b[j][amaps[i][c]];
                  int rhs = b_then_a[i][bmaps[j][c]];
                  if (lhs != rhs) {
                    report(at, c,
                           std::string("axes ") + std::to_string(a) + "," + std::to_string(b) + ": " +
                               tag(a_face ? "d" : "s", a, static_cast<int>(i)) + " commutes with " +
                               tag(b_face ? "d" : "s", b, static_cast<int>(j)));
                  }
                }
          }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// constructions

MultiSSet external_product(const MultiSSet& x, const MultiSSet& y) {
  const int nx = x.arity(), ny = y.arity();
  std::vector<int> bounds = x.dim_bounds();
  bounds.insert(bounds.end(), y.dim_bounds().begin(), y.dim_bounds().end());
  const std::size_t ly = y.level_count();
  std::vector<MultiSSet::Level> levels(x.level_count() * ly);
  for (std::size_t fx = 0; fx < x.level_count(); ++fx) {
    const auto& lx = x.level_at(fx);
    for (std::size_t fy = 0; fy < ly; ++fy) {
      const auto& lyv = y.level_at(fy);
      auto& out = levels[fx * ly + fy];
      const int cy = static_cast<int>(lyv.names.size());
      out.names.reserve(lx.names.size() * lyv.names.size());
      for (const auto& a : lx.names)
        for (const auto& b : lyv.names) out.names.push_back(pair_name(a, b));
      out.face.resize(nx + ny);
      out.degen.resize(nx + ny);
      const MultiIndex iy = y.multi_index(fy);
      for (int a = 0; a < nx; ++a) {
        for (int pass = 0; pass < 2; ++pass) {
          const auto& src = pass == 0 ? lx.face[a] : lx.degen[a];
          auto& dst = pass == 0 ? out.face[a] : out.degen[a];
          for (const auto& m : src) {
            CellMap cm;
            cm.reserve(out.names.size());
            for (int u : m)
              for (int v = 0; v < cy; ++v) cm.push_back(u * cy + v);
            dst.push_back(std::move(cm));
          }
        }
      }
      for (int b = 0; b < ny; ++b) {
        for (int pass = 0; pass < 2; ++pass) {
          const auto& src = pass == 0 ? lyv.face[b] : lyv.degen[b];
          auto& dst = pass == 0 ? out.face[nx + b] : out.degen[nx + b];
          if (src.empty()) continue;
          MultiIndex to = iy;
          to[b] += pass == 0 ? -1 : 1;
          const int cy_to = y.cell_count(to);
          for (const auto& m : src) {
            CellMap cm;
            cm.reserve(out.names.size());
            for (int u = 0; u < static_cast<int>(lx.names.size()); ++u)
              for (int v = 0; v < cy; ++v) cm.push_back(u * cy_to + m[v]);
            dst.push_back(std::move(cm));
          }
        }
      }
    }
  }
  return MultiSSet(std::move(bounds), std::move(levels));
}

MultiSSetMap external_product(const MultiSSetMap& f, const MultiSSetMap& g) {
  auto src = std::make_shared<const MultiSSet>(external_product(*f.source, *g.source));
  auto tgt = std::make_shared<const MultiSSet>(external_product(*f.target, *g.target));
  const std::size_t ly = g.source->level_count();
  std::vector<CellMap> levels(f.levels.size() * ly);
  for (std::size_t fx = 0; fx < f.levels.size(); ++fx)
    for (std::size_t fy = 0; fy < ly; ++fy) {
      const int cy_t = static_cast<int>(g.target->level_at(fy).names.size());
      auto& cm = levels[fx * ly + fy];
      for (int u : f.levels[fx])
        for (int v : g.levels[fy]) cm.push_back(u * cy_t + v);
    }
  return MultiSSetMap(src, tgt, std::move(levels));
}

MultiSSet levelwise_product(const MultiSSet& x, const MultiSSet& y) {
  if (x.dim_bounds() != y.dim_bounds()) throw std::invalid_argument("levelwise_product: dim_bounds differ");
  const int n = x.arity();
  std::vector<MultiSSet::Level> levels(x.level_count());
  for (std::size_t f = 0; f < levels.size(); ++f) {
    const MultiIndex at = x.multi_index(f);
    const auto& lx = x.level_at(f);
    const auto& ly = y.level_at(f);
    auto& out = levels[f];
    for (const auto& a : lx.names)
      for (const auto& b : ly.names) out.names.push_back(pair_name(a, b));
    out.face.resize(n);
    out.degen.resize(n);
    const int cy = static_cast<int>(ly.names.size());
    for (int a = 0; a < n; ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& mx = pass == 0 ? lx.face[a] : lx.degen[a];
        const auto& my = pass == 0 ? ly.face[a] : ly.degen[a];
        if (mx.empty()) continue;
        MultiIndex to = at;
        to[a] += pass == 0 ? -1 : 1;
        const int cy_to = y.cell_count(to);
        auto& dst = pass == 0 ? out.face[a] : out.degen[a];
        for (std::size_t i = 0; i < mx.size(); ++i) {
          CellMap cm;
          cm.reserve(out.names.size());
          for (int u : mx[i])
            for (int v = 0; v < cy; ++v) cm.push_back(u * cy_to + my[i][v]);
          dst.push_back(std::move(cm));
        }
      }
  }
  return MultiSSet(x.dim_bounds(), std::move(levels));
}

MultiSSet coproduct(const MultiSSet& x, const MultiSSet& y) {
  if (x.dim_bounds() != y.dim_bounds()) throw std::invalid_argument("coproduct: dim_bounds differ");
  const int n = x.arity();
  std::vector<MultiSSet::Level> levels(x.level_count());
  for (std::size_t f = 0; f < levels.size(); ++f) {
    const MultiIndex at = x.multi_index(f);
    const auto& lx = x.level_at(f);
    const auto& ly = y.level_at(f);
    auto& out = levels[f];
    for (const auto& a : lx.names) out.names.push_back("0." + a);
    for (const auto& b : ly.names) out.names.push_back("1." + b);
    out.face.resize(n);
    out.degen.resize(n);
    for (int a = 0; a < n; ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& mx = pass == 0 ? lx.face[a] : lx.degen[a];
        const auto& my = pass == 0 ? ly.face[a] : ly.degen[a];
        if (mx.empty()) continue;
        MultiIndex to = at;
        to[a] += pass == 0 ? -1 : 1;
        const int offset = x.cell_count(to);
        auto& dst = pass == 0 ? out.face[a] : out.degen[a];
        for (std::size_t i = 0; i < mx.size(); ++i) {
          CellMap cm = mx[i];
          for (int v : my[i]) cm.push_back(offset + v);
          dst.push_back(std::move(cm));
        }
      }
  }
  return MultiSSet(x.dim_bounds(), std::move(levels));
}

MultiSSet constant_multisset(const std::vector<int>& dim_bounds, const std::vector<std::string>& names) {
  const int n = static_cast<int>(dim_bounds.size());
  CellMap id(names.size());
  std::iota(id.begin(), id.end(), 0);
  const auto indices = all_indices(dim_bounds);
  std::vector<MultiSSet::Level> levels(indices.size());
  for (std::size_t f = 0; f < indices.size(); ++f) {
    auto& lvl = levels[f];
    lvl.names = names;
    lvl.face.resize(n);
    lvl.degen.resize(n);
    for (int a = 0; a < n; ++a) {
      if (indices[f][a] >= 1) lvl.face[a].assign(indices[f][a] + 1, id);
      if (indices[f][a] < dim_bounds[a]) lvl.degen[a].assign(indices[f][a] + 1, id);
    }
  }
  return MultiSSet(dim_bounds, std::move(levels));
}

MultiSSet terminal_multisset(const std::vector<int>& dim_bounds) { return constant_multisset(dim_bounds, {"*"}); }

bool is_constant(const MultiSSet& x) {
  const std::size_t count = x.level_at(0).names.size();
  for (const auto& lvl : x.levels()) {
    if (lvl.names.size() != count) return false;
    for (const auto* maps : {&lvl.face, &lvl.degen})
      for (const auto& per_axis : *maps)
        for (const auto& m : per_axis)
          for (std::size_t c = 0; c < m.size(); ++c)
            if (m[c] != static_cast<int>(c)) return false;
  }
  return true;
}

FiberProduct fiber_product(const MultiSSetMap& f, const MultiSSetMap& g) {
  if (f.target != g.target && !(*f.target == *g.target)) {
    throw std::invalid_argument("fiber_product: maps have different targets");
  }
  const MultiSSet& x = *f.source;
  const MultiSSet& y = *g.source;
  const MultiSSet& z = *f.target;
  const int n = x.arity();
  const std::size_t L = x.level_count();

  // Per level: for each z, the y's over it; for each x, the offset of its block.
  struct Index {
    std::vector<int> pos_in_bucket;  // y -> position among y's with the same image
    std::vector<int> bucket_size;    // z -> count
    std::vector<int> offset;         // x -> first pair index
    std::vector<std::pair<int, int>> pairs;
  };
  std::vector<Index> idx(L);
  for (std::size_t l = 0; l < L; ++l) {
    auto& I = idx[l];
    const int nz = static_cast<int>(z.level_at(l).names.size());
    I.bucket_size.assign(nz, 0);
    std::vector<std::vector<int>> buckets(nz);
    for (int yc = 0; yc < static_cast<int>(g.levels[l].size()); ++yc) {
      int zc = g.levels[l][yc];
      I.pos_in_bucket.push_back(I.bucket_size[zc]++);
      buckets[zc].push_back(yc);
    }
    int next = 0;
    for (int xc = 0; xc < static_cast<int>(f.levels[l].size()); ++xc) {
      I.offset.push_back(next);
      for (int yc : buckets[f.levels[l][xc]]) I.pairs.emplace_back(xc, yc);
      next += I.bucket_size[f.levels[l][xc]];
    }
  }
  std::vector<MultiSSet::Level> levels(L);
  for (std::size_t l = 0; l < L; ++l) {
    const MultiIndex at = x.multi_index(l);
    const auto& I = idx[l];
    auto& out = levels[l];
    for (auto [xc, yc] : I.pairs) out.names.push_back(pair_name(x.level_at(l).names[xc], y.level_at(l).names[yc]));
    out.face.resize(n);
    out.degen.resize(n);
    for (int a = 0; a < n; ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& mx = pass == 0 ? x.level_at(l).face[a] : x.level_at(l).degen[a];
        const auto& my = pass == 0 ? y.level_at(l).face[a] : y.level_at(l).degen[a];
        if (mx.empty()) continue;
        MultiIndex to = at;
        to[a] += pass == 0 ? -1 : 1;
        const auto& J = idx[x.flat_index(to)];
        auto& dst = pass == 0 ? out.face[a] : out.degen[a];
        for (std::size_t i = 0; i < mx.size(); ++i) {
          CellMap cm;
          cm.reserve(I.pairs.size());
          for (auto [xc, yc] : I.pairs) cm.push_back(J.offset[mx[i][xc]] + J.pos_in_bucket[my[i][yc]]);
          dst.push_back(std::move(cm));
        }
      }
  }
  auto obj = std::make_shared<const MultiSSet>(x.dim_bounds(), std::move(levels));
  std::vector<CellMap> p1(L), p2(L);
  for (std::size_t l = 0; l < L; ++l)
    for (auto [xc, yc] : idx[l].pairs) {
      p1[l].push_back(xc);
      p2[l].push_back(yc);
    }
  FiberProduct out{obj, MultiSSetMap(obj, f.source, std::move(p1)), MultiSSetMap(obj, g.source, std::move(p2))};
  return out;
}

MultiSSet permute_axes(const MultiSSet& x, const std::vector<int>& perm) {
  const int n = x.arity();
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(perm.size()) == n;
  for (int a = 0; ok && a < n; ++a) ok = sorted[a] == a;
  if (!ok) throw std::invalid_argument("permute_axes: not a permutation of the axes");
  std::vector<int> bounds(n);
  for (int a = 0; a < n; ++a) bounds[a] = x.dim_bound(perm[a]);
  const auto indices = all_indices(bounds);
  std::vector<MultiSSet::Level> levels;
  levels.reserve(indices.size());
  for (const auto& J : indices) {
    MultiIndex I(n);
    for (int a = 0; a < n; ++a) I[perm[a]] = J[a];
    const auto& src = x.level(I);
    MultiSSet::Level lvl;
    lvl.names = src.names;
    lvl.face.resize(n);
    lvl.degen.resize(n);
    for (int a = 0; a < n; ++a) {
      lvl.face[a] = src.face[perm[a]];
      lvl.degen[a] = src.degen[perm[a]];
    }
    levels.push_back(std::move(lvl));
  }
  return MultiSSet(std::move(bounds), std::move(levels));
}

MultiSSet outer_level(const MultiSSet& x, int m) {
  if (x.arity() < 1) throw std::invalid_argument("outer_level: arity 0 has no outer axis");
  if (m < 0 || m > x.dim_bound(0)) throw std::out_of_range("outer_level: level " + std::to_string(m) + " not stored");
  std::vector<int> bounds(x.dim_bounds().begin() + 1, x.dim_bounds().end());
  const std::size_t per = x.level_count() / static_cast<std::size_t>(x.dim_bound(0) + 1);
  std::vector<MultiSSet::Level> levels;
  levels.reserve(per);
  for (std::size_t k = 0; k < per; ++k) {
    const auto& src = x.level_at(static_cast<std::size_t>(m) * per + k);
    MultiSSet::Level lvl;
    lvl.names = src.names;
    lvl.face.assign(src.face.begin() + 1, src.face.end());
    lvl.degen.assign(src.degen.begin() + 1, src.degen.end());
    levels.push_back(std::move(lvl));
  }
  return MultiSSet(std::move(bounds), std::move(levels));
}

MultiSSetMap outer_level_map(const MultiSSetMap& f, int m) {
  auto src = std::make_shared<const MultiSSet>(outer_level(*f.source, m));
  auto tgt = std::make_shared<const MultiSSet>(outer_level(*f.target, m));
  const std::size_t per = src->level_count();
  std::vector<CellMap> lv(f.levels.begin() + static_cast<std::ptrdiff_t>(m * per),
                          f.levels.begin() + static_cast<std::ptrdiff_t>((m + 1) * per));
  return MultiSSetMap(src, tgt, std::move(lv));
}

OuterTower outer_tower(const MultiSSet& x) {
  if (x.arity() < 1) throw std::invalid_argument("outer_tower: arity 0");
  OuterTower t;
  const int B = x.dim_bound(0);
  for (int m = 0; m <= B; ++m) t.levels.push_back(std::make_shared<const MultiSSet>(outer_level(x, m)));
  const std::size_t per = t.levels[0]->level_count();
  t.face.resize(B + 1);
  t.degen.resize(B + 1);
  for (int m = 0; m <= B; ++m) {
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_face = pass == 0;
      if (is_face ? m == 0 : m == B) continue;
      const int to = is_face ? m - 1 : m + 1;
      for (int i = 0; i <= m; ++i) {
        std::vector<CellMap> lv(per);
        for (std::size_t k = 0; k < per; ++k) {
          const auto& lvl = x.level_at(static_cast<std::size_t>(m) * per + k);
          lv[k] = is_face ? lvl.face[0][i] : lvl.degen[0][i];
        }
        (is_face ? t.face : t.degen)[m].emplace_back(t.levels[m], t.levels[to], std::move(lv));
      }
    }
  }
  return t;
}

namespace {

// Spine tuples per inner level, lexicographic.
std::vector<std::vector<std::vector<int>>> spine_tuples(const MultiSSet& x, int m) {
  const int B = x.dim_bound(0);
  if (m < 1 || m > B) throw std::out_of_range("segal: level " + std::to_string(m) + " not stored");
  if (B < 1) throw std::out_of_range("segal: level 1 not stored");
  const std::size_t per = x.level_count() / static_cast<std::size_t>(B + 1);
  std::vector<std::vector<std::vector<int>>> out(per);
  for (std::size_t k = 0; k < per; ++k) {
    const auto& l1 = x.level_at(per + k);
    const int c1 = static_cast<int>(l1.names.size());
    const auto& d0 = l1.face[0][0];  // target
    const auto& d1 = l1.face[0][1];  // source
    std::vector<std::vector<int>> by_source;
    int n0 = static_cast<int>(x.level_at(k).names.size());
    by_source.resize(n0);
    for (int c = 0; c < c1; ++c) by_source[d1[c]].push_back(c);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == m) {
        out[k].push_back(cur);
        return;
      }
      if (depth == 0) {
        for (int c = 0; c < c1; ++c) {
          cur.push_back(c);
          self(self, 1);
          cur.pop_back();
        }
      } else {
        for (int c : by_source[d0[cur.back()]]) {
          cur.push_back(c);
          self(self, depth + 1);
          cur.pop_back();
        }
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace

MultiSSet spine_product(const MultiSSet& x, int m) {
  auto tuples = spine_tuples(x, m);
  MultiSSet a1 = outer_level(x, 1);
  if (m == 1) return a1;
  std::vector<int> bounds(x.dim_bounds().begin() + 1, x.dim_bounds().end());
  return detail::build_multisset<std::vector<int>>(
      bounds, [&](const MultiIndex& at) { return tuples[a1.flat_index(at)]; },
      [&](const MultiIndex& at, const std::vector<int>& t) {
        std::string s = "(";
        for (std::size_t j = 0; j < t.size(); ++j) s += (j ? "," : "") + a1.name(at, t[j]);
        return s + ")";
      },
      [&](const MultiIndex& at, int a, int i, const std::vector<int>& t) {
        std::vector<int> r;
        for (int c : t) r.push_back(a1.face(at, a, i, c));
        return r;
      },
      [&](const MultiIndex& at, int a, int i, const std::vector<int>& t) {
        std::vector<int> r;
        for (int c : t) r.push_back(a1.degen(at, a, i, c));
        return r;
      });
}

MultiSSetMap outer_segal_map(const MultiSSet& x, int m) {
  auto tuples = spine_tuples(x, m);
  auto src = std::make_shared<const MultiSSet>(outer_level(x, m));
  auto tgt = std::make_shared<const MultiSSet>(spine_product(x, m));
  const std::size_t per = src->level_count();
  std::vector<CellMap> lv(per);
  for (std::size_t k = 0; k < per; ++k) {
    std::map<std::vector<int>, int> lookup;
    for (std::size_t t = 0; t < tuples[k].size(); ++t) lookup.emplace(tuples[k][t], static_cast<int>(t));
    MultiIndex at = x.multi_index(static_cast<std::size_t>(m) * per + k);
    const int cells = static_cast<int>(src->level_at(k).names.size());
    for (int c = 0; c < cells; ++c) {
      std::vector<int> spine;
      for (int j = 0; j < m; ++j) spine.push_back(x.act(at, 0, MonotoneMap::spine_edge(m, j), c));
      lv[k].push_back(lookup.at(spine));
    }
  }
  return MultiSSetMap(src, tgt, std::move(lv));
}

Truncation truncate_with_quotient(const MultiSSet& x) {
  const int n = x.arity();
  if (n < 1) throw std::invalid_argument("truncation needs arity >= 1");
  if (x.dim_bound(n - 1) < 1) throw std::invalid_argument("need 1-cells: innermost dim_bound is 0");
  std::vector<int> bounds(x.dim_bounds().begin(), x.dim_bounds().end() - 1);
  const auto outer = all_indices(bounds);
  std::vector<Partition> parts;
  parts.reserve(outer.size());
  for (const auto& K : outer) {
    MultiIndex at0 = K, at1 = K;
    at0.push_back(0);
    at1.push_back(1);
    DisjointSets ds(x.cell_count(at0));
    const auto& l1 = x.level(at1);
    for (std::size_t c = 0; c < l1.names.size(); ++c) ds.unite(l1.face[n - 1][0][c], l1.face[n - 1][1][c]);
    parts.push_back(ds.partition());
  }
  std::vector<MultiSSet::Level> levels(outer.size());
  std::map<MultiIndex, std::size_t> flat;
  for (std::size_t f = 0; f < outer.size(); ++f) flat[outer[f]] = f;
  for (std::size_t f = 0; f < outer.size(); ++f) {
    MultiIndex at0 = outer[f];
    at0.push_back(0);
    const auto& src = x.level(at0);
    const auto& P = parts[f];
    auto& out = levels[f];
    for (int r : P.representatives) out.names.push_back(src.names[r]);
    out.face.resize(n - 1);
    out.degen.resize(n - 1);
    for (int a = 0; a < n - 1; ++a)
      for (int pass = 0; pass < 2; ++pass) {
        const auto& maps = pass == 0 ? src.face[a] : src.degen[a];
        if (maps.empty()) continue;
        MultiIndex to = outer[f];
        to[a] += pass == 0 ? -1 : 1;
        const auto& Q = parts[flat.at(to)];
        auto& dst = pass == 0 ? out.face[a] : out.degen[a];
        for (std::size_t i = 0; i < maps.size(); ++i) {
          CellMap cm(P.class_count(), -1);
          for (int c = 0; c < P.size(); ++c) {
            int image = Q.class_of[maps[i][c]];
            int& slot = cm[P.class_of[c]];
            if (slot < 0) {
              slot = image;
            } else if (slot != image) {
              throw std::logic_error("truncation: induced map not well defined at level " +
                                     index_to_string(outer[f]) + " cell '" + src.names[c] + "'");
            }
          }
          dst.push_back(std::move(cm));
        }
      }
  }
  Truncation t{MultiSSet(std::move(bounds), std::move(levels)), {}};
  for (const auto& P : parts) t.quotient.push_back(P.class_of);
  return t;
}

MultiSSet pi0_innermost(const MultiSSet& x) { return truncate_with_quotient(x).object; }
MultiSSet truncate_T(const MultiSSet& x) { return pi0_innermost(x); }

MultiSSet T_power(const MultiSSet& x, int k) {
  if (k < 0 || k > x.arity()) throw std::invalid_argument("T_power: exponent out of range");
  MultiSSet cur = x;
  for (int i = 0; i < k; ++i) cur = truncate_T(cur);
  return cur;
}

MultiSSetMap truncate_map(const MultiSSetMap& f) {
  auto ts = truncate_with_quotient(*f.source);
  auto tt = truncate_with_quotient(*f.target);
  auto src = std::make_shared<const MultiSSet>(std::move(ts.object));
  auto tgt = std::make_shared<const MultiSSet>(std::move(tt.object));
  std::vector<CellMap> lv(src->level_count());
  for (std::size_t k = 0; k < lv.size(); ++k) {
    MultiIndex at0 = src->multi_index(k);
    at0.push_back(0);
    const std::size_t fl = f.source->flat_index(at0);
    lv[k].assign(src->level_at(k).names.size(), -1);
    for (std::size_t c = 0; c < f.levels[fl].size(); ++c) {
      int image = tt.quotient[k][f.levels[fl][c]];
      int& slot = lv[k][ts.quotient[k][c]];
      if (slot < 0) {
        slot = image;
      } else if (slot != image) {
        throw std::logic_error("truncate_map: induced map not well defined");
      }
    }
  }
  return MultiSSetMap(src, tgt, std::move(lv));
}

MultiSSetMap T_power_map(const MultiSSetMap& f, int k) {
  MultiSSetMap cur = f;
  for (int i = 0; i < k; ++i) cur = truncate_map(cur);
  return cur;
}

}  // namespace ngpd
