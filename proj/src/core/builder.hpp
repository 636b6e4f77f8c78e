#pragma once

// Internal helper: assembles a MultiSSet from keyed cells and keyed
// structure maps. Keys must be totally ordered; lookups go through a
// per-level std::map.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngpd/multi_sset.hpp"

namespace ngpd::detail {

template <class Key, class CellsFn, class NameFn, class FaceFn, class DegenFn>
MultiSSet build_multisset(const std::vector<int>& bounds, CellsFn&& cells, NameFn&& name, FaceFn&& face,
                          DegenFn&& degen) {
  const auto indices = all_indices(bounds);
  std::vector<std::vector<Key>> keys(indices.size());
  std::vector<std::map<Key, int>> lookup(indices.size());
  std::map<MultiIndex, std::size_t> flat;
  for (std::size_t f = 0; f < indices.size(); ++f) {
    flat[indices[f]] = f;
    keys[f] = cells(indices[f]);
    for (std::size_t c = 0; c < keys[f].size(); ++c) lookup[f].emplace(keys[f][c], static_cast<int>(c));
  }
  auto find = [&](const MultiIndex& at, const Key& k) {
    std::size_t f = flat.at(at);
    auto it = lookup[f].find(k);
    if (it == lookup[f].end()) {
      throw std::logic_error("builder: structure map leaves the cell set at " + index_to_string(at));
    }
    return it->second;
  };
  const int n = static_cast<int>(bounds.size());
  std::vector<MultiSSet::Level> levels(indices.size());
  for (std::size_t f = 0; f < indices.size(); ++f) {
    const MultiIndex& at = indices[f];
    auto& lvl = levels[f];
    lvl.names.reserve(keys[f].size());
    for (const auto& k : keys[f]) lvl.names.push_back(name(at, k));
    lvl.face.resize(n);
    lvl.degen.resize(n);
    for (int a = 0; a < n; ++a) {
      if (at[a] >= 1) {
        MultiIndex down = at;
        --down[a];
        for (int i = 0; i <= at[a]; ++i) {
          CellMap map;
          map.reserve(keys[f].size());
          for (const auto& k : keys[f]) map.push_back(find(down, face(at, a, i, k)));
          lvl.face[a].push_back(std::move(map));
        }
      }
      if (at[a] < bounds[a]) {
        MultiIndex up = at;
        ++up[a];
        for (int i = 0; i <= at[a]; ++i) {
          CellMap map;
          map.reserve(keys[f].size());
          for (const auto& k : keys[f]) map.push_back(find(up, degen(at, a, i, k)));
          lvl.degen[a].push_back(std::move(map));
        }
      }
    }
  }
  return MultiSSet(bounds, std::move(levels));
}

}  // namespace ngpd::detail
