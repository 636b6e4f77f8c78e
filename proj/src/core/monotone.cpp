#include "ngpd/monotone.hpp"

#include <stdexcept>
#include <string>

namespace ngpd {

MonotoneMap::MonotoneMap(int target_rank, std::vector<int> values)
    : target_rank_(target_rank), values_(std::move(values)) {
  if (target_rank_ < 0) throw std::invalid_argument("monotone map: negative target rank");
  if (values_.empty()) throw std::invalid_argument("monotone map: empty source");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_rank_) {
      throw std::invalid_argument("monotone map: value " + std::to_string(values_[i]) +
                                  " outside [0," + std::to_string(target_rank_) + "]");
    }
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw std::invalid_argument("monotone map: values decrease at position " + std::to_string(i));
    }
  }
}

MonotoneMap MonotoneMap::identity(int rank) {
  std::vector<int> v(rank + 1);
  for (int i = 0; i <= rank; ++i) v[i] = i;
  return MonotoneMap(rank, std::move(v));
}

MonotoneMap MonotoneMap::coface(int rank, int i) {
  if (rank < 1 || i < 0 || i > rank) throw std::invalid_argument("coface out of range");
  std::vector<int> v;
  for (int j = 0; j <= rank; ++j)
    if (j != i) v.push_back(j);
  return MonotoneMap(rank, std::move(v));
}

MonotoneMap MonotoneMap::codegeneracy(int rank, int i) {
  if (rank < 0 || i < 0 || i > rank) throw std::invalid_argument("codegeneracy out of range");
  std::vector<int> v;
  for (int j = 0; j <= rank; ++j) {
    v.push_back(j);
    if (j == i) v.push_back(j);
  }
  return MonotoneMap(rank, std::move(v));
}

MonotoneMap MonotoneMap::spine_edge(int rank, int i) {
  if (i < 0 || i + 1 > rank) throw std::invalid_argument("spine edge out of range");
  return MonotoneMap(rank, {i, i + 1});
}

MonotoneMap MonotoneMap::vertex(int rank, int v) { return MonotoneMap(rank, {v}); }

bool MonotoneMap::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  int next = 0;
  for (int v : values_) {
    if (v > next) return false;
    if (v == next) ++next;
  }
  return next == target_rank_ + 1;
}

MonotoneMap compose_monotone(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.target_rank() != g.source_rank()) {
    throw std::invalid_argument("compose_monotone: rank mismatch ([" + std::to_string(f.target_rank()) +
                                "] vs [" + std::to_string(g.source_rank()) + "])");
  }
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(g.target_rank(), std::move(v));
}

MonotoneFactorization factorize(const MonotoneMap& m) {
  MonotoneFactorization out;
  std::vector<bool> hit(m.target_rank() + 1, false);
  for (int v : m.values()) hit[v] = true;
  for (int j = m.target_rank(); j >= 0; --j)
    if (!hit[j]) out.deleted.push_back(j);
  for (int i = 0; i < m.source_rank(); ++i)
    if (m(i) == m(i + 1)) out.duplicated.push_back(i);
  return out;
}

}  // namespace ngpd
