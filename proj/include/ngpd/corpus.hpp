#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngpd/groupoid.hpp"
#include "ngpd/io.hpp"
#include "ngpd/multi_sset.hpp"
#include "ngpd/simplicial_set.hpp"

namespace ngpd {

/// "small" adds 6 seeded random groupoids and 3 random bisimplicial products
/// to the fixed lists, "medium" 16 and 6. Document counts do not depend on
/// the seed.
enum class SizeClass { small, medium };
inline constexpr std::size_t kSmallCorpusDocuments = 209;
inline constexpr std::size_t kMediumCorpusDocuments = 232;
const char* to_string(SizeClass s);
std::optional<SizeClass> parse_size_class(std::string_view s);

struct NamedGroupoid {
  std::string name;
  FinGroupoid groupoid;
};
struct NamedFunctor {
  std::string name;
  GroupoidFunctor functor;
};
struct NamedSSet {
  std::string name;
  SimplicialSet sset;
  /// Set when the simplicial set is a nerve; tests derive expectations from it.
  std::optional<FinGroupoid> nerve_of;
  /// For the other fixtures: every component is contractible by construction.
  bool contractible_components = false;
};
struct NamedMultiSSet {
  std::string name;
  MultiSSet object;
};
struct NamedMap {
  std::string name;
  MultiSSetMap map;
};
struct NamedPullback {
  std::string name;
  MultiSSetMap f;
  MultiSSetMap g;
};

/// Deterministic test corpus. Random groupoids are drawn with
/// std::mt19937_64 seeded by `seed`, reduced by plain modulo.
struct Corpus {
  std::uint64_t seed = 0;
  SizeClass size = SizeClass::small;
  std::vector<NamedGroupoid> groupoids;    // <= 5 objects, <= 16 morphisms
  std::vector<NamedFunctor> functors;      // between small groupoids
  std::vector<NamedSSet> ssets;            // nerves at D = 2 and small simplicial sets
  std::vector<NamedMultiSSet> bisimplicial;  // arity 2, bounds (2, 2), fixed ones first
  std::vector<NamedMultiSSet> ngroupoids;    // 2-groupoid carriers, bounds (3, 3)
  std::vector<NamedMap> nfunctors;           // between 1- and 2-groupoid carriers
  std::vector<NamedPullback> pullbacks;      // cospans f, g of arity-2 maps, bounds (2, 2)
};

Corpus build_corpus(std::uint64_t seed, SizeClass size);
/// One document per corpus item, in corpus order. Pullbacks contribute two
/// nfunctor documents named "<name>/f" and "<name>/g".
std::vector<Document> corpus_documents(const Corpus& c);
std::vector<Document> generate_corpus(std::uint64_t seed, SizeClass size);

}  // namespace ngpd
