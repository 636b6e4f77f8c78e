#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngpd/groupoid.hpp"
#include "ngpd/report.hpp"

namespace ngpd {

struct Letter {
  int generator = 0;
  bool inverse = false;
  bool operator==(const Letter&) const = default;
};

/// Words are read in path order: the first letter is traversed first.
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word invert(const Word& w);
std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

/// Finitely presented group. Each relator r asserts r = 1.
struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(generators.size()); }
  bool operator==(const FpGroup&) const = default;
};

/// Presentation of a groupoid: objects, generating arrows, and relations
/// lhs = rhs between parallel paths.
struct FpGroupoid {
  struct Generator {
    std::string name;
    int source = 0;
    int target = 0;
    bool operator==(const Generator&) const = default;
  };
  struct Relator {
    Word lhs;
    Word rhs;
    int base = 0;        // common start object of both paths
    std::string origin;  // name of the cell that produced it
    bool operator==(const Relator&) const = default;
  };

  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  bool operator==(const FpGroupoid&) const = default;
};

/// Every word is a path and every relator pair has matching endpoints
/// (empty words are identities at the endpoint of the other side).
ValidationReport validate_fp_groupoid(const FpGroupoid& p);

/// Vertex group at `object`: spanning tree of its component by breadth-first
/// search from `object` (neighbours visited in generator order), tree
/// generators collapsed, relators rewritten and freely reduced. Throws
/// std::out_of_range for an unknown object.
FpGroup vertex_group(const FpGroupoid& p, int object);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // d1 | d2 | ..., each >= 2
  bool operator==(const AbelianInvariants&) const = default;
};
std::string to_string(const AbelianInvariants& a);

/// Invariant factors (nonzero diagonal of the Smith normal form, as a
/// divisibility chain, units included) of an integer matrix.
std::vector<std::int64_t> invariant_factors(std::vector<std::vector<std::int64_t>> m);

/// Integer normal form of the relator exponent-sum matrix.
AbelianInvariants abelianization(const FpGroup& p);

/// |Hom(P, T)| by backtracking over generator images, checking each relator
/// as soon as all its generators are assigned.
std::int64_t hom_count(const FpGroup& p, const FinGroup& t);

/// Multiplication-table presentation: one generator per non-identity
/// element, relator a b (ab)^-1 for every pair.
FpGroup table_presentation(const FinGroup& g);

/// Comparison invariants of a presented group: abelianization and the number
/// of homomorphisms into each reference group of order <= 8.
struct GroupInvariants {
  AbelianInvariants abelian;
  std::vector<std::int64_t> hom_counts;
  bool operator==(const GroupInvariants&) const = default;
  bool trivial() const;
};
GroupInvariants group_invariants(const FpGroup& p);
std::string to_string(const GroupInvariants& g);

}  // namespace ngpd
