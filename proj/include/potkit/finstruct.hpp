#pragma once

#include <potkit/potentialist.hpp>

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace potkit {

/// Finite first-order structures and their definable subsets. This is a finite analogue of a model
/// of sets with its classes: definability with parameters is decided by the Galois criterion (a
/// subset is definable from parameters iff every automorphism fixing them preserves it).

inline constexpr std::size_t default_structure_cap = 8;
/// Subsets are bitmasks, so no cap may exceed this.
inline constexpr std::size_t max_structure_size = 16;

/// Bit i set when element i is a member.
using Subset = std::uint32_t;
using Tuple = std::vector<std::size_t>;
using Permutation = std::vector<std::size_t>;

struct Relation
{
  std::string name;
  std::size_t arity = 0;
  std::set<Tuple> tuples;
};

class FiniteStructure
{
public:
  FiniteStructure() = default;
  /// Throws invalid_structure for tuples of the wrong length or outside the domain, and
  /// budget_exceeded when n is above `cap` (or above max_structure_size).
  FiniteStructure( std::size_t n, std::vector<Relation> relations, std::size_t cap = default_structure_cap );

  std::size_t size() const noexcept { return n_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  Subset domain() const noexcept { return n_ == 0 ? 0 : static_cast<Subset>( ( std::uint64_t{ 1 } << n_ ) - 1 ); }

private:
  std::size_t n_ = 0;
  std::vector<Relation> relations_;
};

/// Family of subsets of the domain, kept sorted and duplicate-free.
struct ClassFamily
{
  std::vector<Subset> members;
  /// Set when the family equals its definability closure.
  bool closed = false;

  bool contains( Subset a ) const;
  /// Sorts and deduplicates `members`.
  void normalize();
  friend bool operator==( const ClassFamily& a, const ClassFamily& b ) { return a.members == b.members; }
};

/// All relation-preserving bijections, identity first, the rest in lexicographic order.
std::vector<Permutation> automorphisms( const FiniteStructure& m );

/// Image of a subset under a permutation.
Subset apply( const Permutation& g, Subset a );

/// Element orbits of `group` as subsets, ordered by least element.
std::vector<Subset> orbits( std::size_t n, const std::vector<Permutation>& group );

/// Subsets preserved by every automorphism that fixes each parameter and maps each extra subset
/// onto itself: exactly the unions of orbits of that group.
ClassFamily definable_subsets( const FiniteStructure& m, const std::vector<std::size_t>& params = {},
                               const std::vector<Subset>& extra = {} );

/// Least closed family containing `seed`.
ClassFamily def_closure( const FiniteStructure& m, const ClassFamily& seed );

/// "{0,2}"; the empty set prints as "{}".
std::string subset_to_string( Subset a, std::size_t n );
/// Atom naming the membership of `a`: "X.0_2", "X.empty".
std::string subset_atom( Subset a, std::size_t n );

/// Every closed family, ordered by inclusion. Atom subset_atom(b) holds at a family containing b,
/// for each benchmark b (default: the singletons). Content is the member list. Worlds are listed
/// in order of discovery from the least family. Throws budget_exceeded past `max_worlds`.
PotentialistSystem top_down_system( const FiniteStructure& m, const std::vector<Subset>& benchmarks = {},
                                    std::size_t max_worlds = 4096 );

} // namespace potkit
