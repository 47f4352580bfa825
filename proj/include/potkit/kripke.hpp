#pragma once

#include <potkit/formula.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace potkit {

using WorldSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<std::size_t, std::size_t>;

/// Finite Kripke frame on worlds 0..size()-1.
class Frame
{
public:
  Frame() = default;
  explicit Frame( std::size_t worlds );
  /// Throws world_range_error for an edge outside 0..worlds-1.
  Frame( std::size_t worlds, const std::vector<Edge>& access );

  std::size_t size() const noexcept { return succ_.size(); }
  bool accesses( std::size_t from, std::size_t to ) const;
  const WorldSet& successors( std::size_t w ) const;
  WorldSet predecessors( std::size_t w ) const;

  void add_edge( std::size_t from, std::size_t to );

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Reflexive-transitive closure.
  Frame closure() const;

  /// Subframe on the worlds reachable from `root` (root becomes world 0; the others keep their
  /// relative order). `mapping[i]` is the original index of new world i.
  Frame generated_subframe( std::size_t root, std::vector<std::size_t>* mapping = nullptr ) const;

  /// Relabels world w as perm[w].
  Frame permuted( const std::vector<std::size_t>& perm ) const;

  friend bool operator==( const Frame& a, const Frame& b ) { return a.succ_ == b.succ_; }

private:
  void require( std::size_t w ) const;
  std::vector<WorldSet> succ_;
};

using Valuation = std::map<std::string, WorldSet>;

/// Frame plus valuation. Atoms outside the valuation are an error when evaluated.
class KripkeModel
{
public:
  KripkeModel() = default;
  /// Throws invalid_structure when a valuation set does not have frame.size() bits.
  KripkeModel( Frame frame, Valuation valuation );

  const Frame& frame() const noexcept { return frame_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  std::size_t size() const noexcept { return frame_.size(); }

private:
  Frame frame_;
  Valuation valuation_;
};

/// Worlds all of whose successors lie in `s`.
WorldSet box_set( const Frame& fr, const WorldSet& s );
/// Worlds with some successor in `s`.
WorldSet diamond_set( const Frame& fr, const WorldSet& s );

/// Set of worlds where `f` holds. Throws unknown_atom_error.
WorldSet truth_set( const KripkeModel& m, const Formula& f );

/// Kripke satisfaction at a world. Throws unknown_atom_error, world_range_error.
bool check( const KripkeModel& m, std::size_t world, const Formula& f );

bool valid_in_model( const KripkeModel& m, const Formula& f );

struct Countermodel
{
  KripkeModel model;
  std::size_t world = 0;
};

/// Upper bound on the number of valuations a frame-validity sweep may enumerate.
inline constexpr std::uint64_t default_valuation_budget = std::uint64_t{ 1 } << 22;

/// First (least valuation bitstring, then least world) countermodel of `f` on `fr`, if any.
/// Valuations range over the atoms of `f` only; valuation index bit `a * size + w` puts world w
/// into the a-th atom (atoms in lexicographic order).
/// Throws budget_exceeded when 2^(atoms * worlds) > budget.
std::optional<Countermodel> find_countermodel( const Frame& fr, const Formula& f,
                                               std::uint64_t budget = default_valuation_budget );

bool valid_in_frame( const Frame& fr, const Formula& f, std::uint64_t budget = default_valuation_budget );

/// Worlds where `f` holds under every valuation of its atoms. Same budget rule as find_countermodel.
WorldSet frame_truth_set( const Frame& fr, const Formula& f, std::uint64_t budget = default_valuation_budget );

struct FrameProperties
{
  bool reflexive = false;
  bool transitive = false;
  /// Church-Rosser: any two successors of a world have a common successor.
  bool directed = false;
  /// Any two worlds whatsoever have a common successor.
  bool pairwise_directed = false;
  /// Any two worlds are comparable.
  bool linear = false;
  /// No forward branching: any two successors of a world are comparable.
  bool forward_linear = false;
  bool antisymmetric = false;
};

FrameProperties frame_properties( const Frame& fr );

} // namespace potkit
