#pragma once

#include <potkit/formula.hpp>
#include <potkit/ordinal.hpp>
#include <potkit/potentialist.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace potkit {

/// How an infinite system is cut down to finitely many worlds.
struct TruncationSpec
{
  /// Worlds are indexed by ordinals below this.
  Ordinal ordinal_cut = Ordinal::omega() + Ordinal::finite( 6 );
  /// Largest coefficient used in a sampled index.
  std::uint64_t height_cap = 5;
  std::size_t coordinates = 2;
};

/// Refuse truncations with more worlds than this.
inline constexpr std::size_t max_system_worlds = 4096;

/// Ordinals below the cut whose Cantor normal form coefficients are all at most height_cap, in
/// increasing order. Throws invalid_structure for a zero cut or cap, budget_exceeded past
/// max_system_worlds.
std::vector<Ordinal> truncation_sample( const TruncationSpec& trunc );

/// "r." + to_identifier(eta): "Tr_eta exists".
std::string ratchet_atom( const Ordinal& eta );

/// Smallest truth system for lambda: worlds X_xi for xi in the truncation sample, linearly
/// ordered, with r_eta true at X_xi iff eta <= xi. The top world is the frontier.
/// Throws error when the cut exceeds ratchet_length(lambda).
PotentialistSystem smallest_truth_system( const Ordinal& lambda, const TruncationSpec& trunc );

/// The ratchet r_eta over the sampled eta, in increasing order.
std::vector<Formula> smallest_ratchet( const TruncationSpec& trunc );

/// "t.i.xi": "Tr_xi(C_i) exists".
std::string cohen_atom( std::size_t coordinate, std::uint64_t height );
/// "s.i": the height of coordinate i is even.
std::string cohen_parity_atom( std::size_t coordinate );

/// Grid of height vectors (mu_0..mu_{n-1}) in {0..h}^n ordered coordinatewise. World index is the
/// vector read in base h+1 with coordinate 0 least significant, so the base world is 0. Worlds with
/// some mu_i = h are the frontier. Throws invalid_structure unless n >= 2 and h >= 2.
PotentialistSystem cohen_truth_system( std::size_t n, std::uint64_t h );

struct ControlSet
{
  std::vector<Formula> buttons;
  std::vector<Formula> switches;
};

/// Buttons t.i.1 for even i, switches s.i for odd i.
ControlSet cohen_controls( std::size_t n );

/// W0 below W_T and W_C; t holds only at W_T. No frontier.
PotentialistSystem killing_truth_system();

/// A root below two incomparable tops marked by cB and cC.
PotentialistSystem mostowski_fork();

/// Closes `s` under joins: whenever two worlds have a common lower bound, a world with the union of
/// their contents is added (atoms by disjunction) unless one with that content exists. The result
/// is ordered by content inclusion. Requires that the order of `s` is content inclusion; throws
/// invalid_structure otherwise.
PotentialistSystem amalgamated_variant( const PotentialistSystem& s );

/// Names accepted by build_system: "smallest-truth", "cohen", "killing-truth",
/// "mostowski-fork", "amalgamated-fork".
std::vector<std::string> system_names();

} // namespace potkit
