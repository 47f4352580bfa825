#pragma once

#include <potkit/formula.hpp>
#include <potkit/frame_enum.hpp>
#include <potkit/kripke.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace potkit {

/// S4 is decided over finite preorders, S4.2 over finite directed (Church-Rosser) preorders and
/// S4.3 over finite linear preorders. Each logic has the finite model property with respect to
/// its class, so a formula outside the logic is refuted on some finite frame of the class; the
/// bound on that frame's size is not computed here, which is why verdicts read "valid up to bound".
///
/// The S4.2 class is wider than the pre-Boolean algebras used in completeness proofs for the modal
/// logic of forcing; every pre-Boolean algebra is directed, so refutations found there also refute
/// over directed preorders.
enum class Theory
{
  S4,
  S4_2,
  S4_3
};

std::string theory_name( Theory t );
/// Accepts "S4", "S4.2", "S4_2", "S4.3", "S4_3".
std::optional<Theory> theory_from_name( std::string_view name );
FrameClass frame_class_of( Theory t );

struct Refutation
{
  KripkeModel model;
  std::size_t world = 0;
};

struct DecisionOutcome
{
  Theory theory = Theory::S4;
  std::size_t bound_used = 0;
  /// Empty when every frame of the class up to the bound validates the formula.
  std::optional<Refutation> refutation;

  bool valid_up_to_bound() const noexcept { return !refutation.has_value(); }
};

/// Searches frames of the theory's class with at most `frame_bound` worlds, in canonical order,
/// for a falsifying valuation. The first witness is the least frame (size, then canonical code),
/// then the least valuation bitstring, then the least world.
/// Throws budget_exceeded when frame_bound exceeds `cap` or a frame needs more than
/// `valuation_budget` valuations.
DecisionOutcome decide( const Formula& f, Theory theory, std::size_t frame_bound,
                        std::uint64_t valuation_budget = default_valuation_budget,
                        std::size_t cap = default_enumeration_cap );

/// True iff `check` on the embedded model really is false at the embedded world.
bool verify_refutation( const Formula& f, const Refutation& r );

} // namespace potkit
