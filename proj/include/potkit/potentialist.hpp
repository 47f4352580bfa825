#pragma once

#include <potkit/formula.hpp>
#include <potkit/kripke.hpp>
#include <potkit/logics.hpp>
#include <potkit/ordinal.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace potkit {

/// A world of a potentialist system. The class content of a world is abstracted to the atomic
/// statements true of it plus a set of content tokens (names of the classes it contains) used for
/// containment between worlds and systems.
struct World
{
  std::string label;
  std::map<std::string, bool> valuation;
  std::set<std::string> content;
};

/// Finite family of worlds ordered by a reflexive, transitive relation that refines containment of
/// content. Frontier worlds are truncation boundaries of an infinite system: modal operators still
/// range over them, but universal certifications skip them.
class PotentialistSystem
{
public:
  PotentialistSystem() = default;
  /// Validates the invariants and throws invalid_structure on violation: the order is reflexive
  /// and transitive on worlds.size() worlds, every valuation is total on the alphabet, w <= v
  /// implies content(w) is a subset of content(v), and the frontier has one bit per world.
  PotentialistSystem( std::string name, std::vector<World> worlds, Frame order, std::set<std::string> alphabet,
                      WorldSet frontier );

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return worlds_.size(); }
  const std::vector<World>& worlds() const noexcept { return worlds_; }
  const World& world( std::size_t i ) const { return worlds_.at( i ); }
  const Frame& order() const noexcept { return order_; }
  const std::set<std::string>& alphabet() const noexcept { return alphabet_; }
  const WorldSet& frontier() const noexcept { return frontier_; }
  WorldSet interior() const { return ~frontier_; }
  std::optional<std::size_t> find_world( const std::string& label ) const;

  /// The system as a Kripke model: accessibility is the order, atoms are the alphabet.
  const KripkeModel& model() const noexcept { return model_; }

private:
  std::string name_;
  std::vector<World> worlds_;
  Frame order_;
  std::set<std::string> alphabet_;
  WorldSet frontier_;
  KripkeModel model_;
};

/// Truth of substitute(f, subst) at `world`, computed world by world with memoization.
/// Throws unknown_atom_error for an atom outside the alphabet.
bool evaluate( const PotentialistSystem& s, std::size_t world, const Formula& f, const Substitution& subst = {} );

/* substitution pools and scheme reports */

struct PoolSpec
{
  /// Nesting depth of the generated formulas.
  std::size_t depth = 1;
  /// Atoms to build from; empty means the whole alphabet.
  std::vector<std::string> atoms;
  /// Refuse pools with more members than this.
  std::size_t max_size = 5000;
};

struct PoolEntry
{
  Formula formula;
  WorldSet truth;
};

/// Level 0 holds true, false and the atoms. Level i+1 adds ~a, []a, <>a for every a in level i and
/// a & b, a | b for a in level i and b in level 0. Members with the same truth set in `s` are
/// merged (the first formula generated is kept), which loses nothing: a scheme instance's truth
/// depends only on the truth sets substituted into it. Throws budget_exceeded past max_size.
std::vector<PoolEntry> substitution_pool( const PotentialistSystem& s, const PoolSpec& spec );

enum class WorldScope
{
  all_worlds,
  interior
};

/// Truth set of the scheme instance with metavariables holding on `phi` and `psi`.
WorldSet scheme_truth( const Frame& fr, AxiomScheme scheme, const WorldSet& phi, const WorldSet& psi );

struct SchemeFailure
{
  Substitution substitution; // keys "p" and, for binary schemes, "q"
  std::size_t world = 0;
  Formula instance;
  /// evaluate() confirmed the instance false at the world.
  bool verified = false;
};

struct SchemeResult
{
  AxiomScheme scheme = AxiomScheme::T;
  std::size_t instances_checked = 0;
  std::optional<SchemeFailure> failure;
};

struct SchemeReport
{
  std::size_t pool_size = 0;
  WorldScope scope = WorldScope::all_worlds;
  std::vector<SchemeResult> results;
};

/// For each scheme, the first instance over the pool (pool order, phi before psi) that is false at
/// some world in scope, with the least such world.
SchemeReport scheme_report( const PotentialistSystem& s, const std::vector<AxiomScheme>& schemes,
                            const PoolSpec& pool, WorldScope scope = WorldScope::all_worlds );

/* control statements */

enum class ControlKind
{
  button,
  switch_,
  ratchet_element
};

struct ControlStatement
{
  ControlKind kind = ControlKind::button;
  Formula statement;
  /// Position on the ratchet, for ratchet elements.
  std::optional<Ordinal> index;
};

std::vector<Formula> statements( const std::vector<ControlStatement>& controls );

/// Worlds where `b` is pushed, i.e. where []b holds.
WorldSet pushed( const PotentialistSystem& s, const Formula& b );

/// <>[]b at every world of `scope` (default: the interior); [] ranges over all worlds.
bool certify_button( const PotentialistSystem& s, const Formula& b, const std::optional<WorldSet>& scope = std::nullopt );

/// <>sw and <>~sw at every world of `scope` (default: the interior).
bool certify_switch( const PotentialistSystem& s, const Formula& sw, const std::optional<WorldSet>& scope = std::nullopt );

/// From every world w of `scope`, every pattern that pushes a superset of the buttons pushed at w
/// and sets the switches arbitrarily is realized exactly at some world above w.
bool certify_independent_controls( const PotentialistSystem& s, const std::vector<Formula>& buttons,
                                   const std::vector<Formula>& switches,
                                   const std::optional<WorldSet>& scope = std::nullopt );

enum class RatchetForm
{
  finite,
  long_ratchet
};

/// Every element is a button, and at every world pushing element i pushes every element j < i.
/// The long form also requires that no world of `scope` has every element pushed.
bool certify_ratchet( const PotentialistSystem& s, const std::vector<Formula>& elements, RatchetForm form,
                      const std::optional<WorldSet>& scope = std::nullopt );

/* refutations through control statements */

struct SystemRefutation
{
  Substitution substitution;
  std::size_t world = 0;
  /// The finite countermodel the substitution transfers.
  Refutation witness;
};

struct RefutationOutcome
{
  std::optional<SystemRefutation> refutation;
  /// Why no refutation was produced.
  std::string reason;
};

struct RefuteOptions
{
  std::size_t frame_bound = 4;
  std::uint64_t valuation_budget = default_valuation_budget;
  /// Upper limit on backtracking steps per p-morphism search.
  std::size_t search_budget = 2'000'000;
};

/// Transfers an S4.2 countermodel of `f` into the system. The witness frame is taken as a p-morphic
/// image of the control frame at a start world w: points are (pushed-button set, switch pattern),
/// the button part ordered by inclusion and every switch pattern in one cluster. Each atom of f is
/// replaced by the disjunction of the control descriptions of the points where it holds in the
/// witness. The result is checked with evaluate() before it is returned.
/// Throws error when the controls are not independent on the interior.
RefutationOutcome refute_via_controls( const PotentialistSystem& s, const Formula& f,
                                       const std::vector<Formula>& buttons, const std::vector<Formula>& switches,
                                       const std::optional<WorldSet>& scope = std::nullopt,
                                       const RefuteOptions& options = {} );

/// Transfers an S4.3 countermodel of `f` through the ratchet position: a world's position is the
/// number of elements pushed there, and the witness frame must be a p-morphic image of the chain
/// of positions above the start world. Throws error when the ratchet does not certify or its
/// nominal length is not closed under addition below w^2.
RefutationOutcome refute_via_ratchet( const PotentialistSystem& s, const Formula& f,
                                      const std::vector<Formula>& ratchet, const Ordinal& nominal_length,
                                      const std::optional<WorldSet>& scope = std::nullopt,
                                      const RefuteOptions& options = {} );

/// Finds g from `source` onto the part of `target` generated by `target_root` with
/// g(source_root) = target_root, u R v => g(u) R g(v), and every R-successor of g(u) is g of some
/// successor of u. Returns nullopt when none exists within `step_budget` backtracking steps.
std::optional<std::vector<std::size_t>> find_p_morphism( const Frame& source, std::size_t source_root,
                                                         const Frame& target, std::size_t target_root,
                                                         std::size_t step_budget = 2'000'000 );

/* comparing systems */

struct SystemComparison
{
  /// Every world of the second system has its content inside some world of the first.
  bool covers = false;
  /// The second system refines the first: every world of the first is (by content) a world of
  /// the second, and the first covers the second.
  bool refines = false;
};

SystemComparison compare_systems( const PotentialistSystem& a, const PotentialistSystem& b );

} // namespace potkit
