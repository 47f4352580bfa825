#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace potkit {

enum class Op
{
  atom,
  top,
  bottom,
  negation,
  conjunction,
  disjunction,
  implication,
  equivalence,
  box,
  diamond
};

/// Immutable propositional modal formula. Copies share structure.
class Formula
{
public:
  /// Default-constructs `true`.
  Formula();

  static Formula atom( std::string name );
  static Formula top();
  static Formula bottom();
  static Formula negation( Formula f );
  static Formula conjunction( Formula lhs, Formula rhs );
  static Formula disjunction( Formula lhs, Formula rhs );
  static Formula implication( Formula lhs, Formula rhs );
  static Formula equivalence( Formula lhs, Formula rhs );
  static Formula box( Formula f );
  static Formula diamond( Formula f );

  Op op() const noexcept;
  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  /// Atom name; empty for every other constructor.
  const std::string& name() const noexcept;
  /// Operand of a unary node or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Identity of the shared node; equal ids imply equal formulas (not conversely).
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==( const Formula& a, const Formula& b );
  friend bool operator!=( const Formula& a, const Formula& b ) { return !( a == b ); }

private:
  struct node;
  explicit Formula( std::shared_ptr<const node> n );
  std::shared_ptr<const node> node_;
};

// Shorthands used throughout the tests and constructors.
inline Formula atom( std::string name ) { return Formula::atom( std::move( name ) ); }
inline Formula operator~( Formula f ) { return Formula::negation( std::move( f ) ); }
inline Formula operator&( Formula a, Formula b ) { return Formula::conjunction( std::move( a ), std::move( b ) ); }
inline Formula operator|( Formula a, Formula b ) { return Formula::disjunction( std::move( a ), std::move( b ) ); }
inline Formula implies( Formula a, Formula b ) { return Formula::implication( std::move( a ), std::move( b ) ); }
inline Formula iff( Formula a, Formula b ) { return Formula::equivalence( std::move( a ), std::move( b ) ); }
inline Formula box( Formula f ) { return Formula::box( std::move( f ) ); }
inline Formula diamond( Formula f ) { return Formula::diamond( std::move( f ) ); }

/// Parses the ASCII surface syntax. Throws parse_error.
///
///   formula := iff
///   iff     := imp ("<->" imp)*
///   imp     := or ("->" imp)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "~" unary | "[]" unary | "<>" unary | atom | "true" | "false" | "(" formula ")"
Formula parse( std::string_view text );

/// Canonical text: every binary node is parenthesized, unary operators are prefixed.
std::string to_string( const Formula& f );

using Substitution = std::map<std::string, Formula>;

/// Simultaneous substitution; atoms absent from `s` are kept.
Formula substitute( const Formula& f, const Substitution& s );

std::size_t modal_depth( const Formula& f );
/// Number of nodes.
std::size_t size( const Formula& f );
std::set<std::string> atoms( const Formula& f );

bool is_valid_atom_name( std::string_view name );

enum class AxiomScheme
{
  K,
  Dual,
  T,
  Four,
  Dot2,
  Dot3
};

/// Display name: "K", "Dual", "T", "4", ".2", ".3".
std::string scheme_name( AxiomScheme scheme );
/// Accepts the display names plus "Four", "Dot2", "Dot3" (case-insensitive).
std::optional<AxiomScheme> scheme_from_name( std::string_view name );
/// True for the schemes with two metavariables (K and .3).
bool scheme_is_binary( AxiomScheme scheme );

/// Plugs formulas into an axiom scheme:
///
///   K     [](phi -> psi) -> ([]phi -> []psi)
///   Dual  ~<>phi <-> []~phi
///   T     []phi -> phi
///   4     []phi -> [][]phi
///   .2    <>[]phi -> []<>phi
///   .3    (<>phi & <>psi) -> <>((phi & <>psi) | (<>phi & psi))
///
/// Throws arity_error when `psi` is given to a unary scheme or missing for a binary one.
Formula instantiate( AxiomScheme scheme, const Formula& phi, const std::optional<Formula>& psi = std::nullopt );

} // namespace potkit
