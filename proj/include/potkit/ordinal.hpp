#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace potkit {

/// Ordinal below w^w in Cantor normal form: w^e1*c1 + ... + w^ek*ck with e1 > ... > ek and every
/// ci > 0. Zero is the empty sum.
class Ordinal
{
public:
  struct Term
  {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 0;

    friend bool operator==( const Term&, const Term& ) = default;
  };

  Ordinal() = default;

  static Ordinal finite( std::uint64_t n );
  static Ordinal omega();
  /// w^exponent * coefficient.
  static Ordinal omega_power( std::uint32_t exponent, std::uint64_t coefficient = 1 );
  /// Throws invalid_structure unless the terms are already in Cantor normal form.
  static Ordinal from_terms( std::vector<Term> terms );

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept { return terms_.empty() || terms_.front().exponent == 0; }
  bool is_successor() const noexcept { return !terms_.empty() && terms_.back().exponent == 0; }
  bool is_limit() const noexcept { return !terms_.empty() && terms_.back().exponent > 0; }
  /// Finite part; meaningful as a value only when is_finite().
  std::uint64_t finite_part() const noexcept;

  /// Exponent of the smallest term; 0 for zero.
  std::uint32_t trailing_exponent() const noexcept;
  std::uint32_t leading_exponent() const noexcept;

  friend Ordinal operator+( const Ordinal& a, const Ordinal& b );
  friend Ordinal operator*( const Ordinal& a, const Ordinal& b );
  friend bool operator==( const Ordinal&, const Ordinal& ) = default;
  friend std::strong_ordering operator<=>( const Ordinal& a, const Ordinal& b );

private:
  explicit Ordinal( std::vector<Term> terms ) : terms_( std::move( terms ) ) {}
  std::vector<Term> terms_;
};

/// "w^2*3 + w + 5"; zero prints as "0".
std::string to_string( const Ordinal& a );

/// Parses sums of terms `w^k*c`, `w^k`, `w*c`, `w`, `n` (`omega` is accepted for `w`).
/// Terms need not be in normal form; they are combined with ordinal addition.
/// Throws parse_error.
Ordinal parse_ordinal( std::string_view text );

/// Atom-name-safe rendering: "5", "w_5", "wx2", "w2x3_w_1".
std::string to_identifier( const Ordinal& a );

/// Whether every xi < lambda and eta < gamma give xi + eta < lambda, i.e. every element of lambda
/// has its eta-th successor inside lambda for each eta < gamma.
/// Decided exactly: lambda is zero, or gamma <= w^(trailing exponent of lambda).
bool closed_under_addition_below( const Ordinal& lambda, const Ordinal& gamma );

/// Index length of the smallest truth system for lambda: lambda itself when lambda is closed under
/// addition below lambda, otherwise lambda * w.
Ordinal ratchet_length( const Ordinal& lambda );

} // namespace potkit
