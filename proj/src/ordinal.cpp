#include <potkit/ordinal.hpp>

#include <potkit/error.hpp>

#include <cctype>
#include <limits>

namespace potkit {

namespace {

std::uint64_t checked_add( std::uint64_t a, std::uint64_t b )
{
  if ( a > std::numeric_limits<std::uint64_t>::max() - b )
    throw error( "ordinal coefficient overflow" );
  return a + b;
}

std::uint64_t checked_mul( std::uint64_t a, std::uint64_t b )
{
  if ( a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a )
    throw error( "ordinal coefficient overflow" );
  return a * b;
}

std::uint32_t checked_add32( std::uint32_t a, std::uint32_t b )
{
  if ( a > std::numeric_limits<std::uint32_t>::max() - b )
    throw error( "ordinal exponent overflow" );
  return a + b;
}

} // namespace

Ordinal Ordinal::finite( std::uint64_t n ) { return n == 0 ? Ordinal{} : Ordinal( { Term{ 0, n } } ); }

Ordinal Ordinal::omega() { return omega_power( 1 ); }

Ordinal Ordinal::omega_power( std::uint32_t exponent, std::uint64_t coefficient )
{
  return coefficient == 0 ? Ordinal{} : Ordinal( { Term{ exponent, coefficient } } );
}

Ordinal Ordinal::from_terms( std::vector<Term> terms )
{
  for ( std::size_t i = 0; i < terms.size(); ++i )
  {
    if ( terms[i].coefficient == 0 )
      throw invalid_structure( "Cantor normal form term with zero coefficient" );
    if ( i > 0 && terms[i].exponent >= terms[i - 1].exponent )
      throw invalid_structure( "Cantor normal form exponents must strictly decrease" );
  }
  return Ordinal( std::move( terms ) );
}

std::uint64_t Ordinal::finite_part() const noexcept
{
  return is_successor() ? terms_.back().coefficient : 0;
}

std::uint32_t Ordinal::trailing_exponent() const noexcept { return terms_.empty() ? 0 : terms_.back().exponent; }

std::uint32_t Ordinal::leading_exponent() const noexcept { return terms_.empty() ? 0 : terms_.front().exponent; }

Ordinal operator+( const Ordinal& a, const Ordinal& b )
{
  if ( b.is_zero() )
    return a;
  const auto lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> out;
  for ( const auto& t : a.terms_ )
  {
    if ( t.exponent > lead )
      out.push_back( t );
    else if ( t.exponent == lead )
    {
      out.push_back( { lead, checked_add( t.coefficient, b.terms_.front().coefficient ) } );
      break;
    }
    else
      break;
  }
  const bool merged = !out.empty() && out.back().exponent == lead;
  for ( std::size_t i = merged ? 1 : 0; i < b.terms_.size(); ++i )
    out.push_back( b.terms_[i] );
  return Ordinal( std::move( out ) );
}

Ordinal operator*( const Ordinal& a, const Ordinal& b )
{
  if ( a.is_zero() || b.is_zero() )
    return {};
  const auto& head = a.terms_.front();
  Ordinal product;
  for ( const auto& t : b.terms_ )
  {
    if ( t.exponent > 0 )
      product = product + Ordinal::omega_power( checked_add32( head.exponent, t.exponent ), t.coefficient );
    else
    {
      // a * n = w^e1 * (c1 * n) + (rest of a)
      std::vector<Ordinal::Term> chunk = a.terms_;
      chunk.front().coefficient = checked_mul( head.coefficient, t.coefficient );
      product = product + Ordinal( std::move( chunk ) );
    }
  }
  return product;
}

std::strong_ordering operator<=>( const Ordinal& a, const Ordinal& b )
{
  const auto n = std::min( a.terms_.size(), b.terms_.size() );
  for ( std::size_t i = 0; i < n; ++i )
  {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if ( x.exponent != y.exponent )
      return x.exponent <=> y.exponent;
    if ( x.coefficient != y.coefficient )
      return x.coefficient <=> y.coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string to_string( const Ordinal& a )
{
  if ( a.is_zero() )
    return "0";
  std::string out;
  for ( const auto& t : a.terms() )
  {
    if ( !out.empty() )
      out += " + ";
    if ( t.exponent == 0 )
    {
      out += std::to_string( t.coefficient );
      continue;
    }
    out += 'w';
    if ( t.exponent > 1 )
      out += '^' + std::to_string( t.exponent );
    if ( t.coefficient > 1 )
      out += '*' + std::to_string( t.coefficient );
  }
  return out;
}

std::string to_identifier( const Ordinal& a )
{
  if ( a.is_zero() )
    return "0";
  std::string out;
  for ( const auto& t : a.terms() )
  {
    if ( !out.empty() )
      out += '_';
    if ( t.exponent == 0 )
    {
      out += std::to_string( t.coefficient );
      continue;
    }
    out += 'w';
    if ( t.exponent > 1 )
      out += std::to_string( t.exponent );
    if ( t.coefficient > 1 )
      out += 'x' + std::to_string( t.coefficient );
  }
  return out;
}

namespace {

class ordinal_parser
{
public:
  explicit ordinal_parser( std::string_view text ) : text_( text ) {}

  Ordinal parse()
  {
    skip();
    if ( at_ == text_.size() )
      throw parse_error( "empty ordinal", at_ );
    Ordinal sum = term();
    skip();
    while ( at_ < text_.size() && text_[at_] == '+' )
    {
      ++at_;
      sum = sum + term();
      skip();
    }
    if ( at_ != text_.size() )
      throw parse_error( std::string( "unexpected '" ) + text_[at_] + "' in ordinal", at_ );
    return sum;
  }

private:
  void skip()
  {
    while ( at_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[at_] ) ) )
      ++at_;
  }

  std::uint64_t number()
  {
    skip();
    const auto start = at_;
    std::uint64_t value = 0;
    while ( at_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[at_] ) ) )
    {
      const auto digit = static_cast<std::uint64_t>( text_[at_] - '0' );
      if ( value > ( std::numeric_limits<std::uint64_t>::max() - digit ) / 10 )
        throw parse_error( "number too large", start );
      value = value * 10 + digit;
      ++at_;
    }
    if ( at_ == start )
      throw parse_error( "expected a number", start );
    return value;
  }

  Ordinal term()
  {
    skip();
    if ( at_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[at_] ) ) )
      return Ordinal::finite( number() );
    if ( text_.substr( at_ ).starts_with( "omega" ) )
      at_ += 5;
    else if ( at_ < text_.size() && text_[at_] == 'w' )
      ++at_;
    else
      throw parse_error( "expected 'w' or a number", at_ );

    std::uint64_t exponent = 1;
    std::uint64_t coefficient = 1;
    skip();
    if ( at_ < text_.size() && text_[at_] == '^' )
    {
      ++at_;
      const auto pos = at_;
      exponent = number();
      if ( exponent > std::numeric_limits<std::uint32_t>::max() )
        throw parse_error( "exponent too large", pos );
      skip();
    }
    if ( at_ < text_.size() && text_[at_] == '*' )
    {
      ++at_;
      coefficient = number();
    }
    return Ordinal::omega_power( static_cast<std::uint32_t>( exponent ), coefficient );
  }

  std::string_view text_;
  std::size_t at_ = 0;
};

} // namespace

Ordinal parse_ordinal( std::string_view text ) { return ordinal_parser( text ).parse(); }

bool closed_under_addition_below( const Ordinal& lambda, const Ordinal& gamma )
{
  if ( lambda.is_zero() )
    return true;
  // Removing one copy of lambda's last term w^t gives xi < lambda with xi + w^t = lambda, while
  // every eta < w^t is absorbed below lambda.
  return gamma <= Ordinal::omega_power( lambda.trailing_exponent() );
}

Ordinal ratchet_length( const Ordinal& lambda )
{
  return closed_under_addition_below( lambda, lambda ) ? lambda : lambda * Ordinal::omega();
}

} // namespace potkit
