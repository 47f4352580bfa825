#include <potkit/formula.hpp>

#include <potkit/error.hpp>

#include <algorithm>
#include <cctype>

namespace potkit {

struct Formula::node
{
  Op op;
  std::string name;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
};

Formula::Formula( std::shared_ptr<const node> n ) : node_( std::move( n ) ) {}

Formula::Formula() : Formula( top() ) {}

Formula Formula::atom( std::string name )
{
  return Formula( std::make_shared<const node>( node{ Op::atom, std::move( name ), std::nullopt, std::nullopt } ) );
}

Formula Formula::top()
{
  static const auto shared = std::make_shared<const node>( node{ Op::top, {}, std::nullopt, std::nullopt } );
  return Formula( shared );
}

Formula Formula::bottom()
{
  static const auto shared = std::make_shared<const node>( node{ Op::bottom, {}, std::nullopt, std::nullopt } );
  return Formula( shared );
}

Formula Formula::negation( Formula f )
{
  return Formula( std::make_shared<const node>( node{ Op::negation, {}, std::move( f ), std::nullopt } ) );
}

Formula Formula::box( Formula f )
{
  return Formula( std::make_shared<const node>( node{ Op::box, {}, std::move( f ), std::nullopt } ) );
}

Formula Formula::diamond( Formula f )
{
  return Formula( std::make_shared<const node>( node{ Op::diamond, {}, std::move( f ), std::nullopt } ) );
}

Formula Formula::conjunction( Formula a, Formula b )
{
  return Formula( std::make_shared<const node>( node{ Op::conjunction, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::disjunction( Formula a, Formula b )
{
  return Formula( std::make_shared<const node>( node{ Op::disjunction, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::implication( Formula a, Formula b )
{
  return Formula( std::make_shared<const node>( node{ Op::implication, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::equivalence( Formula a, Formula b )
{
  return Formula( std::make_shared<const node>( node{ Op::equivalence, {}, std::move( a ), std::move( b ) } ) );
}

Op Formula::op() const noexcept { return node_->op; }

bool Formula::is_unary() const noexcept
{
  return node_->op == Op::negation || node_->op == Op::box || node_->op == Op::diamond;
}

bool Formula::is_binary() const noexcept
{
  switch ( node_->op )
  {
  case Op::conjunction:
  case Op::disjunction:
  case Op::implication:
  case Op::equivalence:
    return true;
  default:
    return false;
  }
}

const std::string& Formula::name() const noexcept { return node_->name; }

const Formula& Formula::lhs() const
{
  if ( !node_->lhs )
    throw error( "formula node has no operand" );
  return *node_->lhs;
}

const Formula& Formula::rhs() const
{
  if ( !node_->rhs )
    throw error( "formula node has no right operand" );
  return *node_->rhs;
}

bool operator==( const Formula& a, const Formula& b )
{
  if ( a.node_ == b.node_ )
    return true;
  if ( a.op() != b.op() )
    return false;
  if ( a.op() == Op::atom )
    return a.name() == b.name();
  if ( a.is_unary() )
    return a.lhs() == b.lhs();
  if ( a.is_binary() )
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  return true;
}

/* printing */

namespace {

const char* binary_symbol( Op op )
{
  switch ( op )
  {
  case Op::conjunction:
    return " & ";
  case Op::disjunction:
    return " | ";
  case Op::implication:
    return " -> ";
  case Op::equivalence:
    return " <-> ";
  default:
    return " ? ";
  }
}

void print_into( const Formula& f, std::string& out )
{
  switch ( f.op() )
  {
  case Op::atom:
    out += f.name();
    return;
  case Op::top:
    out += "true";
    return;
  case Op::bottom:
    out += "false";
    return;
  case Op::negation:
    out += '~';
    print_into( f.lhs(), out );
    return;
  case Op::box:
    out += "[]";
    print_into( f.lhs(), out );
    return;
  case Op::diamond:
    out += "<>";
    print_into( f.lhs(), out );
    return;
  default:
    out += '(';
    print_into( f.lhs(), out );
    out += binary_symbol( f.op() );
    print_into( f.rhs(), out );
    out += ')';
  }
}

} // namespace

std::string to_string( const Formula& f )
{
  std::string out;
  print_into( f, out );
  return out;
}

/* parsing */

namespace {

bool is_atom_start( char c ) { return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_'; }
bool is_atom_char( char c ) { return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '.'; }

enum class Tok
{
  end,
  ident,
  box,
  diamond,
  arrow,
  biarrow,
  amp,
  bar,
  tilde,
  lparen,
  rparen
};

struct token
{
  Tok kind;
  std::size_t pos;
  std::string text;
};

class parser
{
public:
  explicit parser( std::string_view text ) : text_( text ) { advance(); }

  Formula parse_all()
  {
    auto f = parse_iff();
    if ( cur_.kind != Tok::end )
      throw parse_error( "unexpected '" + cur_.text + "'", cur_.pos );
    return f;
  }

private:
  void advance()
  {
    while ( at_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[at_] ) ) )
      ++at_;
    const auto start = at_;
    if ( at_ >= text_.size() )
    {
      cur_ = { Tok::end, start, "end of input" };
      return;
    }
    const auto rest = text_.substr( at_ );
    auto take = [&]( Tok kind, std::size_t len ) {
      cur_ = { kind, start, std::string( rest.substr( 0, len ) ) };
      at_ += len;
    };
    if ( rest.starts_with( "<->" ) )
      return take( Tok::biarrow, 3 );
    if ( rest.starts_with( "[]" ) )
      return take( Tok::box, 2 );
    if ( rest.starts_with( "<>" ) )
      return take( Tok::diamond, 2 );
    if ( rest.starts_with( "->" ) )
      return take( Tok::arrow, 2 );
    switch ( rest[0] )
    {
    case '&':
      return take( Tok::amp, 1 );
    case '|':
      return take( Tok::bar, 1 );
    case '~':
      return take( Tok::tilde, 1 );
    case '(':
      return take( Tok::lparen, 1 );
    case ')':
      return take( Tok::rparen, 1 );
    default:
      break;
    }
    if ( is_atom_start( rest[0] ) )
    {
      std::size_t len = 1;
      while ( len < rest.size() && is_atom_char( rest[len] ) )
        ++len;
      return take( Tok::ident, len );
    }
    throw parse_error( std::string( "unknown token '" ) + rest[0] + "'", start );
  }

  Formula parse_iff()
  {
    auto lhs = parse_imp();
    while ( cur_.kind == Tok::biarrow )
    {
      advance();
      lhs = iff( lhs, parse_imp() );
    }
    return lhs;
  }

  Formula parse_imp()
  {
    auto lhs = parse_or();
    if ( cur_.kind == Tok::arrow )
    {
      advance();
      return implies( lhs, parse_imp() );
    }
    return lhs;
  }

  Formula parse_or()
  {
    auto lhs = parse_and();
    while ( cur_.kind == Tok::bar )
    {
      advance();
      lhs = lhs | parse_and();
    }
    return lhs;
  }

  Formula parse_and()
  {
    auto lhs = parse_unary();
    while ( cur_.kind == Tok::amp )
    {
      advance();
      lhs = lhs & parse_unary();
    }
    return lhs;
  }

  Formula parse_unary()
  {
    switch ( cur_.kind )
    {
    case Tok::tilde:
      advance();
      return ~parse_unary();
    case Tok::box:
      advance();
      return box( parse_unary() );
    case Tok::diamond:
      advance();
      return diamond( parse_unary() );
    case Tok::ident:
    {
      auto name = cur_.text;
      advance();
      if ( name == "true" )
        return Formula::top();
      if ( name == "false" )
        return Formula::bottom();
      return atom( std::move( name ) );
    }
    case Tok::lparen:
    {
      advance();
      auto inner = parse_iff();
      if ( cur_.kind != Tok::rparen )
        throw parse_error( "expected ')' but found '" + cur_.text + "'", cur_.pos );
      advance();
      return inner;
    }
    default:
      throw parse_error( "expected a formula but found '" + cur_.text + "'", cur_.pos );
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  token cur_{ Tok::end, 0, {} };
};

} // namespace

Formula parse( std::string_view text ) { return parser( text ).parse_all(); }

bool is_valid_atom_name( std::string_view name )
{
  if ( name.empty() || !is_atom_start( name[0] ) || name == "true" || name == "false" )
    return false;
  return std::all_of( name.begin() + 1, name.end(), is_atom_char );
}

/* structural operations */

Formula substitute( const Formula& f, const Substitution& s )
{
  switch ( f.op() )
  {
  case Op::atom:
  {
    const auto it = s.find( f.name() );
    return it == s.end() ? f : it->second;
  }
  case Op::top:
  case Op::bottom:
    return f;
  case Op::negation:
    return ~substitute( f.lhs(), s );
  case Op::box:
    return box( substitute( f.lhs(), s ) );
  case Op::diamond:
    return diamond( substitute( f.lhs(), s ) );
  case Op::conjunction:
    return substitute( f.lhs(), s ) & substitute( f.rhs(), s );
  case Op::disjunction:
    return substitute( f.lhs(), s ) | substitute( f.rhs(), s );
  case Op::implication:
    return implies( substitute( f.lhs(), s ), substitute( f.rhs(), s ) );
  case Op::equivalence:
    return iff( substitute( f.lhs(), s ), substitute( f.rhs(), s ) );
  }
  return f;
}

std::size_t modal_depth( const Formula& f )
{
  if ( f.is_binary() )
    return std::max( modal_depth( f.lhs() ), modal_depth( f.rhs() ) );
  if ( f.is_unary() )
    return modal_depth( f.lhs() ) + ( f.op() == Op::negation ? 0u : 1u );
  return 0;
}

std::size_t size( const Formula& f )
{
  if ( f.is_binary() )
    return 1 + size( f.lhs() ) + size( f.rhs() );
  if ( f.is_unary() )
    return 1 + size( f.lhs() );
  return 1;
}

namespace {

void collect_atoms( const Formula& f, std::set<std::string>& out )
{
  if ( f.op() == Op::atom )
    out.insert( f.name() );
  else if ( f.is_unary() )
    collect_atoms( f.lhs(), out );
  else if ( f.is_binary() )
  {
    collect_atoms( f.lhs(), out );
    collect_atoms( f.rhs(), out );
  }
}

} // namespace

std::set<std::string> atoms( const Formula& f )
{
  std::set<std::string> out;
  collect_atoms( f, out );
  return out;
}

/* axiom schemes */

std::string scheme_name( AxiomScheme scheme )
{
  switch ( scheme )
  {
  case AxiomScheme::K:
    return "K";
  case AxiomScheme::Dual:
    return "Dual";
  case AxiomScheme::T:
    return "T";
  case AxiomScheme::Four:
    return "4";
  case AxiomScheme::Dot2:
    return ".2";
  case AxiomScheme::Dot3:
    return ".3";
  }
  return "?";
}

std::optional<AxiomScheme> scheme_from_name( std::string_view name )
{
  std::string lower( name );
  std::transform( lower.begin(), lower.end(), lower.begin(), []( unsigned char c ) { return std::tolower( c ); } );
  if ( lower == "k" )
    return AxiomScheme::K;
  if ( lower == "dual" )
    return AxiomScheme::Dual;
  if ( lower == "t" )
    return AxiomScheme::T;
  if ( lower == "4" || lower == "four" )
    return AxiomScheme::Four;
  if ( lower == ".2" || lower == "dot2" )
    return AxiomScheme::Dot2;
  if ( lower == ".3" || lower == "dot3" )
    return AxiomScheme::Dot3;
  return std::nullopt;
}

bool scheme_is_binary( AxiomScheme scheme ) { return scheme == AxiomScheme::K || scheme == AxiomScheme::Dot3; }

Formula instantiate( AxiomScheme scheme, const Formula& phi, const std::optional<Formula>& psi )
{
  if ( scheme_is_binary( scheme ) != psi.has_value() )
    throw arity_error( "scheme " + scheme_name( scheme ) + ( psi ? " takes one formula" : " takes two formulas" ) );

  switch ( scheme )
  {
  case AxiomScheme::K:
    return implies( box( implies( phi, *psi ) ), implies( box( phi ), box( *psi ) ) );
  case AxiomScheme::Dual:
    return iff( ~diamond( phi ), box( ~phi ) );
  case AxiomScheme::T:
    return implies( box( phi ), phi );
  case AxiomScheme::Four:
    return implies( box( phi ), box( box( phi ) ) );
  case AxiomScheme::Dot2:
    return implies( diamond( box( phi ) ), box( diamond( phi ) ) );
  case AxiomScheme::Dot3:
    return implies( diamond( phi ) & diamond( *psi ), diamond( ( phi & diamond( *psi ) ) | ( diamond( phi ) & *psi ) ) );
  }
  return phi;
}

} // namespace potkit
