#include <doctest.h>

#include <oracles/frames.hpp>
#include <potkit/error.hpp>
#include <potkit/formula.hpp>

#include <random>

using namespace potkit;

namespace {

const Formula p = atom( "p" );
const Formula q = atom( "q" );
const Formula r = atom( "r" );

} // namespace

TEST_CASE( "parse builds the expected trees" )
{
  CHECK( parse( "<>[]p -> []<>p" ) == implies( diamond( box( p ) ), box( diamond( p ) ) ) );
  CHECK( parse( "p" ) == p );
  CHECK( parse( "([]p & <>q) | ~r" ) == ( ( box( p ) & diamond( q ) ) | ~r ) );
  CHECK( parse( "true & false" ) == ( Formula::top() & Formula::bottom() ) );
  CHECK( parse( "r.3 | Tr.C1.5" ) == ( atom( "r.3" ) | atom( "Tr.C1.5" ) ) );
}

TEST_CASE( "precedence and associativity" )
{
  // ~ and the modal operators bind tightest, then &, |, ->, <->
  CHECK( parse( "~p & q" ) == ( ~p & q ) );
  CHECK( parse( "[]p & q" ) == ( box( p ) & q ) );
  CHECK( parse( "p & q | r" ) == ( ( p & q ) | r ) );
  CHECK( parse( "p | q & r" ) == ( p | ( q & r ) ) );
  CHECK( parse( "p -> q -> r" ) == implies( p, implies( q, r ) ) );
  CHECK( parse( "p <-> q <-> r" ) == iff( iff( p, q ), r ) );
  CHECK( parse( "p -> q <-> r" ) == iff( implies( p, q ), r ) );
  CHECK( parse( "p & q & r" ) == ( ( p & q ) & r ) );
  CHECK( parse( "~~[]<>p" ) == ~~box( diamond( p ) ) );
}

TEST_CASE( "print is canonical" )
{
  CHECK( to_string( box( p ) ) == "[]p" );
  CHECK( to_string( implies( diamond( box( p ) ), box( diamond( p ) ) ) ) == "(<>[]p -> []<>p)" );
  CHECK( to_string( Formula::top() & Formula::bottom() ) == "(true & false)" );
  CHECK( to_string( ~( p | q ) ) == "~(p | q)" );
  CHECK( to_string( iff( p, q ) ) == "(p <-> q)" );
}

TEST_CASE( "syntax errors carry positions" )
{
  auto position_of = []( const char* text ) -> std::size_t {
    try
    {
      parse( text );
    }
    catch ( const parse_error& e )
    {
      return e.position();
    }
    FAIL( "no error for " << text );
    return 0;
  };
  CHECK( position_of( "p &" ) == 3 );
  CHECK( position_of( "(p | q" ) == 6 );
  CHECK( position_of( "p q" ) == 2 );
  CHECK( position_of( "p $ q" ) == 2 );
  CHECK( position_of( "" ) == 0 );
  CHECK( position_of( "[p" ) == 0 );
  CHECK_THROWS_AS( parse( "p -> " ), parse_error );
  CHECK_THROWS_WITH_AS( parse( "p # q" ), doctest::Contains( "unknown token" ), parse_error );
}

TEST_CASE( "round trip on random formulas" )
{
  std::mt19937_64 rng( 11 );
  const std::vector<std::string> names{ "p", "q", "r.1", "s_2" };
  for ( int i = 0; i < 2000; ++i )
  {
    const auto f = oracle::random_formula( rng, names, 5 );
    const auto text = to_string( f );
    const auto g = parse( text );
    REQUIRE_MESSAGE( g == f, text );
    CHECK( to_string( g ) == text );
  }
}

TEST_CASE( "substitution" )
{
  const auto dot2 = parse( "<>[]p -> []<>p" );
  CHECK( substitute( dot2, { { "p", q & r } } ) == parse( "<>[](q & r) -> []<>(q & r)" ) );
  CHECK( substitute( p, {} ) == p );
  // simultaneous: the inserted p is not substituted again
  CHECK( substitute( box( p ) | p, { { "p", diamond( p ) } } ) == ( box( diamond( p ) ) | diamond( p ) ) );
  CHECK( substitute( p & q, { { "p", q }, { "q", p } } ) == ( q & p ) );
}

TEST_CASE( "substitution is the identity map on atoms and homomorphic" )
{
  std::mt19937_64 rng( 5 );
  const std::vector<std::string> names{ "p", "q", "r" };
  for ( int i = 0; i < 500; ++i )
  {
    const auto f = oracle::random_formula( rng, names, 4 );
    Substitution id;
    for ( const auto& a : atoms( f ) )
      id.emplace( a, atom( a ) );
    CHECK( substitute( f, id ) == f );

    const Substitution s{ { "p", oracle::random_formula( rng, names, 2 ) },
                          { "q", oracle::random_formula( rng, names, 2 ) } };
    const auto g = substitute( f, s );
    if ( f.is_unary() )
      CHECK( g.lhs() == substitute( f.lhs(), s ) );
    if ( f.is_binary() )
    {
      CHECK( g.op() == f.op() );
      CHECK( g.lhs() == substitute( f.lhs(), s ) );
      CHECK( g.rhs() == substitute( f.rhs(), s ) );
    }
    CHECK( modal_depth( g ) >= modal_depth( f ) );
  }
}

TEST_CASE( "instantiate reproduces the displayed schemes" )
{
  CHECK( instantiate( AxiomScheme::Dot2, p ) == parse( "<>[]p -> []<>p" ) );
  CHECK( instantiate( AxiomScheme::T, Formula::top() ) == parse( "[]true -> true" ) );
  CHECK( instantiate( AxiomScheme::Dot3, p, q ) == parse( "(<>p & <>q) -> <>((p & <>q) | (<>p & q))" ) );
  CHECK( instantiate( AxiomScheme::K, p, q ) == parse( "[](p -> q) -> ([]p -> []q)" ) );
  CHECK( instantiate( AxiomScheme::Dual, p ) == parse( "~<>p <-> []~p" ) );
  CHECK( instantiate( AxiomScheme::Four, p ) == parse( "[]p -> [][]p" ) );

  CHECK_THROWS_AS( instantiate( AxiomScheme::K, p ), arity_error );
  CHECK_THROWS_AS( instantiate( AxiomScheme::T, p, q ), arity_error );
  CHECK_THROWS_AS( instantiate( AxiomScheme::Dot3, p ), arity_error );
}

TEST_CASE( "scheme names" )
{
  for ( auto s : { AxiomScheme::K, AxiomScheme::Dual, AxiomScheme::T, AxiomScheme::Four, AxiomScheme::Dot2,
                   AxiomScheme::Dot3 } )
    CHECK( scheme_from_name( scheme_name( s ) ) == s );
  CHECK( scheme_from_name( "dot2" ) == AxiomScheme::Dot2 );
  CHECK( scheme_from_name( "FOUR" ) == AxiomScheme::Four );
  CHECK_FALSE( scheme_from_name( "5" ).has_value() );
  CHECK( scheme_is_binary( AxiomScheme::K ) );
  CHECK( scheme_is_binary( AxiomScheme::Dot3 ) );
  CHECK_FALSE( scheme_is_binary( AxiomScheme::Dot2 ) );
}

TEST_CASE( "modal depth, size and atoms" )
{
  CHECK( modal_depth( p & q ) == 0 );
  CHECK( modal_depth( parse( "<>[]p -> []<>p" ) ) == 2 );
  CHECK( modal_depth( parse( "[]([]p -> p)" ) ) == 2 );
  CHECK( size( parse( "[]p & q" ) ) == 4 );
  CHECK( atoms( parse( "[]p & (q | p) & true" ) ) == std::set<std::string>{ "p", "q" } );
}

TEST_CASE( "atom names" )
{
  CHECK( is_valid_atom_name( "p" ) );
  CHECK( is_valid_atom_name( "_x.1" ) );
  CHECK( is_valid_atom_name( "t.0.1" ) );
  CHECK_FALSE( is_valid_atom_name( "" ) );
  CHECK_FALSE( is_valid_atom_name( "1p" ) );
  CHECK_FALSE( is_valid_atom_name( ".p" ) );
  CHECK_FALSE( is_valid_atom_name( "true" ) );
  CHECK_FALSE( is_valid_atom_name( "p-q" ) );
}
