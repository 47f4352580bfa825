#include <doctest.h>

#include <oracles/frames.hpp>
#include <potkit/error.hpp>
#include <potkit/frame_enum.hpp>
#include <potkit/logics.hpp>

#include <random>

using namespace potkit;

namespace {

const Formula p = atom( "p" );
const Formula q = atom( "q" );

/// Independent re-check of a witness with the recursive evaluator.
bool witness_falsifies( const Formula& f, const Refutation& r )
{
  return !oracle::holds( oracle::matrix_of( r.model.frame() ), oracle::naive_valuation( r.model.valuation() ), f,
                         r.world );
}

} // namespace

TEST_CASE( ".2 is refuted in S4 by the three-world fork" )
{
  const auto f = parse( "<>[]p -> []<>p" );
  const auto out = decide( f, Theory::S4, 3 );
  REQUIRE( out.refutation );
  const auto& r = *out.refutation;
  CHECK( r.model.size() == 3 );
  const auto props = frame_properties( r.model.frame() );
  CHECK_FALSE( props.directed );
  CHECK( props.reflexive );
  CHECK( props.transitive );
  CHECK( r.model.valuation().at( "p" ).count() == 1 );
  CHECK( verify_refutation( f, r ) );
  CHECK( witness_falsifies( f, r ) );
}

TEST_CASE( "valid up to bound" )
{
  CHECK( decide( parse( "<>[]p -> []<>p" ), Theory::S4_2, 5 ).valid_up_to_bound() );
  CHECK( decide( parse( "[]p -> p" ), Theory::S4, 5 ).valid_up_to_bound() );
  const auto out = decide( parse( "[]p -> [][]p" ), Theory::S4_3, 4 );
  CHECK( out.valid_up_to_bound() );
  CHECK( out.bound_used == 4 );
  CHECK( out.theory == Theory::S4_3 );
}

TEST_CASE( ".3 is refuted in S4.2 on a directed non-linear frame" )
{
  const auto f = instantiate( AxiomScheme::Dot3, p, q );
  const auto out = decide( f, Theory::S4_2, 4 );
  REQUIRE( out.refutation );
  const auto props = frame_properties( out.refutation->model.frame() );
  CHECK( props.directed );
  CHECK_FALSE( props.linear );
  CHECK( verify_refutation( f, *out.refutation ) );
  CHECK( witness_falsifies( f, *out.refutation ) );
  CHECK( decide( f, Theory::S4_3, 4 ).valid_up_to_bound() );
}

TEST_CASE( "all sixteen S4 axiom instances over p, q are valid in every theory" )
{
  const std::vector<Formula> args{ p, q };
  std::vector<Formula> instances;
  for ( const auto& a : args )
    for ( const auto& b : args )
    {
      instances.push_back( instantiate( AxiomScheme::K, a, b ) );
      instances.push_back( instantiate( AxiomScheme::Dual, a ) );
      instances.push_back( instantiate( AxiomScheme::T, a ) );
      instances.push_back( instantiate( AxiomScheme::Four, a ) );
    }
  CHECK( instances.size() == 16 );
  for ( auto t : { Theory::S4, Theory::S4_2, Theory::S4_3 } )
    for ( const auto& f : instances )
      CHECK( decide( f, t, 4 ).valid_up_to_bound() );
}

TEST_CASE( "refutations are sound and monotone in the bound" )
{
  std::mt19937_64 rng( 404 );
  int refuted = 0;
  for ( int i = 0; i < 120; ++i )
  {
    const auto f = oracle::random_formula( rng, { "p", "q" }, 3 );
    const auto t = static_cast<Theory>( i % 3 );
    const auto small = decide( f, t, 2 );
    if ( !small.refutation )
      continue;
    ++refuted;
    CHECK( verify_refutation( f, *small.refutation ) );
    CHECK( witness_falsifies( f, *small.refutation ) );
    CHECK( in_class( small.refutation->model.frame(), frame_class_of( t ) ) );
    const auto large = decide( f, t, 3 );
    REQUIRE( large.refutation );
    // the search is in a fixed order, so a larger bound finds the same first witness
    CHECK( large.refutation->model.frame() == small.refutation->model.frame() );
    CHECK( large.refutation->world == small.refutation->world );
  }
  CHECK( refuted > 20 );
}

TEST_CASE( "a refutation in a smaller class is a refutation in a larger one" )
{
  std::mt19937_64 rng( 405 );
  for ( int i = 0; i < 80; ++i )
  {
    const auto f = oracle::random_formula( rng, { "p" }, 4 );
    const bool in_s43 = decide( f, Theory::S4_3, 3 ).valid_up_to_bound();
    const bool in_s42 = decide( f, Theory::S4_2, 3 ).valid_up_to_bound();
    const bool in_s4 = decide( f, Theory::S4, 3 ).valid_up_to_bound();
    if ( in_s4 )
      CHECK( in_s42 );
    if ( in_s42 )
      CHECK( in_s43 );
  }
}

TEST_CASE( "verify_refutation rejects a false witness" )
{
  const auto f = parse( "[]p -> p" );
  Refutation fake{ KripkeModel( Frame( 1, { { 0, 0 } } ), { { "p", WorldSet( 1 ) } } ), 0 };
  CHECK_FALSE( verify_refutation( f, fake ) );
}

TEST_CASE( "theory names and budgets" )
{
  CHECK( theory_from_name( "S4.2" ) == Theory::S4_2 );
  CHECK( theory_from_name( "S4_3" ) == Theory::S4_3 );
  CHECK_FALSE( theory_from_name( "S5" ).has_value() );
  CHECK( theory_name( Theory::S4_3 ) == "S4.3" );
  CHECK( frame_class_of( Theory::S4_2 ) == FrameClass::directed_preorder );
  CHECK_THROWS_AS( decide( parse( "p" ), Theory::S4, 9 ), budget_exceeded );
  CHECK_THROWS_AS( decide( parse( "[](p & q & r) -> (p & q & r)" ), Theory::S4, 5, 1u << 10 ), budget_exceeded );
}
