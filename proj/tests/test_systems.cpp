#include <doctest.h>

#include <oracles/ordinals.hpp>
#include <potkit/error.hpp>
#include <potkit/frame_enum.hpp>
#include <potkit/systems.hpp>

using namespace potkit;

namespace {

Ordinal o( const char* text ) { return parse_ordinal( text ); }

TruncationSpec cut( const char* text, std::uint64_t cap = 5 )
{
  TruncationSpec t;
  t.ordinal_cut = o( text );
  t.height_cap = cap;
  return t;
}

} // namespace

TEST_CASE( "truncation samples" )
{
  const auto s = truncation_sample( cut( "w + 3" ) );
  REQUIRE( s.size() == 9 );
  CHECK( s.front() == o( "0" ) );
  CHECK( s[5] == o( "5" ) );
  CHECK( s[6] == o( "w" ) );
  CHECK( s.back() == o( "w + 2" ) );
  CHECK( std::is_sorted( s.begin(), s.end() ) );

  // against the coefficient-vector sample, filtered by the cut
  const auto sample = truncation_sample( cut( "w^2", 3 ) );
  std::vector<Ordinal> expected;
  for ( const auto& v : oracle::sample( 2, 3 ) )
    expected.push_back( oracle::to( v ) );
  std::sort( expected.begin(), expected.end() );
  CHECK( sample == expected );

  CHECK_THROWS_AS( truncation_sample( cut( "0" ) ), invalid_structure );
  CHECK_THROWS_AS( truncation_sample( cut( "w^4", 9 ) ), budget_exceeded );
}

TEST_CASE( "smallest truth system" )
{
  const auto s = smallest_truth_system( o( "w*2" ), cut( "w + 6" ) );
  CHECK( s.size() == 12 );
  const auto props = frame_properties( s.order() );
  CHECK( props.linear );
  CHECK( props.antisymmetric );
  CHECK( s.frontier().count() == 1 );
  CHECK( s.frontier().test( s.size() - 1 ) );
  const auto x = *s.find_world( "X_w_2" );
  CHECK( evaluate( s, x, atom( ratchet_atom( o( "w + 2" ) ) ) ) );
  CHECK( evaluate( s, x, atom( ratchet_atom( o( "4" ) ) ) ) );
  CHECK_FALSE( evaluate( s, x, atom( ratchet_atom( o( "w + 3" ) ) ) ) );
  CHECK( ratchet_atom( o( "w*2" ) ) == "r.wx2" );

  CHECK_NOTHROW( smallest_truth_system( o( "w^2" ), cut( "w*3" ) ) );
  CHECK_THROWS_AS( smallest_truth_system( o( "w" ), cut( "w + 1" ) ), error );
  CHECK( smallest_ratchet( cut( "w + 1" ) ).size() == 7 );
}

TEST_CASE( "cohen grid" )
{
  const auto s = cohen_truth_system( 2, 3 );
  CHECK( s.size() == 16 );
  CHECK( s.world( 0 ).label == "X[0,0]" );
  CHECK( s.world( 1 ).label == "X[1,0]" );
  CHECK( s.world( 4 ).label == "X[0,1]" );
  CHECK( s.frontier().count() == 7 );
  CHECK( s.order().accesses( 1, 5 ) );
  CHECK_FALSE( s.order().accesses( 1, 4 ) );
  const auto props = frame_properties( s.order() );
  CHECK( props.directed );
  CHECK_FALSE( props.linear );
  CHECK( cohen_atom( 1, 2 ) == "t.1.2" );
  CHECK( evaluate( s, 6, atom( "t.0.2" ) ) );
  CHECK_FALSE( evaluate( s, 6, atom( "t.0.3" ) ) );
  CHECK( evaluate( s, 6, atom( cohen_parity_atom( 0 ) ) ) );
  CHECK_FALSE( evaluate( s, 6, atom( cohen_parity_atom( 1 ) ) ) );
  CHECK_THROWS_AS( cohen_truth_system( 1, 3 ), invalid_structure );
  CHECK_THROWS_AS( cohen_truth_system( 2, 1 ), invalid_structure );

  const auto c = cohen_controls( 3 );
  CHECK( c.buttons == std::vector<Formula>{ atom( "t.0.1" ), atom( "t.2.1" ) } );
  CHECK( c.switches == std::vector<Formula>{ atom( "s.1" ) } );
}

TEST_CASE( "killing-truth is the least system with <>[]t & ~[]<>t" )
{
  const auto s = killing_truth_system();
  CHECK( s.size() == 3 );
  const auto f = parse( "<>[]t & ~[]<>t" );
  CHECK( evaluate( s, 0, f ) );
  CHECK( s.world( 1 ).content.count( "Tr(A)" ) == 1 );

  // no preorder on one or two worlds with any valuation of t has a world satisfying f
  for ( std::size_t n = 1; n <= 2; ++n )
    for ( const auto& fr : enumerate_frames_exact( n, FrameClass::preorder ) )
      for ( unsigned code = 0; code < ( 1u << n ); ++code )
      {
        const KripkeModel m( fr, { { "t", WorldSet( n, code ) } } );
        CHECK( truth_set( m, f ).none() );
      }
}

TEST_CASE( "fork and amalgamation" )
{
  const auto fork = mostowski_fork();
  CHECK( fork.size() == 3 );
  CHECK_FALSE( frame_properties( fork.order() ).directed );

  const auto am = amalgamated_variant( fork );
  CHECK( am.size() == 4 );
  CHECK( frame_properties( am.order() ).directed );
  const auto top = *am.find_world( "join(B,C)" );
  CHECK( evaluate( am, top, atom( "cB" ) & atom( "cC" ) ) );
  for ( std::size_t w = 0; w < am.size(); ++w )
    CHECK( am.order().accesses( w, top ) );

  // idempotent
  const auto again = amalgamated_variant( am );
  CHECK( again.size() == am.size() );
  for ( std::size_t w = 0; w < am.size(); ++w )
    CHECK( again.world( w ).content == am.world( w ).content );

  // killing-truth orders W_T and W_C without W_T's content being inside W_C: still inclusion
  CHECK( amalgamated_variant( killing_truth_system() ).size() == 4 );

  // an order that is not content inclusion is rejected
  const auto line = smallest_truth_system( o( "w" ), cut( "3" ) );
  std::vector<World> flat = line.worlds();
  for ( auto& w : flat )
    w.content = { "same" };
  const PotentialistSystem bad( "flat", flat, line.order(), line.alphabet(), line.frontier() );
  CHECK_THROWS_AS( amalgamated_variant( bad ), invalid_structure );
}

TEST_CASE( "system names" )
{
  const auto names = system_names();
  CHECK( std::find( names.begin(), names.end(), "cohen" ) != names.end() );
  CHECK( std::find( names.begin(), names.end(), "killing-truth" ) != names.end() );
}
