#include <doctest.h>

#include <oracles/types.hpp>
#include <potkit/error.hpp>
#include <potkit/finstruct.hpp>

#include <random>

using namespace potkit;

namespace {

FiniteStructure pure( std::size_t n ) { return FiniteStructure( n, {} ); }

FiniteStructure cycle3() { return FiniteStructure( 3, { { "E", 2, { { 0, 1 }, { 1, 2 }, { 2, 0 } } } } ); }

FiniteStructure marked( std::size_t n, std::size_t point ) { return FiniteStructure( n, { { "P", 1, { { point } } } } ); }

FiniteStructure random_structure( std::mt19937_64& rng, std::size_t n )
{
  std::bernoulli_distribution bit( 0.3 );
  Relation e{ "E", 2, {} };
  Relation u{ "U", 1, {} };
  for ( std::size_t a = 0; a < n; ++a )
  {
    if ( bit( rng ) )
      u.tuples.insert( { a } );
    for ( std::size_t b = 0; b < n; ++b )
      if ( bit( rng ) )
        e.tuples.insert( { a, b } );
  }
  return FiniteStructure( n, { u, e } );
}

/// Every structure on at most three points with one unary and one binary relation, up to nothing.
std::vector<FiniteStructure> all_small()
{
  std::vector<FiniteStructure> out;
  for ( std::size_t n = 1; n <= 3; ++n )
    for ( std::uint32_t ucode = 0; ucode < ( 1u << n ); ++ucode )
      for ( std::uint32_t ecode = 0; ecode < ( 1u << ( n * n ) ); ++ecode )
      {
        Relation u{ "U", 1, {} };
        Relation e{ "E", 2, {} };
        for ( std::size_t a = 0; a < n; ++a )
          if ( ( ucode >> a ) & 1u )
            u.tuples.insert( { a } );
        for ( std::size_t i = 0; i < n * n; ++i )
          if ( ( ecode >> i ) & 1u )
            e.tuples.insert( { i / n, i % n } );
        out.emplace_back( n, std::vector<Relation>{ u, e } );
      }
  return out;
}

bool is_closed( const FiniteStructure& m, const ClassFamily& f )
{
  return def_closure( m, f ) == f;
}

} // namespace

TEST_CASE( "automorphism groups" )
{
  CHECK( automorphisms( pure( 3 ) ).size() == 6 );
  CHECK( automorphisms( cycle3() ).size() == 3 );
  const auto fixed = automorphisms( marked( 3, 1 ) );
  CHECK( fixed.size() == 2 );
  for ( const auto& g : fixed )
    CHECK( g[1] == 1 );
  CHECK( automorphisms( pure( 3 ) ).front() == Permutation{ 0, 1, 2 } );

  CHECK( orbits( 3, automorphisms( marked( 3, 1 ) ) ) == std::vector<Subset>{ 0b101, 0b010 } );
  CHECK( apply( { 1, 2, 0 }, 0b011 ) == 0b110 );
}

TEST_CASE( "definable subsets" )
{
  CHECK( definable_subsets( pure( 3 ) ).members == std::vector<Subset>{ 0, 0b111 } );
  CHECK( definable_subsets( pure( 3 ), { 0 } ).members == std::vector<Subset>{ 0, 0b001, 0b110, 0b111 } );
  CHECK( definable_subsets( marked( 3, 2 ) ).members == std::vector<Subset>{ 0, 0b011, 0b100, 0b111 } );
  CHECK( definable_subsets( cycle3(), { 0 } ).members.size() == 8 );
  CHECK( definable_subsets( pure( 3 ), {}, { 0b001 } ).members.size() == 4 );
}

TEST_CASE( "closure operator" )
{
  std::mt19937_64 rng( 12 );
  for ( int i = 0; i < 40; ++i )
  {
    const auto m = random_structure( rng, 2 + i % 3 );
    const Subset full = m.domain();
    std::uniform_int_distribution<Subset> pick( 0, full );
    ClassFamily seed{ { pick( rng ), pick( rng ) } };
    seed.normalize();
    const auto closed = def_closure( m, seed );
    CHECK( closed.closed );
    for ( auto a : seed.members )
      CHECK( closed.contains( a ) );
    CHECK( def_closure( m, closed ) == closed );
    ClassFamily bigger = seed;
    bigger.members.push_back( pick( rng ) );
    bigger.normalize();
    const auto closed_bigger = def_closure( m, bigger );
    for ( auto a : closed.members )
      CHECK( closed_bigger.contains( a ) );
  }
}

TEST_CASE( "top-down system on two points" )
{
  const auto m = pure( 2 );
  const auto s = top_down_system( m );
  // brute force: every family of subsets of {0,1} that is its own closure
  std::size_t closed = 0;
  for ( std::uint32_t code = 0; code < 16; ++code )
  {
    ClassFamily f;
    for ( Subset a = 0; a < 4; ++a )
      if ( ( code >> a ) & 1u )
        f.members.push_back( a );
    if ( is_closed( m, f ) )
      ++closed;
  }
  CHECK( s.size() == closed );
  CHECK( s.frontier().none() );
  CHECK( top_down_system( pure( 3 ) ).size() == 5 );
  CHECK( subset_to_string( 0b101, 3 ) == "{0,2}" );
  CHECK( subset_to_string( 0, 3 ) == "{}" );
  CHECK( subset_atom( 0b101, 3 ) == "X.0_2" );
  CHECK( subset_atom( 0, 3 ) == "X.empty" );
  CHECK_THROWS_AS( top_down_system( pure( 4 ), {}, 3 ), budget_exceeded );
}

TEST_CASE( "top-down order is inclusion of families" )
{
  const auto s = top_down_system( marked( 3, 0 ) );
  for ( std::size_t u = 0; u < s.size(); ++u )
    for ( std::size_t v = 0; v < s.size(); ++v )
    {
      const auto& a = s.world( u ).content;
      const auto& b = s.world( v ).content;
      CHECK( s.order().accesses( u, v ) == std::includes( b.begin(), b.end(), a.begin(), a.end() ) );
    }
}

TEST_CASE( "orbit definability agrees with first-order types" )
{
  for ( const auto& m : all_small() )
  {
    oracle::TypeOracle types( m, {}, {} );
    CHECK( definable_subsets( m ).members == types.definable( 2 ) );
    for ( std::size_t a = 0; a < m.size(); ++a )
    {
      oracle::TypeOracle with( m, { a }, {} );
      CHECK( definable_subsets( m, { a } ).members == with.definable( 2 ) );
    }
  }
}

TEST_CASE( "structure validation" )
{
  CHECK_THROWS_AS( FiniteStructure( 2, { { "E", 2, { { 0, 2 } } } } ), invalid_structure );
  CHECK_THROWS_AS( FiniteStructure( 2, { { "E", 2, { { 0 } } } } ), invalid_structure );
  CHECK_THROWS_AS( FiniteStructure( 9, {} ), budget_exceeded );
  CHECK_NOTHROW( FiniteStructure( 9, {}, 9 ) );
  CHECK_THROWS_AS( FiniteStructure( 17, {}, 20 ), budget_exceeded );
}
