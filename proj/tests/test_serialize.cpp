#include <doctest.h>

#include <potkit/error.hpp>
#include <potkit/serialize.hpp>
#include <potkit/systems.hpp>

using namespace potkit;

TEST_CASE( "frame round trip" )
{
  const Frame fr = Frame( 3, { { 0, 1 }, { 0, 2 } } ).closure();
  const auto j = to_json( fr );
  CHECK( j.dump() == R"({"worlds":3,"access":[[0,0],[0,1],[0,2],[1,1],[2,2]]})" );
  CHECK( frame_from_json( j ) == fr );
  CHECK( frame_from_json( json::parse( j.dump() ) ) == fr );
}

TEST_CASE( "model round trip" )
{
  WorldSet p( 2 );
  p.set( 1 );
  const KripkeModel m( Frame( 2, { { 0, 1 } } ), { { "p", p }, { "q", WorldSet( 2 ) } } );
  const auto j = to_json( m );
  CHECK( j.dump() == R"({"worlds":2,"access":[[0,1]],"valuation":{"p":[1],"q":[]}})" );
  const auto back = model_from_json( j );
  CHECK( back.frame() == m.frame() );
  CHECK( back.valuation() == m.valuation() );
}

TEST_CASE( "system round trip" )
{
  for ( const auto& s : { killing_truth_system(), mostowski_fork(), cohen_truth_system( 2, 2 ),
                          amalgamated_variant( mostowski_fork() ) } )
  {
    const auto back = system_from_json( json::parse( to_json( s ).dump() ) );
    CHECK( back.name() == s.name() );
    CHECK( back.order() == s.order() );
    CHECK( back.frontier() == s.frontier() );
    CHECK( back.alphabet() == s.alphabet() );
    REQUIRE( back.size() == s.size() );
    for ( std::size_t w = 0; w < s.size(); ++w )
    {
      CHECK( back.world( w ).label == s.world( w ).label );
      CHECK( back.world( w ).valuation == s.world( w ).valuation );
      CHECK( back.world( w ).content == s.world( w ).content );
    }
    CHECK( to_json( back ).dump() == to_json( s ).dump() );
  }
}

TEST_CASE( "structure round trip" )
{
  const FiniteStructure m( 3, { { "E", 2, { { 0, 1 }, { 1, 2 } } }, { "P", 1, { { 2 } } } } );
  const auto j = to_json( m );
  CHECK( j.dump() ==
         R"({"size":3,"relations":[{"name":"E","arity":2,"tuples":[[0,1],[1,2]]},{"name":"P","arity":1,"tuples":[[2]]}]})" );
  const auto back = structure_from_json( j );
  CHECK( back.size() == 3 );
  REQUIRE( back.relations().size() == 2 );
  CHECK( back.relations()[0].tuples == m.relations()[0].tuples );
  CHECK( to_json( back ) == j );
}

TEST_CASE( "malformed documents" )
{
  CHECK_THROWS_AS( frame_from_json( json::parse( R"({"worlds":2})" ) ), invalid_structure );
  CHECK_THROWS_AS( frame_from_json( json::parse( R"({"worlds":2,"access":[[0,5]]})" ) ), world_range_error );
  CHECK_THROWS_AS( frame_from_json( json::parse( R"({"worlds":"two","access":[]})" ) ), invalid_structure );
  CHECK_THROWS_AS( model_from_json( json::parse( R"({"worlds":1,"access":[],"valuation":{"p":[3]}})" ) ),
                   world_range_error );
  CHECK_THROWS_AS( system_from_json( json::parse( R"({"name":"x"})" ) ), invalid_structure );
  CHECK_THROWS_AS( structure_from_json( json::parse( R"({"size":2,"relations":[{"name":"E","arity":2,"tuples":[[0]]}]})" ) ),
                   invalid_structure );
}

TEST_CASE( "dot output" )
{
  const Frame fr( 2, { { 0, 0 }, { 0, 1 } } );
  CHECK( to_dot( fr ) == "digraph frame {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -> 0;\n  0 -> 1;\n}\n" );
  CHECK( to_dot( fr, { "a", "b\"c" } ) ==
         "digraph frame {\n  0 [label=\"a\"];\n  1 [label=\"b\\\"c\"];\n  0 -> 0;\n  0 -> 1;\n}\n" );

  CHECK( to_dot( killing_truth_system() ) == "digraph system {\n  rankdir=BT;\n  0 [label=\"W0\"];\n"
                                             "  1 [label=\"W_T\"];\n  2 [label=\"W_C\"];\n  0 -> 1;\n  0 -> 2;\n}\n" );

  // the chain 0 < 1 < 2 draws only covering edges, the top is dashed
  const auto line = to_dot( smallest_truth_system( Ordinal::omega(), { Ordinal::finite( 3 ), 5, 2 } ) );
  CHECK( line.find( "0 -> 2" ) == std::string::npos );
  CHECK( line.find( "0 -> 1;" ) != std::string::npos );
  CHECK( line.find( "style=dashed" ) != std::string::npos );
}

TEST_CASE( "refutation and report JSON" )
{
  const auto out = decide( parse( "<>[]p -> []<>p" ), Theory::S4, 3 );
  REQUIRE( out.refutation );
  const auto j = to_json( *out.refutation );
  CHECK( j.contains( "model" ) );
  CHECK( j.at( "world" ).get<std::size_t>() == out.refutation->world );
  CHECK( model_from_json( j.at( "model" ) ).frame() == out.refutation->model.frame() );

  const auto r = scheme_report( mostowski_fork(), { AxiomScheme::Dot2 }, { 1, {}, 5000 } );
  const auto jr = to_json( r );
  CHECK( jr.dump().find( "cB" ) != std::string::npos );
}
