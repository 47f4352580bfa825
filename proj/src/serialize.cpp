#include <potkit/serialize.hpp>

#include <potkit/error.hpp>

#include <sstream>

namespace potkit {

namespace {

json edges_json( const Frame& fr )
{
  json out = json::array();
  for ( const auto& [a, b] : fr.edges() )
    out.push_back( { a, b } );
  return out;
}

json members_json( const WorldSet& s )
{
  json out = json::array();
  for ( auto w = s.find_first(); w != WorldSet::npos; w = s.find_next( w ) )
    out.push_back( w );
  return out;
}

const json& field( const json& j, const char* key )
{
  if ( !j.is_object() || !j.contains( key ) )
    throw invalid_structure( std::string( "missing field '" ) + key + "'" );
  return j.at( key );
}

/// Runs a conversion, reporting type mismatches as invalid_structure.
template<typename F>
auto converting( const char* what, F&& f ) -> decltype( f() )
{
  try
  {
    return f();
  }
  catch ( const json::exception& e )
  {
    throw invalid_structure( std::string( "malformed " ) + what + ": " + e.what() );
  }
}

Frame frame_fields( const json& j, const char* size_key, const char* edge_key )
{
  const auto n = field( j, size_key ).get<std::size_t>();
  Frame fr( n );
  for ( const auto& e : field( j, edge_key ) )
  {
    if ( !e.is_array() || e.size() != 2 )
      throw invalid_structure( std::string( "entries of '" ) + edge_key + "' must be pairs" );
    fr.add_edge( e[0].get<std::size_t>(), e[1].get<std::size_t>() );
  }
  return fr;
}

WorldSet set_from_list( const json& list, std::size_t n )
{
  WorldSet out( n );
  for ( const auto& w : list )
  {
    const auto i = w.get<std::size_t>();
    if ( i >= n )
      throw world_range_error( "world " + std::to_string( i ) + " out of range" );
    out.set( i );
  }
  return out;
}

std::string quoted( const std::string& s )
{
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

json to_json( const Frame& fr ) { return { { "worlds", fr.size() }, { "access", edges_json( fr ) } }; }

Frame frame_from_json( const json& j )
{
  return converting( "frame", [&] { return frame_fields( j, "worlds", "access" ); } );
}

json to_json( const KripkeModel& m )
{
  auto out = to_json( m.frame() );
  json val = json::object();
  for ( const auto& [name, set] : m.valuation() )
    val[name] = members_json( set );
  out["valuation"] = std::move( val );
  return out;
}

KripkeModel model_from_json( const json& j )
{
  return converting( "model", [&] {
    auto fr = frame_fields( j, "worlds", "access" );
    Valuation val;
    for ( const auto& [name, list] : field( j, "valuation" ).items() )
    {
      if ( !is_valid_atom_name( name ) )
        throw invalid_structure( "invalid atom name '" + name + "'" );
      val.emplace( name, set_from_list( list, fr.size() ) );
    }
    return KripkeModel( std::move( fr ), std::move( val ) );
  } );
}

json to_json( const PotentialistSystem& s )
{
  json worlds = json::array();
  for ( const auto& w : s.worlds() )
  {
    json val = json::object();
    for ( const auto& [name, value] : w.valuation )
      val[name] = value;
    worlds.push_back( { { "label", w.label }, { "valuation", std::move( val ) }, { "content", w.content } } );
  }
  return { { "name", s.name() },
           { "alphabet", s.alphabet() },
           { "worlds", std::move( worlds ) },
           { "order", edges_json( s.order() ) },
           { "frontier", members_json( s.frontier() ) } };
}

PotentialistSystem system_from_json( const json& j )
{
  return converting( "system", [&] {
    std::vector<World> worlds;
    for ( const auto& w : field( j, "worlds" ) )
    {
      World world;
      world.label = field( w, "label" ).get<std::string>();
      world.valuation = field( w, "valuation" ).get<std::map<std::string, bool>>();
      if ( w.contains( "content" ) )
        world.content = w.at( "content" ).get<std::set<std::string>>();
      worlds.push_back( std::move( world ) );
    }
    const auto n = worlds.size();
    Frame order( n );
    for ( const auto& e : field( j, "order" ) )
    {
      if ( !e.is_array() || e.size() != 2 )
        throw invalid_structure( "entries of 'order' must be pairs" );
      order.add_edge( e[0].get<std::size_t>(), e[1].get<std::size_t>() );
    }
    const auto frontier = j.contains( "frontier" ) ? set_from_list( j.at( "frontier" ), n ) : WorldSet( n );
    return PotentialistSystem( j.value( "name", std::string{} ), std::move( worlds ), std::move( order ),
                               field( j, "alphabet" ).get<std::set<std::string>>(), frontier );
  } );
}

json to_json( const FiniteStructure& m )
{
  json relations = json::array();
  for ( const auto& r : m.relations() )
    relations.push_back( { { "name", r.name }, { "arity", r.arity }, { "tuples", r.tuples } } );
  return { { "size", m.size() }, { "relations", std::move( relations ) } };
}

FiniteStructure structure_from_json( const json& j, std::size_t cap )
{
  return converting( "structure", [&] {
    std::vector<Relation> relations;
    if ( j.contains( "relations" ) )
      for ( const auto& r : j.at( "relations" ) )
        relations.push_back( { field( r, "name" ).get<std::string>(), field( r, "arity" ).get<std::size_t>(),
                               field( r, "tuples" ).get<std::set<Tuple>>() } );
    return FiniteStructure( field( j, "size" ).get<std::size_t>(), std::move( relations ), cap );
  } );
}

json to_json( const Refutation& r ) { return { { "model", to_json( r.model ) }, { "world", r.world } }; }

json to_json( const SchemeReport& r )
{
  json results = json::array();
  for ( const auto& res : r.results )
  {
    json entry = { { "scheme", scheme_name( res.scheme ) }, { "instances_checked", res.instances_checked } };
    if ( res.failure )
    {
      json subst = json::object();
      for ( const auto& [name, f] : res.failure->substitution )
        subst[name] = to_string( f );
      entry["failure"] = { { "world", res.failure->world },
                           { "substitution", std::move( subst ) },
                           { "instance", to_string( res.failure->instance ) },
                           { "verified", res.failure->verified } };
    }
    else
      entry["failure"] = nullptr;
    results.push_back( std::move( entry ) );
  }
  return { { "pool_size", r.pool_size },
           { "scope", r.scope == WorldScope::interior ? "interior" : "all" },
           { "results", std::move( results ) } };
}

std::string to_dot( const Frame& fr, const std::vector<std::string>& labels )
{
  std::ostringstream out;
  out << "digraph frame {\n";
  for ( std::size_t w = 0; w < fr.size(); ++w )
    out << "  " << w << " [label=" << quoted( w < labels.size() ? labels[w] : std::to_string( w ) ) << "];\n";
  for ( const auto& [a, b] : fr.edges() )
    out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot( const PotentialistSystem& s )
{
  const auto& fr = s.order();
  auto R = [&]( std::size_t a, std::size_t b ) { return fr.successors( a ).test( b ); };
  std::ostringstream out;
  out << "digraph system {\n  rankdir=BT;\n";
  for ( std::size_t w = 0; w < s.size(); ++w )
  {
    out << "  " << w << " [label=" << quoted( s.world( w ).label );
    if ( s.frontier().test( w ) )
      out << ", style=dashed";
    out << "];\n";
  }
  for ( std::size_t a = 0; a < s.size(); ++a )
    for ( std::size_t b = 0; b < s.size(); ++b )
    {
      if ( a == b || !R( a, b ) )
        continue;
      if ( R( b, a ) )
      {
        // same cluster: one undirected-looking edge per pair
        if ( a < b )
          out << "  " << a << " -> " << b << " [dir=both];\n";
        continue;
      }
      bool covering = true;
      for ( std::size_t c = 0; c < s.size() && covering; ++c )
        if ( R( a, c ) && R( c, b ) && !R( c, a ) && !R( b, c ) )
          covering = false;
      if ( covering )
        out << "  " << a << " -> " << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

} // namespace potkit
