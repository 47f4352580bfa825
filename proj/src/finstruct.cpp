#include <potkit/finstruct.hpp>

#include <potkit/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace potkit {

FiniteStructure::FiniteStructure( std::size_t n, std::vector<Relation> relations, std::size_t cap )
    : n_( n ), relations_( std::move( relations ) )
{
  if ( n > std::min( cap, max_structure_size ) )
    throw budget_exceeded( "structure has " + std::to_string( n ) + " elements, cap is " +
                               std::to_string( std::min( cap, max_structure_size ) ),
                           static_cast<double>( n ) );
  std::set<std::string> names;
  for ( const auto& r : relations_ )
  {
    if ( !names.insert( r.name ).second )
      throw invalid_structure( "relation '" + r.name + "' declared twice" );
    for ( const auto& t : r.tuples )
    {
      if ( t.size() != r.arity )
        throw invalid_structure( "relation '" + r.name + "' has arity " + std::to_string( r.arity ) +
                                 " but a tuple of length " + std::to_string( t.size() ) );
      for ( auto x : t )
        if ( x >= n )
          throw invalid_structure( "relation '" + r.name + "' mentions element " + std::to_string( x ) +
                                   " outside the domain" );
    }
  }
}

bool ClassFamily::contains( Subset a ) const { return std::binary_search( members.begin(), members.end(), a ); }

void ClassFamily::normalize()
{
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );
}

std::vector<Permutation> automorphisms( const FiniteStructure& m )
{
  Permutation g( m.size() );
  std::iota( g.begin(), g.end(), 0 );
  std::vector<Permutation> out;
  Tuple image;
  do
  {
    bool preserved = true;
    for ( const auto& r : m.relations() )
    {
      for ( const auto& t : r.tuples )
      {
        image.resize( t.size() );
        for ( std::size_t i = 0; i < t.size(); ++i )
          image[i] = g[t[i]];
        if ( !r.tuples.contains( image ) )
        {
          preserved = false;
          break;
        }
      }
      if ( !preserved )
        break;
    }
    if ( preserved )
      out.push_back( g );
  } while ( std::next_permutation( g.begin(), g.end() ) );
  return out;
}

Subset apply( const Permutation& g, Subset a )
{
  Subset out = 0;
  for ( std::size_t i = 0; i < g.size(); ++i )
    if ( ( a >> i ) & 1u )
      out |= Subset{ 1 } << g[i];
  return out;
}

std::vector<Subset> orbits( std::size_t n, const std::vector<Permutation>& group )
{
  std::vector<Subset> out;
  Subset seen = 0;
  for ( std::size_t x = 0; x < n; ++x )
  {
    if ( ( seen >> x ) & 1u )
      continue;
    Subset orbit = 0;
    for ( const auto& g : group )
      orbit |= Subset{ 1 } << g[x];
    // the group may be given without the identity
    orbit |= Subset{ 1 } << x;
    seen |= orbit;
    out.push_back( orbit );
  }
  return out;
}

namespace {

std::vector<Subset> unions_of( const std::vector<Subset>& parts )
{
  std::vector<Subset> out;
  const std::size_t k = parts.size();
  for ( std::uint64_t pick = 0; pick < ( std::uint64_t{ 1 } << k ); ++pick )
  {
    Subset a = 0;
    for ( std::size_t i = 0; i < k; ++i )
      if ( ( pick >> i ) & 1u )
        a |= parts[i];
    out.push_back( a );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<Permutation> stabilizer( const std::vector<Permutation>& group, const std::vector<Subset>& sets )
{
  std::vector<Permutation> out;
  for ( const auto& g : group )
    if ( std::all_of( sets.begin(), sets.end(), [&]( Subset a ) { return apply( g, a ) == a; } ) )
      out.push_back( g );
  return out;
}

void require_subsets( const FiniteStructure& m, const std::vector<Subset>& sets )
{
  for ( auto a : sets )
    if ( ( a & ~m.domain() ) != 0 )
      throw invalid_structure( "subset " + std::to_string( a ) + " is not inside the domain" );
}

} // namespace

ClassFamily definable_subsets( const FiniteStructure& m, const std::vector<std::size_t>& params,
                               const std::vector<Subset>& extra )
{
  std::vector<Subset> fixed = extra;
  for ( auto p : params )
  {
    if ( p >= m.size() )
      throw world_range_error( "parameter " + std::to_string( p ) + " outside the domain" );
    fixed.push_back( Subset{ 1 } << p );
  }
  require_subsets( m, fixed );
  const auto group = stabilizer( automorphisms( m ), fixed );
  ClassFamily out;
  out.members = unions_of( orbits( m.size(), group ) );
  // the invariants of a group are invariant under their own stabilizer, so always closed
  out.closed = true;
  return out;
}

ClassFamily def_closure( const FiniteStructure& m, const ClassFamily& seed )
{
  return definable_subsets( m, {}, seed.members );
}

std::string subset_to_string( Subset a, std::size_t n )
{
  std::string out = "{";
  bool first = true;
  for ( std::size_t i = 0; i < n; ++i )
    if ( ( a >> i ) & 1u )
    {
      if ( !first )
        out += ",";
      out += std::to_string( i );
      first = false;
    }
  return out + "}";
}

std::string subset_atom( Subset a, std::size_t n )
{
  if ( a == 0 )
    return "X.empty";
  std::string out = "X.";
  bool first = true;
  for ( std::size_t i = 0; i < n; ++i )
    if ( ( a >> i ) & 1u )
    {
      if ( !first )
        out += "_";
      out += std::to_string( i );
      first = false;
    }
  return out;
}

PotentialistSystem top_down_system( const FiniteStructure& m, const std::vector<Subset>& benchmarks,
                                    std::size_t max_worlds )
{
  const auto n = m.size();
  std::vector<Subset> bench = benchmarks;
  if ( bench.empty() )
    for ( std::size_t i = 0; i < n; ++i )
      bench.push_back( Subset{ 1 } << i );
  require_subsets( m, bench );

  const auto aut = automorphisms( m );
  struct node
  {
    std::vector<Subset> members;
    std::vector<Permutation> group;
  };
  std::vector<node> found;
  std::map<std::vector<Subset>, std::size_t> index;

  auto visit = [&]( std::vector<Permutation> group ) {
    auto members = unions_of( orbits( n, group ) );
    if ( index.contains( members ) )
      return;
    if ( found.size() >= max_worlds )
      throw budget_exceeded( "top-down system exceeds " + std::to_string( max_worlds ) + " worlds",
                             static_cast<double>( found.size() + 1 ) );
    index.emplace( members, found.size() );
    found.push_back( { std::move( members ), std::move( group ) } );
  };

  visit( aut );
  for ( std::size_t i = 0; i < found.size(); ++i )
    for ( Subset a = 0; a <= m.domain(); ++a )
      if ( !std::binary_search( found[i].members.begin(), found[i].members.end(), a ) )
        visit( stabilizer( found[i].group, { a } ) );

  std::set<std::string> alphabet;
  for ( auto b : bench )
    alphabet.insert( subset_atom( b, n ) );

  const auto count = found.size();
  std::vector<World> worlds;
  Frame order( count );
  for ( std::size_t u = 0; u < count; ++u )
  {
    const auto& f = found[u].members;
    World w;
    w.label = "F";
    for ( auto orbit : orbits( n, found[u].group ) )
      w.label += subset_to_string( orbit, n );
    for ( auto b : bench )
      w.valuation[subset_atom( b, n )] = std::binary_search( f.begin(), f.end(), b );
    for ( auto a : f )
      w.content.insert( subset_to_string( a, n ) );
    worlds.push_back( std::move( w ) );
    for ( std::size_t v = 0; v < count; ++v )
      if ( std::includes( found[v].members.begin(), found[v].members.end(), f.begin(), f.end() ) )
        order.add_edge( u, v );
  }
  return PotentialistSystem( "top-down (finite analogue, n=" + std::to_string( n ) + ")", std::move( worlds ),
                             std::move( order ), std::move( alphabet ), WorldSet( count ) );
}

} // namespace potkit
