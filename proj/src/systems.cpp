#include <potkit/systems.hpp>

#include <potkit/error.hpp>

#include <algorithm>
#include <cmath>

namespace potkit {

/* smallest truth systems */

std::vector<Ordinal> truncation_sample( const TruncationSpec& trunc )
{
  if ( trunc.ordinal_cut.is_zero() )
    throw invalid_structure( "ordinal cut must be positive" );
  if ( trunc.height_cap == 0 )
    throw invalid_structure( "height cap must be positive" );

  const std::size_t digits = trunc.ordinal_cut.leading_exponent() + 1;
  const double candidates = std::pow( static_cast<double>( trunc.height_cap ) + 1.0, static_cast<double>( digits ) );
  if ( candidates > 1e7 )
    throw budget_exceeded( "truncation sample needs " + std::to_string( candidates ) + " candidates", candidates );

  std::vector<Ordinal> out;
  std::vector<std::uint64_t> coeff( digits, 0 ); // coeff[e] multiplies w^e
  while ( true )
  {
    std::vector<Ordinal::Term> terms;
    for ( std::size_t e = digits; e-- > 0; )
      if ( coeff[e] > 0 )
        terms.push_back( { static_cast<std::uint32_t>( e ), coeff[e] } );
    auto xi = Ordinal::from_terms( std::move( terms ) );
    if ( xi < trunc.ordinal_cut )
    {
      out.push_back( std::move( xi ) );
      if ( out.size() > max_system_worlds )
        throw budget_exceeded( "truncation sample exceeds " + std::to_string( max_system_worlds ) + " worlds",
                               static_cast<double>( out.size() ) );
    }
    std::size_t d = 0;
    while ( d < digits && coeff[d] == trunc.height_cap )
      coeff[d++] = 0;
    if ( d == digits )
      break;
    ++coeff[d];
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::string ratchet_atom( const Ordinal& eta ) { return "r." + to_identifier( eta ); }

PotentialistSystem smallest_truth_system( const Ordinal& lambda, const TruncationSpec& trunc )
{
  const auto limit = ratchet_length( lambda );
  if ( trunc.ordinal_cut > limit )
    throw error( "cut " + to_string( trunc.ordinal_cut ) + " exceeds the index length " + to_string( limit ) +
                 " of the smallest truth system for " + to_string( lambda ) );
  const auto sample = truncation_sample( trunc );
  const auto n = sample.size();

  std::set<std::string> alphabet;
  for ( const auto& eta : sample )
    alphabet.insert( ratchet_atom( eta ) );

  std::vector<World> worlds;
  Frame order( n );
  for ( std::size_t i = 0; i < n; ++i )
  {
    World w;
    w.label = "X_" + to_identifier( sample[i] );
    w.content.insert( "Def" );
    for ( std::size_t j = 0; j < n; ++j )
    {
      w.valuation.emplace( ratchet_atom( sample[j] ), j <= i );
      if ( j <= i )
        w.content.insert( "Tr_" + to_identifier( sample[j] ) );
    }
    worlds.push_back( std::move( w ) );
    for ( std::size_t j = i; j < n; ++j )
      order.add_edge( i, j );
  }
  WorldSet frontier( n );
  frontier.set( n - 1 );
  return PotentialistSystem( "smallest-truth(" + to_string( lambda ) + ", cut " + to_string( trunc.ordinal_cut ) + ")",
                             std::move( worlds ), std::move( order ), std::move( alphabet ), std::move( frontier ) );
}

std::vector<Formula> smallest_ratchet( const TruncationSpec& trunc )
{
  std::vector<Formula> out;
  for ( const auto& eta : truncation_sample( trunc ) )
    out.push_back( atom( ratchet_atom( eta ) ) );
  return out;
}

/* Cohen grids */

std::string cohen_atom( std::size_t coordinate, std::uint64_t height )
{
  return "t." + std::to_string( coordinate ) + "." + std::to_string( height );
}

std::string cohen_parity_atom( std::size_t coordinate ) { return "s." + std::to_string( coordinate ); }

PotentialistSystem cohen_truth_system( std::size_t n, std::uint64_t h )
{
  if ( n < 2 || h < 2 )
    throw invalid_structure( "cohen grid needs at least 2 coordinates and height at least 2" );
  const double count = std::pow( static_cast<double>( h ) + 1.0, static_cast<double>( n ) );
  if ( count > static_cast<double>( max_system_worlds ) )
    throw budget_exceeded( "cohen grid has " + std::to_string( count ) + " worlds", count );

  const auto base = h + 1;
  const auto size = static_cast<std::size_t>( count );
  auto heights = [&]( std::size_t index ) {
    std::vector<std::uint64_t> mu( n );
    for ( std::size_t i = 0; i < n; ++i )
    {
      mu[i] = index % base;
      index /= base;
    }
    return mu;
  };

  std::set<std::string> alphabet;
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::uint64_t xi = 0; xi <= h; ++xi )
      alphabet.insert( cohen_atom( i, xi ) );
    alphabet.insert( cohen_parity_atom( i ) );
  }

  std::vector<std::vector<std::uint64_t>> mus;
  std::vector<World> worlds;
  WorldSet frontier( size );
  for ( std::size_t w = 0; w < size; ++w )
  {
    const auto mu = heights( w );
    World world;
    world.label = "X";
    world.content.insert( "Def" );
    for ( std::size_t i = 0; i < n; ++i )
    {
      world.label += ( i == 0 ? "[" : "," ) + std::to_string( mu[i] );
      for ( std::uint64_t xi = 0; xi <= h; ++xi )
      {
        world.valuation.emplace( cohen_atom( i, xi ), xi <= mu[i] );
        if ( xi <= mu[i] )
          world.content.insert( "Tr_" + std::to_string( xi ) + "(C_" + std::to_string( i ) + ")" );
      }
      world.valuation.emplace( cohen_parity_atom( i ), mu[i] % 2 == 0 );
      if ( mu[i] == h )
        frontier.set( w );
    }
    world.label += "]";
    worlds.push_back( std::move( world ) );
    mus.push_back( mu );
  }

  Frame order( size );
  for ( std::size_t v = 0; v < size; ++v )
    for ( std::size_t u = 0; u < size; ++u )
    {
      bool below = true;
      for ( std::size_t i = 0; i < n && below; ++i )
        below = mus[v][i] <= mus[u][i];
      if ( below )
        order.add_edge( v, u );
    }

  return PotentialistSystem( "cohen(" + std::to_string( n ) + "," + std::to_string( h ) + ")", std::move( worlds ),
                             std::move( order ), std::move( alphabet ), std::move( frontier ) );
}

ControlSet cohen_controls( std::size_t n )
{
  ControlSet out;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( i % 2 == 0 )
      out.buttons.push_back( atom( cohen_atom( i, 1 ) ) );
    else
      out.switches.push_back( atom( cohen_parity_atom( i ) ) );
  }
  return out;
}

/* small fixed systems */

PotentialistSystem killing_truth_system()
{
  std::vector<World> worlds{
      { "W0", { { "t", false } }, { "Def" } },
      { "W_T", { { "t", true } }, { "Def", "Tr(A)" } },
      { "W_C", { { "t", false } }, { "Def", "C" } },
  };
  Frame order( 3, { { 0, 0 }, { 0, 1 }, { 0, 2 }, { 1, 1 }, { 2, 2 } } );
  return PotentialistSystem( "killing-truth", std::move( worlds ), std::move( order ), { "t" }, WorldSet( 3 ) );
}

PotentialistSystem mostowski_fork()
{
  std::vector<World> worlds{
      { "root", { { "cB", false }, { "cC", false } }, { "Def" } },
      { "B", { { "cB", true }, { "cC", false } }, { "Def", "B" } },
      { "C", { { "cB", false }, { "cC", true } }, { "Def", "C" } },
  };
  Frame order( 3, { { 0, 0 }, { 0, 1 }, { 0, 2 }, { 1, 1 }, { 2, 2 } } );
  return PotentialistSystem( "mostowski-fork", std::move( worlds ), std::move( order ), { "cB", "cC" },
                             WorldSet( 3 ) );
}

/* amalgamation */

namespace {

bool contained( const std::set<std::string>& a, const std::set<std::string>& b )
{
  return std::includes( b.begin(), b.end(), a.begin(), a.end() );
}

} // namespace

PotentialistSystem amalgamated_variant( const PotentialistSystem& s )
{
  for ( std::size_t u = 0; u < s.size(); ++u )
    for ( std::size_t v = 0; v < s.size(); ++v )
      if ( s.order().accesses( u, v ) != contained( s.world( u ).content, s.world( v ).content ) )
        throw invalid_structure( "amalgamation needs the order of '" + s.name() + "' to be content inclusion" );

  std::vector<World> worlds = s.worlds();
  std::vector<bool> frontier;
  for ( std::size_t w = 0; w < s.size(); ++w )
    frontier.push_back( s.frontier().test( w ) );

  auto has_lower_bound = [&]( const World& a, const World& b ) {
    return std::any_of( worlds.begin(), worlds.end(), [&]( const World& c ) {
      return contained( c.content, a.content ) && contained( c.content, b.content );
    } );
  };

  // Pairwise joins reach every finite join: a join of worlds above c is again above c.
  for ( std::size_t done = 0; done < worlds.size(); ++done )
    for ( std::size_t other = 0; other < done; ++other )
    {
      const World& a = worlds[other];
      const World& b = worlds[done];
      if ( !has_lower_bound( a, b ) )
        continue;
      std::set<std::string> content = a.content;
      content.insert( b.content.begin(), b.content.end() );
      if ( std::any_of( worlds.begin(), worlds.end(), [&]( const World& c ) { return c.content == content; } ) )
        continue;
      if ( worlds.size() >= max_system_worlds )
        throw budget_exceeded( "amalgamation exceeds " + std::to_string( max_system_worlds ) + " worlds",
                               static_cast<double>( worlds.size() + 1 ) );
      World join;
      join.label = "join(" + a.label + "," + b.label + ")";
      join.content = std::move( content );
      for ( const auto& [name, value] : a.valuation )
        join.valuation.emplace( name, value || b.valuation.at( name ) );
      const bool edge = frontier[other] || frontier[done];
      worlds.push_back( std::move( join ) ); // invalidates a and b
      frontier.push_back( edge );
    }

  const auto n = worlds.size();
  Frame order( n );
  WorldSet front( n );
  for ( std::size_t u = 0; u < n; ++u )
  {
    if ( frontier[u] )
      front.set( u );
    for ( std::size_t v = 0; v < n; ++v )
      if ( contained( worlds[u].content, worlds[v].content ) )
        order.add_edge( u, v );
  }
  const bool already = n == s.size();
  return PotentialistSystem( already ? s.name() : "amalgamated(" + s.name() + ")", std::move( worlds ),
                             std::move( order ), s.alphabet(), std::move( front ) );
}

std::vector<std::string> system_names()
{
  return { "smallest-truth", "cohen", "killing-truth", "mostowski-fork", "amalgamated-fork" };
}

} // namespace potkit
