#include <potkit/frame_enum.hpp>

#include <potkit/error.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace potkit {

std::string_view frame_class_name( FrameClass c )
{
  switch ( c )
  {
  case FrameClass::preorder:
    return "preorder";
  case FrameClass::directed_preorder:
    return "directed-preorder";
  case FrameClass::linear_preorder:
    return "linear-preorder";
  }
  return "?";
}

std::optional<FrameClass> frame_class_from_name( std::string_view name )
{
  if ( name == "preorder" )
    return FrameClass::preorder;
  if ( name == "directed-preorder" || name == "directed" )
    return FrameClass::directed_preorder;
  if ( name == "linear-preorder" || name == "linear" )
    return FrameClass::linear_preorder;
  return std::nullopt;
}

bool in_class( const Frame& fr, FrameClass c )
{
  const auto p = frame_properties( fr );
  if ( !p.reflexive || !p.transitive )
    return false;
  switch ( c )
  {
  case FrameClass::preorder:
    return true;
  case FrameClass::directed_preorder:
    return p.directed;
  case FrameClass::linear_preorder:
    return p.linear;
  }
  return false;
}

namespace {

void require_canonical_size( const Frame& fr )
{
  if ( fr.size() > max_canonical_worlds )
    throw budget_exceeded( "canonical codes support at most " + std::to_string( max_canonical_worlds ) + " worlds",
                           static_cast<double>( fr.size() ) );
}

/// Small dense copy of a frame for the permutation search.
struct dense_frame
{
  std::size_t n;
  std::uint64_t adj; // bit i*n+j

  bool at( std::size_t i, std::size_t j ) const { return ( adj >> ( i * n + j ) ) & 1u; }
};

dense_frame to_dense( const Frame& fr ) { return { fr.size(), adjacency_code( fr ) }; }

/// Minimal code over relabelings that sort worlds by (out-degree, in-degree); worlds with equal
/// keys are permuted freely within their block.
std::pair<std::uint64_t, std::vector<std::size_t>> canonical_search( const dense_frame& d )
{
  const auto n = d.n;
  std::vector<std::pair<std::size_t, std::size_t>> key( n );
  for ( std::size_t i = 0; i < n; ++i )
    for ( std::size_t j = 0; j < n; ++j )
      if ( d.at( i, j ) )
      {
        ++key[i].first;
        ++key[j].second;
      }

  // old worlds sorted by key: positions [block_start, block_end) share a key.
  std::vector<std::size_t> order( n );
  std::iota( order.begin(), order.end(), 0 );
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) { return key[a] < key[b]; } );

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for ( std::size_t s = 0; s < n; )
  {
    auto e = s + 1;
    while ( e < n && key[order[e]] == key[order[s]] )
      ++e;
    blocks.emplace_back( s, e );
    s = e;
  }

  std::uint64_t best = ~std::uint64_t{ 0 };
  std::vector<std::size_t> best_perm( n );
  std::vector<std::size_t> perm( n ); // old -> new
  std::vector<std::size_t> arrangement = order;

  // Enumerate the product of permutations inside each block.
  std::function<void( std::size_t )> recurse = [&]( std::size_t b ) {
    if ( b == blocks.size() )
    {
      for ( std::size_t pos = 0; pos < n; ++pos )
        perm[arrangement[pos]] = pos;
      std::uint64_t code = 0;
      for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = 0; j < n; ++j )
          if ( d.at( i, j ) )
            code |= std::uint64_t{ 1 } << ( perm[i] * n + perm[j] );
      if ( code < best )
      {
        best = code;
        best_perm = perm;
      }
      return;
    }
    auto [s, e] = blocks[b];
    std::sort( arrangement.begin() + s, arrangement.begin() + e );
    do
    {
      recurse( b + 1 );
    } while ( std::next_permutation( arrangement.begin() + s, arrangement.begin() + e ) );
  };
  recurse( 0 );
  if ( n == 0 )
    best = 0;
  return { best, best_perm };
}

Frame from_code( std::size_t n, std::uint64_t code )
{
  Frame fr( n );
  for ( std::size_t i = 0; i < n; ++i )
    for ( std::size_t j = 0; j < n; ++j )
      if ( ( code >> ( i * n + j ) ) & 1u )
        fr.add_edge( i, j );
  return fr;
}

bool up_closed( const dense_frame& d, std::uint32_t set )
{
  for ( std::size_t i = 0; i < d.n; ++i )
    if ( ( set >> i ) & 1u )
      for ( std::size_t j = 0; j < d.n; ++j )
        if ( d.at( i, j ) && !( ( set >> j ) & 1u ) )
          return false;
  return true;
}

bool down_closed( const dense_frame& d, std::uint32_t set )
{
  for ( std::size_t j = 0; j < d.n; ++j )
    if ( ( set >> j ) & 1u )
      for ( std::size_t i = 0; i < d.n; ++i )
        if ( d.at( i, j ) && !( ( set >> i ) & 1u ) )
          return false;
  return true;
}

/// Canonical codes of the preorders on k+1 worlds obtained by adding one world to each preorder
/// in `level` (all of size k). Every preorder arises this way: deleting a world leaves a preorder.
std::vector<std::uint64_t> extend_level( std::size_t k, const std::vector<std::uint64_t>& level )
{
  std::set<std::uint64_t> next;
  const auto n = k + 1;
  for ( auto code : level )
  {
    const dense_frame old{ k, code };
    std::vector<std::uint32_t> ups, downs;
    for ( std::uint32_t s = 0; s < ( 1u << k ); ++s )
    {
      if ( up_closed( old, s ) )
        ups.push_back( s );
      if ( down_closed( old, s ) )
        downs.push_back( s );
    }

    std::uint64_t base = 0;
    for ( std::size_t i = 0; i < k; ++i )
      for ( std::size_t j = 0; j < k; ++j )
        if ( old.at( i, j ) )
          base |= std::uint64_t{ 1 } << ( i * n + j );
    base |= std::uint64_t{ 1 } << ( k * n + k );

    for ( auto up : ups )
      for ( auto down : downs )
      {
        // transitivity through the new world: everything below it sees everything above it
        bool ok = true;
        for ( std::size_t i = 0; i < k && ok; ++i )
          if ( ( down >> i ) & 1u )
            for ( std::size_t j = 0; j < k && ok; ++j )
              if ( ( ( up >> j ) & 1u ) && !old.at( i, j ) )
                ok = false;
        if ( !ok )
          continue;
        auto adj = base;
        for ( std::size_t j = 0; j < k; ++j )
        {
          if ( ( up >> j ) & 1u )
            adj |= std::uint64_t{ 1 } << ( k * n + j );
          if ( ( down >> j ) & 1u )
            adj |= std::uint64_t{ 1 } << ( j * n + k );
        }
        next.insert( canonical_search( { n, adj } ).first );
      }
  }
  return { next.begin(), next.end() };
}

/// Canonical codes of all preorders on exactly n worlds, ascending.
const std::vector<std::uint64_t>& preorder_codes( std::size_t n )
{
  static std::mutex mutex;
  static std::deque<std::vector<std::uint64_t>> levels{ {}, { 1u } };
  std::lock_guard lock( mutex );
  while ( levels.size() <= n )
  {
    const auto k = levels.size() - 1;
    levels.push_back( extend_level( k, levels[k] ) );
  }
  return levels[n];
}

} // namespace

std::uint64_t adjacency_code( const Frame& fr )
{
  require_canonical_size( fr );
  const auto n = fr.size();
  std::uint64_t code = 0;
  for ( const auto& [i, j] : fr.edges() )
    code |= std::uint64_t{ 1 } << ( i * n + j );
  return code;
}

std::uint64_t canonical_code( const Frame& fr )
{
  require_canonical_size( fr );
  return canonical_search( to_dense( fr ) ).first;
}

Frame canonical_form( const Frame& fr )
{
  require_canonical_size( fr );
  return fr.permuted( canonical_search( to_dense( fr ) ).second );
}

std::vector<Frame> enumerate_frames_exact( std::size_t n, FrameClass c, std::size_t cap )
{
  if ( n > cap || n > max_canonical_worlds )
    throw budget_exceeded( "frame enumeration limited to " + std::to_string( std::min( cap, max_canonical_worlds ) ) +
                               " worlds, requested " + std::to_string( n ),
                           static_cast<double>( n ) );
  std::vector<Frame> out;
  for ( auto code : preorder_codes( n ) )
  {
    auto fr = from_code( n, code );
    if ( in_class( fr, c ) )
      out.push_back( std::move( fr ) );
  }
  return out;
}

std::vector<Frame> enumerate_frames( std::size_t n, FrameClass c, std::size_t cap )
{
  std::vector<Frame> out;
  for_each_frame(
      n, c,
      [&]( const Frame& fr ) {
        out.push_back( fr );
        return true;
      },
      cap );
  return out;
}

void for_each_frame( std::size_t n, FrameClass c, const std::function<bool( const Frame& )>& visit, std::size_t cap )
{
  if ( n > cap || n > max_canonical_worlds )
    throw budget_exceeded( "frame enumeration limited to " + std::to_string( std::min( cap, max_canonical_worlds ) ) +
                               " worlds, requested " + std::to_string( n ),
                           static_cast<double>( n ) );
  for ( std::size_t k = 1; k <= n; ++k )
    for ( const auto& fr : enumerate_frames_exact( k, c, cap ) )
      if ( !visit( fr ) )
        return;
}

} // namespace potkit
