#pragma once

// Slow, obviously-correct reference implementations for Kripke machinery. Nothing here uses the
// library's bitset code paths.

#include <potkit/formula.hpp>
#include <potkit/kripke.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of( const potkit::Frame& fr )
{
  Matrix m( fr.size(), std::vector<bool>( fr.size() ) );
  for ( const auto& [a, b] : fr.edges() )
    m[a][b] = true;
  return m;
}

inline potkit::Frame frame_of( const Matrix& m )
{
  potkit::Frame fr( m.size() );
  for ( std::size_t a = 0; a < m.size(); ++a )
    for ( std::size_t b = 0; b < m.size(); ++b )
      if ( m[a][b] )
        fr.add_edge( a, b );
  return fr;
}

using NaiveValuation = std::map<std::string, std::vector<bool>>;

/// Textbook recursive satisfaction.
inline bool holds( const Matrix& r, const NaiveValuation& v, const potkit::Formula& f, std::size_t w )
{
  using potkit::Op;
  switch ( f.op() )
  {
  case Op::atom:
    return v.at( f.name() )[w];
  case Op::top:
    return true;
  case Op::bottom:
    return false;
  case Op::negation:
    return !holds( r, v, f.lhs(), w );
  case Op::conjunction:
    return holds( r, v, f.lhs(), w ) && holds( r, v, f.rhs(), w );
  case Op::disjunction:
    return holds( r, v, f.lhs(), w ) || holds( r, v, f.rhs(), w );
  case Op::implication:
    return !holds( r, v, f.lhs(), w ) || holds( r, v, f.rhs(), w );
  case Op::equivalence:
    return holds( r, v, f.lhs(), w ) == holds( r, v, f.rhs(), w );
  case Op::box:
    for ( std::size_t u = 0; u < r.size(); ++u )
      if ( r[w][u] && !holds( r, v, f.lhs(), u ) )
        return false;
    return true;
  case Op::diamond:
    for ( std::size_t u = 0; u < r.size(); ++u )
      if ( r[w][u] && holds( r, v, f.lhs(), u ) )
        return true;
    return false;
  }
  return false;
}

inline NaiveValuation naive_valuation( const potkit::Valuation& val )
{
  NaiveValuation out;
  for ( const auto& [name, set] : val )
  {
    std::vector<bool> bits( set.size() );
    for ( std::size_t i = 0; i < set.size(); ++i )
      bits[i] = set.test( i );
    out.emplace( name, std::move( bits ) );
  }
  return out;
}

inline bool is_preorder( const Matrix& m )
{
  const auto n = m.size();
  for ( std::size_t a = 0; a < n; ++a )
  {
    if ( !m[a][a] )
      return false;
    for ( std::size_t b = 0; b < n; ++b )
      for ( std::size_t c = 0; c < n; ++c )
        if ( m[a][b] && m[b][c] && !m[a][c] )
          return false;
  }
  return true;
}

/// Church-Rosser, written out from the definition.
inline bool is_directed( const Matrix& m )
{
  const auto n = m.size();
  for ( std::size_t a = 0; a < n; ++a )
    for ( std::size_t b = 0; b < n; ++b )
      for ( std::size_t c = 0; c < n; ++c )
      {
        if ( !m[a][b] || !m[a][c] )
          continue;
        bool joined = false;
        for ( std::size_t d = 0; d < n && !joined; ++d )
          joined = m[b][d] && m[c][d];
        if ( !joined )
          return false;
      }
  return true;
}

inline bool is_connected_total( const Matrix& m )
{
  for ( std::size_t a = 0; a < m.size(); ++a )
    for ( std::size_t b = 0; b < m.size(); ++b )
      if ( !m[a][b] && !m[b][a] )
        return false;
  return true;
}

inline Matrix permute( const Matrix& m, const std::vector<std::size_t>& p )
{
  Matrix out( m.size(), std::vector<bool>( m.size() ) );
  for ( std::size_t a = 0; a < m.size(); ++a )
    for ( std::size_t b = 0; b < m.size(); ++b )
      out[p[a]][p[b]] = m[a][b];
  return out;
}

/// Isomorphism-invariant key: the least row-major bit string over all relabelings.
inline std::vector<bool> brute_canonical( const Matrix& m )
{
  std::vector<std::size_t> p( m.size() );
  std::iota( p.begin(), p.end(), 0 );
  std::vector<bool> best;
  bool first = true;
  do
  {
    const auto q = permute( m, p );
    std::vector<bool> bits;
    for ( const auto& row : q )
      bits.insert( bits.end(), row.begin(), row.end() );
    if ( first || bits < best )
      best = bits;
    first = false;
  } while ( std::next_permutation( p.begin(), p.end() ) );
  return best;
}

inline bool isomorphic( const Matrix& a, const Matrix& b )
{
  return a.size() == b.size() && brute_canonical( a ) == brute_canonical( b );
}

/// Every preorder on exactly n labelled worlds (reflexive pairs forced), n <= 5.
inline std::vector<Matrix> labelled_preorders( std::size_t n )
{
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for ( std::size_t a = 0; a < n; ++a )
    for ( std::size_t b = 0; b < n; ++b )
      if ( a != b )
        free.emplace_back( a, b );
  std::vector<Matrix> out;
  for ( std::uint64_t code = 0; code < ( std::uint64_t{ 1 } << free.size() ); ++code )
  {
    Matrix m( n, std::vector<bool>( n ) );
    for ( std::size_t a = 0; a < n; ++a )
      m[a][a] = true;
    for ( std::size_t i = 0; i < free.size(); ++i )
      if ( ( code >> i ) & 1u )
        m[free[i].first][free[i].second] = true;
    if ( is_preorder( m ) )
      out.push_back( std::move( m ) );
  }
  return out;
}

/// Isomorphism classes of preorders on exactly n worlds satisfying `keep`.
inline std::set<std::vector<bool>> unlabelled_preorders( std::size_t n, const std::function<bool( const Matrix& )>& keep )
{
  std::set<std::vector<bool>> out;
  for ( const auto& m : labelled_preorders( n ) )
    if ( keep( m ) )
      out.insert( brute_canonical( m ) );
  return out;
}

/// The three conditions of a p-morphism onto the part of `t` generated by `troot`.
inline bool is_p_morphism( const potkit::Frame& s, std::size_t sroot, const potkit::Frame& t, std::size_t troot,
                           const std::vector<std::size_t>& g )
{
  if ( g.size() != s.size() || g[sroot] != troot )
    return false;
  for ( std::size_t u = 0; u < s.size(); ++u )
  {
    if ( !t.accesses( troot, g[u] ) )
      return false;
    for ( std::size_t v = 0; v < s.size(); ++v )
      if ( s.accesses( u, v ) && !t.accesses( g[u], g[v] ) )
        return false;
    for ( std::size_t b = 0; b < t.size(); ++b )
    {
      if ( !t.accesses( g[u], b ) )
        continue;
      bool lifted = false;
      for ( std::size_t v = 0; v < s.size() && !lifted; ++v )
        lifted = s.accesses( u, v ) && g[v] == b;
      if ( !lifted )
        return false;
    }
  }
  return true;
}

/// Random formula over `names` with at most `depth` levels of connectives.
inline potkit::Formula random_formula( std::mt19937_64& rng, const std::vector<std::string>& names, int depth )
{
  using potkit::Formula;
  std::uniform_int_distribution<int> pick( 0, depth <= 0 ? 2 : 9 );
  const int k = pick( rng );
  auto sub = [&] { return random_formula( rng, names, depth - 1 ); };
  switch ( k )
  {
  case 0:
  case 1:
    return potkit::atom( names[std::uniform_int_distribution<std::size_t>( 0, names.size() - 1 )( rng )] );
  case 2:
    return std::uniform_int_distribution<int>( 0, 5 )( rng ) == 0 ? Formula::bottom()
                                                                  : potkit::atom( names.front() );
  case 3:
    return ~sub();
  case 4:
    return sub() & sub();
  case 5:
    return sub() | sub();
  case 6:
    return potkit::implies( sub(), sub() );
  case 7:
    return potkit::iff( sub(), sub() );
  case 8:
    return potkit::box( sub() );
  default:
    return potkit::diamond( sub() );
  }
}

inline potkit::Frame random_frame( std::mt19937_64& rng, std::size_t n, double density )
{
  std::bernoulli_distribution edge( density );
  potkit::Frame fr( n );
  for ( std::size_t a = 0; a < n; ++a )
    for ( std::size_t b = 0; b < n; ++b )
      if ( edge( rng ) )
        fr.add_edge( a, b );
  return fr;
}

inline potkit::Valuation random_valuation( std::mt19937_64& rng, std::size_t n, const std::vector<std::string>& names )
{
  std::bernoulli_distribution bit( 0.5 );
  potkit::Valuation val;
  for ( const auto& name : names )
  {
    potkit::WorldSet s( n );
    for ( std::size_t w = 0; w < n; ++w )
      s[w] = bit( rng );
    val.emplace( name, s );
  }
  return val;
}

} // namespace oracle
