#include <potkit/kripke.hpp>

#include <potkit/error.hpp>

#include <cmath>
#include <vector>

namespace potkit {

Frame::Frame( std::size_t worlds ) : succ_( worlds, WorldSet( worlds ) ) {}

Frame::Frame( std::size_t worlds, const std::vector<Edge>& access ) : Frame( worlds )
{
  for ( const auto& [from, to] : access )
    add_edge( from, to );
}

void Frame::require( std::size_t w ) const
{
  if ( w >= succ_.size() )
    throw world_range_error( "world " + std::to_string( w ) + " out of range (frame has " +
                             std::to_string( succ_.size() ) + " worlds)" );
}

bool Frame::accesses( std::size_t from, std::size_t to ) const
{
  require( from );
  require( to );
  return succ_[from].test( to );
}

const WorldSet& Frame::successors( std::size_t w ) const
{
  require( w );
  return succ_[w];
}

WorldSet Frame::predecessors( std::size_t w ) const
{
  require( w );
  WorldSet out( size() );
  for ( std::size_t v = 0; v < size(); ++v )
    if ( succ_[v].test( w ) )
      out.set( v );
  return out;
}

void Frame::add_edge( std::size_t from, std::size_t to )
{
  require( from );
  require( to );
  succ_[from].set( to );
}

std::vector<Edge> Frame::edges() const
{
  std::vector<Edge> out;
  for ( std::size_t i = 0; i < size(); ++i )
    for ( auto j = succ_[i].find_first(); j != WorldSet::npos; j = succ_[i].find_next( j ) )
      out.emplace_back( i, j );
  return out;
}

Frame Frame::closure() const
{
  Frame out = *this;
  for ( std::size_t w = 0; w < size(); ++w )
    out.succ_[w].set( w );
  // Warshall on bit rows.
  for ( std::size_t k = 0; k < size(); ++k )
    for ( std::size_t i = 0; i < size(); ++i )
      if ( out.succ_[i].test( k ) )
        out.succ_[i] |= out.succ_[k];
  return out;
}

Frame Frame::generated_subframe( std::size_t root, std::vector<std::size_t>* mapping ) const
{
  require( root );
  WorldSet reached( size() );
  std::vector<std::size_t> stack{ root };
  reached.set( root );
  while ( !stack.empty() )
  {
    const auto w = stack.back();
    stack.pop_back();
    for ( auto v = succ_[w].find_first(); v != WorldSet::npos; v = succ_[w].find_next( v ) )
      if ( !reached.test( v ) )
      {
        reached.set( v );
        stack.push_back( v );
      }
  }

  std::vector<std::size_t> order{ root };
  for ( auto v = reached.find_first(); v != WorldSet::npos; v = reached.find_next( v ) )
    if ( v != root )
      order.push_back( v );
  std::vector<std::size_t> index( size(), 0 );
  for ( std::size_t i = 0; i < order.size(); ++i )
    index[order[i]] = i;

  Frame out( order.size() );
  for ( std::size_t i = 0; i < order.size(); ++i )
    for ( auto v = succ_[order[i]].find_first(); v != WorldSet::npos; v = succ_[order[i]].find_next( v ) )
      out.succ_[i].set( index[v] );
  if ( mapping )
    *mapping = std::move( order );
  return out;
}

Frame Frame::permuted( const std::vector<std::size_t>& perm ) const
{
  if ( perm.size() != size() )
    throw invalid_structure( "permutation size does not match frame" );
  Frame out( size() );
  for ( std::size_t i = 0; i < size(); ++i )
    for ( auto j = succ_[i].find_first(); j != WorldSet::npos; j = succ_[i].find_next( j ) )
      out.succ_[perm[i]].set( perm[j] );
  return out;
}

KripkeModel::KripkeModel( Frame frame, Valuation valuation )
    : frame_( std::move( frame ) ), valuation_( std::move( valuation ) )
{
  for ( const auto& [name, set] : valuation_ )
    if ( set.size() != frame_.size() )
      throw invalid_structure( "valuation of '" + name + "' has " + std::to_string( set.size() ) +
                               " worlds, frame has " + std::to_string( frame_.size() ) );
}

WorldSet box_set( const Frame& fr, const WorldSet& s )
{
  WorldSet out( fr.size() );
  for ( std::size_t w = 0; w < fr.size(); ++w )
    if ( fr.successors( w ).is_subset_of( s ) )
      out.set( w );
  return out;
}

WorldSet diamond_set( const Frame& fr, const WorldSet& s )
{
  WorldSet out( fr.size() );
  for ( std::size_t w = 0; w < fr.size(); ++w )
    if ( fr.successors( w ).intersects( s ) )
      out.set( w );
  return out;
}

WorldSet truth_set( const KripkeModel& m, const Formula& f )
{
  const auto n = m.size();
  switch ( f.op() )
  {
  case Op::atom:
  {
    const auto it = m.valuation().find( f.name() );
    if ( it == m.valuation().end() )
      throw unknown_atom_error( f.name() );
    return it->second;
  }
  case Op::top:
    return WorldSet( n ).set();
  case Op::bottom:
    return WorldSet( n );
  case Op::negation:
    return ~truth_set( m, f.lhs() );
  case Op::box:
    return box_set( m.frame(), truth_set( m, f.lhs() ) );
  case Op::diamond:
    return diamond_set( m.frame(), truth_set( m, f.lhs() ) );
  case Op::conjunction:
    return truth_set( m, f.lhs() ) & truth_set( m, f.rhs() );
  case Op::disjunction:
    return truth_set( m, f.lhs() ) | truth_set( m, f.rhs() );
  case Op::implication:
    return ~truth_set( m, f.lhs() ) | truth_set( m, f.rhs() );
  case Op::equivalence:
    return ~( truth_set( m, f.lhs() ) ^ truth_set( m, f.rhs() ) );
  }
  return WorldSet( n );
}

bool check( const KripkeModel& m, std::size_t world, const Formula& f )
{
  if ( world >= m.size() )
    throw world_range_error( "world " + std::to_string( world ) + " out of range (model has " +
                             std::to_string( m.size() ) + " worlds)" );
  return truth_set( m, f ).test( world );
}

bool valid_in_model( const KripkeModel& m, const Formula& f ) { return truth_set( m, f ).all(); }

namespace {

void require_budget( std::size_t bits, std::uint64_t budget )
{
  if ( bits >= 63 || ( std::uint64_t{ 1 } << bits ) > budget )
    throw budget_exceeded( "frame validity needs 2^" + std::to_string( bits ) + " valuations, budget is " +
                               std::to_string( budget ),
                           std::pow( 2.0, static_cast<double>( bits ) ) );
}

KripkeModel decode_valuation( const Frame& fr, const std::set<std::string>& names, std::uint64_t code )
{
  const auto n = fr.size();
  Valuation val;
  std::size_t a = 0;
  for ( const auto& name : names )
  {
    WorldSet set( n );
    for ( std::size_t w = 0; w < n; ++w )
      if ( ( code >> ( a * n + w ) ) & 1u )
        set.set( w );
    val.emplace( name, std::move( set ) );
    ++a;
  }
  return KripkeModel( fr, std::move( val ) );
}

} // namespace

std::optional<Countermodel> find_countermodel( const Frame& fr, const Formula& f, std::uint64_t budget )
{
  const auto names = atoms( f );
  const auto bits = names.size() * fr.size();
  require_budget( bits, budget );

  const std::uint64_t total = std::uint64_t{ 1 } << bits;
  for ( std::uint64_t code = 0; code < total; ++code )
  {
    auto model = decode_valuation( fr, names, code );
    const auto truth = truth_set( model, f );
    if ( !truth.all() )
    {
      const auto world = ( ~truth ).find_first();
      return Countermodel{ std::move( model ), world };
    }
  }
  return std::nullopt;
}

WorldSet frame_truth_set( const Frame& fr, const Formula& f, std::uint64_t budget )
{
  const auto names = atoms( f );
  const auto bits = names.size() * fr.size();
  require_budget( bits, budget );

  WorldSet out( fr.size() );
  out.set();
  const std::uint64_t total = std::uint64_t{ 1 } << bits;
  for ( std::uint64_t code = 0; code < total && out.any(); ++code )
    out &= truth_set( decode_valuation( fr, names, code ), f );
  return out;
}

bool valid_in_frame( const Frame& fr, const Formula& f, std::uint64_t budget )
{
  return !find_countermodel( fr, f, budget ).has_value();
}

FrameProperties frame_properties( const Frame& fr )
{
  const auto n = fr.size();
  FrameProperties p;
  p.reflexive = true;
  p.transitive = true;
  p.directed = true;
  p.pairwise_directed = true;
  p.linear = true;
  p.forward_linear = true;
  p.antisymmetric = true;

  WorldSet everything( n );
  everything.set();
  for ( std::size_t u = 0; u < n; ++u )
  {
    const auto& up = fr.successors( u );
    const auto down = fr.predecessors( u );
    if ( !up.test( u ) )
      p.reflexive = false;
    auto both = up & down;
    both.reset( u );
    if ( both.any() )
      p.antisymmetric = false;
    if ( ( up | down ) != everything )
      p.linear = false;

    // worlds sharing a predecessor with u
    WorldSet siblings( n );
    for ( auto v = down.find_first(); v != WorldSet::npos; v = down.find_next( v ) )
      siblings |= fr.successors( v );
    if ( !siblings.is_subset_of( up | down ) )
      p.forward_linear = false;

    for ( std::size_t v = 0; v < n; ++v )
    {
      if ( up.test( v ) && !fr.successors( v ).is_subset_of( up ) )
        p.transitive = false;
      if ( !up.intersects( fr.successors( v ) ) )
      {
        p.pairwise_directed = false;
        if ( siblings.test( v ) )
          p.directed = false;
      }
    }
  }
  return p;
}

} // namespace potkit
