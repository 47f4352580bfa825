#include <potkit/potentialist.hpp>

#include <potkit/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace potkit {

/* PotentialistSystem */

PotentialistSystem::PotentialistSystem( std::string name, std::vector<World> worlds, Frame order,
                                        std::set<std::string> alphabet, WorldSet frontier )
    : name_( std::move( name ) ), worlds_( std::move( worlds ) ), order_( std::move( order ) ),
      alphabet_( std::move( alphabet ) ), frontier_( std::move( frontier ) )
{
  const auto n = worlds_.size();
  if ( order_.size() != n )
    throw invalid_structure( "order has " + std::to_string( order_.size() ) + " worlds, system has " +
                             std::to_string( n ) );
  if ( frontier_.size() != n )
    throw invalid_structure( "frontier has " + std::to_string( frontier_.size() ) + " bits, system has " +
                             std::to_string( n ) + " worlds" );
  const auto props = frame_properties( order_ );
  if ( !props.reflexive || !props.transitive )
    throw invalid_structure( "order of system '" + name_ + "' is not reflexive and transitive" );

  for ( const auto& a : alphabet_ )
    if ( !is_valid_atom_name( a ) )
      throw invalid_structure( "invalid atom name '" + a + "'" );

  Valuation val;
  for ( const auto& a : alphabet_ )
    val.emplace( a, WorldSet( n ) );
  for ( std::size_t w = 0; w < n; ++w )
  {
    const auto& world = worlds_[w];
    if ( world.valuation.size() != alphabet_.size() )
      throw invalid_structure( "world '" + world.label + "' does not value exactly the alphabet" );
    for ( const auto& [atom, value] : world.valuation )
    {
      auto it = val.find( atom );
      if ( it == val.end() )
        throw invalid_structure( "world '" + world.label + "' values '" + atom + "' outside the alphabet" );
      it->second[w] = value;
    }
  }

  for ( const auto& [v, u] : order_.edges() )
    if ( !std::includes( worlds_[u].content.begin(), worlds_[u].content.end(), worlds_[v].content.begin(),
                         worlds_[v].content.end() ) )
      throw invalid_structure( "world '" + worlds_[v].label + "' is below '" + worlds_[u].label +
                               "' but its content is not contained there" );

  model_ = KripkeModel( order_, std::move( val ) );
}

std::optional<std::size_t> PotentialistSystem::find_world( const std::string& label ) const
{
  for ( std::size_t i = 0; i < worlds_.size(); ++i )
    if ( worlds_[i].label == label )
      return i;
  return std::nullopt;
}

/* evaluation */

namespace {

/// Top-down evaluator: truth of a subformula at a world is computed on demand and memoized per
/// formula node.
class world_evaluator
{
public:
  explicit world_evaluator( const PotentialistSystem& s ) : s_( s ) {}

  bool eval( const Formula& f, std::size_t w )
  {
    auto& slot = memo_.try_emplace( f.id(), s_.size(), std::int8_t{ -1 } ).first->second;
    if ( slot[w] >= 0 )
      return slot[w] != 0;
    const bool value = compute( f, w );
    // `slot` may have been invalidated by rehashing during compute()
    memo_[f.id()][w] = value ? 1 : 0;
    return value;
  }

private:
  bool compute( const Formula& f, std::size_t w )
  {
    switch ( f.op() )
    {
    case Op::atom:
    {
      const auto& val = s_.world( w ).valuation;
      const auto it = val.find( f.name() );
      if ( it == val.end() )
        throw unknown_atom_error( f.name() );
      return it->second;
    }
    case Op::top:
      return true;
    case Op::bottom:
      return false;
    case Op::negation:
      return !eval( f.lhs(), w );
    case Op::conjunction:
      return eval( f.lhs(), w ) && eval( f.rhs(), w );
    case Op::disjunction:
      return eval( f.lhs(), w ) || eval( f.rhs(), w );
    case Op::implication:
      return !eval( f.lhs(), w ) || eval( f.rhs(), w );
    case Op::equivalence:
      return eval( f.lhs(), w ) == eval( f.rhs(), w );
    case Op::box:
    {
      const auto& succ = s_.order().successors( w );
      for ( auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next( v ) )
        if ( !eval( f.lhs(), v ) )
          return false;
      return true;
    }
    case Op::diamond:
    {
      const auto& succ = s_.order().successors( w );
      for ( auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next( v ) )
        if ( eval( f.lhs(), v ) )
          return true;
      return false;
    }
    }
    return false;
  }

  const PotentialistSystem& s_;
  std::unordered_map<const void*, std::vector<std::int8_t>> memo_;
};

} // namespace

bool evaluate( const PotentialistSystem& s, std::size_t world, const Formula& f, const Substitution& subst )
{
  if ( world >= s.size() )
    throw world_range_error( "world " + std::to_string( world ) + " out of range (system has " +
                             std::to_string( s.size() ) + " worlds)" );
  const auto instance = subst.empty() ? f : substitute( f, subst );
  // atoms are checked up front so that an unknown atom fails even where it is never reached
  for ( const auto& a : atoms( instance ) )
    if ( !s.alphabet().contains( a ) )
      throw unknown_atom_error( a );
  return world_evaluator( s ).eval( instance, world );
}

/* pools and schemes */

std::vector<PoolEntry> substitution_pool( const PotentialistSystem& s, const PoolSpec& spec )
{
  const auto n = s.size();
  const auto& fr = s.order();
  std::vector<PoolEntry> pool;
  std::set<WorldSet> seen;

  auto add = [&]( Formula f, WorldSet truth ) {
    if ( !seen.insert( truth ).second )
      return;
    if ( pool.size() >= spec.max_size )
      throw budget_exceeded( "substitution pool exceeds " + std::to_string( spec.max_size ) + " members",
                             static_cast<double>( pool.size() + 1 ) );
    pool.push_back( { std::move( f ), std::move( truth ) } );
  };

  add( Formula::top(), WorldSet( n ).set() );
  add( Formula::bottom(), WorldSet( n ) );
  std::vector<std::string> names = spec.atoms;
  if ( names.empty() )
    names.assign( s.alphabet().begin(), s.alphabet().end() );
  for ( const auto& a : names )
  {
    if ( !s.alphabet().contains( a ) )
      throw unknown_atom_error( a );
    add( atom( a ), truth_set( s.model(), atom( a ) ) );
  }

  const std::vector<PoolEntry> base = pool;
  std::size_t level_begin = 0;
  for ( std::size_t d = 1; d <= spec.depth; ++d )
  {
    const auto level_end = pool.size();
    for ( std::size_t i = level_begin; i < level_end; ++i )
    {
      // copy: `pool` may reallocate while we append
      const PoolEntry e = pool[i];
      add( ~e.formula, ~e.truth );
      add( box( e.formula ), box_set( fr, e.truth ) );
      add( diamond( e.formula ), diamond_set( fr, e.truth ) );
      for ( const auto& b : base )
      {
        add( e.formula & b.formula, e.truth & b.truth );
        add( e.formula | b.formula, e.truth | b.truth );
      }
    }
    level_begin = level_end;
  }
  return pool;
}

WorldSet scheme_truth( const Frame& fr, AxiomScheme scheme, const WorldSet& phi, const WorldSet& psi )
{
  auto B = [&]( const WorldSet& x ) { return box_set( fr, x ); };
  auto D = [&]( const WorldSet& x ) { return diamond_set( fr, x ); };
  switch ( scheme )
  {
  case AxiomScheme::K:
    return ~B( ~phi | psi ) | ~B( phi ) | B( psi );
  case AxiomScheme::Dual:
    return ~( ~D( phi ) ^ B( ~phi ) );
  case AxiomScheme::T:
    return ~B( phi ) | phi;
  case AxiomScheme::Four:
    return ~B( phi ) | B( B( phi ) );
  case AxiomScheme::Dot2:
    return ~D( B( phi ) ) | B( D( phi ) );
  case AxiomScheme::Dot3:
    return ~( D( phi ) & D( psi ) ) | D( ( phi & D( psi ) ) | ( D( phi ) & psi ) );
  }
  return WorldSet( fr.size() ).set();
}

SchemeReport scheme_report( const PotentialistSystem& s, const std::vector<AxiomScheme>& schemes,
                            const PoolSpec& pool_spec, WorldScope scope )
{
  const auto pool = substitution_pool( s, pool_spec );
  const WorldSet in_scope = scope == WorldScope::interior ? s.interior() : WorldSet( s.size() ).set();

  SchemeReport report;
  report.pool_size = pool.size();
  report.scope = scope;

  for ( const auto scheme : schemes )
  {
    SchemeResult result;
    result.scheme = scheme;
    const bool binary = scheme_is_binary( scheme );

    auto record = [&]( const PoolEntry& phi, const PoolEntry* psi, std::size_t world ) {
      SchemeFailure failure;
      failure.substitution.emplace( "p", phi.formula );
      if ( psi )
        failure.substitution.emplace( "q", psi->formula );
      failure.world = world;
      failure.instance = instantiate( scheme, phi.formula, psi ? std::optional<Formula>( psi->formula ) : std::nullopt );
      failure.verified = !evaluate( s, world, failure.instance );
      result.failure = std::move( failure );
    };

    for ( std::size_t i = 0; i < pool.size() && !result.failure; ++i )
    {
      if ( !binary )
      {
        ++result.instances_checked;
        const auto bad = ~scheme_truth( s.order(), scheme, pool[i].truth, pool[i].truth ) & in_scope;
        if ( bad.any() )
          record( pool[i], nullptr, bad.find_first() );
        continue;
      }
      for ( std::size_t j = 0; j < pool.size(); ++j )
      {
        ++result.instances_checked;
        const auto bad = ~scheme_truth( s.order(), scheme, pool[i].truth, pool[j].truth ) & in_scope;
        if ( bad.any() )
        {
          record( pool[i], &pool[j], bad.find_first() );
          break;
        }
      }
    }
    report.results.push_back( std::move( result ) );
  }
  return report;
}

/* controls */

std::vector<Formula> statements( const std::vector<ControlStatement>& controls )
{
  std::vector<Formula> out;
  out.reserve( controls.size() );
  for ( const auto& c : controls )
    out.push_back( c.statement );
  return out;
}

WorldSet pushed( const PotentialistSystem& s, const Formula& b ) { return truth_set( s.model(), box( b ) ); }

namespace {

WorldSet scope_or_interior( const PotentialistSystem& s, const std::optional<WorldSet>& scope )
{
  if ( !scope )
    return s.interior();
  if ( scope->size() != s.size() )
    throw invalid_structure( "scope has " + std::to_string( scope->size() ) + " bits, system has " +
                             std::to_string( s.size() ) + " worlds" );
  return *scope;
}

} // namespace

bool certify_button( const PotentialistSystem& s, const Formula& b, const std::optional<WorldSet>& scope )
{
  const auto where = scope_or_interior( s, scope );
  return where.is_subset_of( truth_set( s.model(), diamond( box( b ) ) ) );
}

bool certify_switch( const PotentialistSystem& s, const Formula& sw, const std::optional<WorldSet>& scope )
{
  const auto where = scope_or_interior( s, scope );
  return where.is_subset_of( truth_set( s.model(), diamond( sw ) & diamond( ~sw ) ) );
}

namespace {

inline constexpr std::size_t max_controls = 20;

/// Per-world control pattern: bit i for button i pushed, bit k + j for switch j true.
std::vector<std::uint32_t> control_patterns( const PotentialistSystem& s, const std::vector<Formula>& buttons,
                                             const std::vector<Formula>& switches )
{
  if ( buttons.size() + switches.size() > max_controls )
    throw budget_exceeded( "at most " + std::to_string( max_controls ) + " control statements are supported",
                           static_cast<double>( buttons.size() + switches.size() ) );
  std::vector<std::uint32_t> pattern( s.size(), 0 );
  for ( std::size_t i = 0; i < buttons.size(); ++i )
  {
    const auto p = pushed( s, buttons[i] );
    for ( std::size_t w = 0; w < s.size(); ++w )
      if ( p.test( w ) )
        pattern[w] |= 1u << i;
  }
  for ( std::size_t j = 0; j < switches.size(); ++j )
  {
    const auto t = truth_set( s.model(), switches[j] );
    for ( std::size_t w = 0; w < s.size(); ++w )
      if ( t.test( w ) )
        pattern[w] |= 1u << ( buttons.size() + j );
  }
  return pattern;
}

} // namespace

bool certify_independent_controls( const PotentialistSystem& s, const std::vector<Formula>& buttons,
                                   const std::vector<Formula>& switches, const std::optional<WorldSet>& scope )
{
  const auto where = scope_or_interior( s, scope );
  const auto patterns = control_patterns( s, buttons, switches );
  const auto k = buttons.size();
  const auto total = std::size_t{ 1 } << ( k + switches.size() );
  const std::uint32_t button_mask = ( 1u << k ) - 1u;

  std::vector<char> reached( total );
  for ( auto w = where.find_first(); w != WorldSet::npos; w = where.find_next( w ) )
  {
    std::fill( reached.begin(), reached.end(), 0 );
    const auto& succ = s.order().successors( w );
    for ( auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next( v ) )
      reached[patterns[v]] = 1;
    const auto pushed_here = patterns[w] & button_mask;
    for ( std::uint32_t code = 0; code < total; ++code )
      if ( ( code & pushed_here ) == pushed_here && !reached[code] )
        return false;
  }
  return true;
}

bool certify_ratchet( const PotentialistSystem& s, const std::vector<Formula>& elements, RatchetForm form,
                      const std::optional<WorldSet>& scope )
{
  const auto where = scope_or_interior( s, scope );
  std::vector<WorldSet> push;
  for ( const auto& e : elements )
  {
    if ( !certify_button( s, e, where ) )
      return false;
    push.push_back( pushed( s, e ) );
  }
  for ( std::size_t i = 1; i < push.size(); ++i )
    if ( !push[i].is_subset_of( push[i - 1] ) )
      return false;
  if ( form == RatchetForm::long_ratchet )
  {
    auto all = where;
    for ( const auto& p : push )
      all &= p;
    if ( all.any() )
      return false;
  }
  return true;
}

/* p-morphisms */

std::optional<std::vector<std::size_t>> find_p_morphism( const Frame& source, std::size_t source_root,
                                                         const Frame& target, std::size_t target_root,
                                                         std::size_t step_budget )
{
  const auto ns = source.size();
  const auto& allowed = target.successors( target_root );
  source.successors( source_root ); // range check

  // Assign worlds with small up-sets first so back conditions are checked early.
  std::vector<std::size_t> order( ns );
  std::iota( order.begin(), order.end(), 0 );
  std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) {
    return source.successors( a ).count() < source.successors( b ).count();
  } );

  constexpr auto unassigned = static_cast<std::size_t>( -1 );
  std::vector<std::size_t> image( ns, unassigned );
  std::vector<std::size_t> open( ns );
  for ( std::size_t u = 0; u < ns; ++u )
    open[u] = source.successors( u ).count();
  std::size_t steps = 0;

  auto back_holds = [&]( std::size_t u ) {
    WorldSet hit( target.size() );
    const auto& succ = source.successors( u );
    for ( auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next( v ) )
      hit.set( image[v] );
    return target.successors( image[u] ).is_subset_of( hit );
  };

  std::function<bool( std::size_t )> assign = [&]( std::size_t pos ) -> bool {
    if ( pos == ns )
      return true;
    if ( ++steps > step_budget )
      return false;
    const auto u = order[pos];
    for ( auto t = allowed.find_first(); t != WorldSet::npos; t = allowed.find_next( t ) )
    {
      if ( u == source_root && t != target_root )
        continue;
      bool ok = true;
      for ( std::size_t v = 0; v < ns && ok; ++v )
      {
        if ( image[v] == unassigned )
          continue;
        if ( source.successors( u ).test( v ) && !target.successors( t ).test( image[v] ) )
          ok = false;
        if ( source.successors( v ).test( u ) && !target.successors( image[v] ).test( t ) )
          ok = false;
      }
      if ( !ok || ( source.successors( u ).test( u ) && !target.successors( t ).test( t ) ) )
        continue;

      image[u] = t;
      std::vector<std::size_t> closed;
      const auto preds = source.predecessors( u );
      for ( auto x = preds.find_first(); x != WorldSet::npos; x = preds.find_next( x ) )
        if ( --open[x] == 0 )
          closed.push_back( x );
      for ( auto x : closed )
        if ( image[x] != unassigned && !back_holds( x ) )
          ok = false;
      // a world whose successors were all assigned before it is checked now
      if ( ok && open[u] == 0 && !back_holds( u ) )
        ok = false;
      if ( ok && assign( pos + 1 ) )
        return true;
      for ( auto x = preds.find_first(); x != WorldSet::npos; x = preds.find_next( x ) )
        ++open[x];
      image[u] = unassigned;
      if ( steps > step_budget )
        return false;
    }
    return false;
  };

  if ( assign( 0 ) )
    return image;
  return std::nullopt;
}

/* refutations */

namespace {

Formula conjoin( const std::vector<Formula>& parts )
{
  if ( parts.empty() )
    return Formula::top();
  auto out = parts.front();
  for ( std::size_t i = 1; i < parts.size(); ++i )
    out = out & parts[i];
  return out;
}

Formula disjoin( const std::vector<Formula>& parts )
{
  if ( parts.empty() )
    return Formula::bottom();
  auto out = parts.front();
  for ( std::size_t i = 1; i < parts.size(); ++i )
    out = out | parts[i];
  return out;
}

/// Substitution sending each atom of the witness to the disjunction of the descriptions of the
/// source points mapped onto worlds where the atom holds.
Substitution transfer( const Refutation& witness, const std::vector<std::size_t>& image,
                       const std::vector<Formula>& descriptions )
{
  Substitution subst;
  for ( const auto& [name, truth] : witness.model.valuation() )
  {
    std::vector<Formula> parts;
    for ( std::size_t u = 0; u < image.size(); ++u )
      if ( truth.test( image[u] ) )
        parts.push_back( descriptions[u] );
    subst.emplace( name, disjoin( parts ) );
  }
  return subst;
}

inline constexpr std::size_t max_start_worlds = 64;

} // namespace

RefutationOutcome refute_via_controls( const PotentialistSystem& s, const Formula& f,
                                       const std::vector<Formula>& buttons, const std::vector<Formula>& switches,
                                       const std::optional<WorldSet>& scope, const RefuteOptions& options )
{
  const auto where = scope_or_interior( s, scope );
  if ( !certify_independent_controls( s, buttons, switches, where ) )
    throw error( "buttons and switches are not independent on the given worlds" );

  const auto decision = decide( f, Theory::S4_2, options.frame_bound, options.valuation_budget );
  if ( decision.valid_up_to_bound() )
    return { std::nullopt, "valid on directed preorders with at most " + std::to_string( options.frame_bound ) +
                               " worlds" };
  const auto& witness = *decision.refutation;

  const auto patterns = control_patterns( s, buttons, switches );
  const auto k = buttons.size();
  const auto m = switches.size();
  std::vector<Formula> pushed_formula, unpushed_formula;
  for ( const auto& b : buttons )
  {
    pushed_formula.push_back( box( b ) );
    unpushed_formula.push_back( ~box( b ) );
  }

  std::set<std::uint32_t> failed_starts;
  std::size_t tries = 0;
  for ( auto w = where.find_first(); w != WorldSet::npos && tries < max_start_worlds; w = where.find_next( w ) )
  {
    if ( !failed_starts.insert( patterns[w] ).second )
      continue;
    ++tries;
    std::vector<std::size_t> free_buttons;
    for ( std::size_t i = 0; i < k; ++i )
      if ( !( ( patterns[w] >> i ) & 1u ) )
        free_buttons.push_back( i );

    bool mapped = false;
    for ( std::size_t total = 0; total <= free_buttons.size() + m && !mapped; ++total )
      for ( std::size_t kb = 0; kb <= total && !mapped; ++kb )
      {
        const auto ms = total - kb;
        if ( kb > free_buttons.size() || ms > m )
          continue;
        // control frame: point (A, sw) with A over the first kb free buttons and sw over the
        // first ms switches; (A, sw) R (A', sw') iff A is a subset of A'
        const std::size_t points = std::size_t{ 1 } << ( kb + ms );
        Frame control( points );
        for ( std::size_t x = 0; x < points; ++x )
          for ( std::size_t y = 0; y < points; ++y )
          {
            const auto ax = x & ( ( std::size_t{ 1 } << kb ) - 1 );
            const auto ay = y & ( ( std::size_t{ 1 } << kb ) - 1 );
            if ( ( ax & ay ) == ax )
              control.add_edge( x, y );
          }
        std::size_t root_switches = 0;
        for ( std::size_t j = 0; j < ms; ++j )
          if ( ( patterns[w] >> ( k + j ) ) & 1u )
            root_switches |= std::size_t{ 1 } << j;
        const auto root = root_switches << kb;

        const auto image =
            find_p_morphism( control, root, witness.model.frame(), witness.world, options.search_budget );
        if ( !image )
          continue;
        mapped = true;

        std::vector<Formula> descriptions;
        for ( std::size_t x = 0; x < points; ++x )
        {
          std::vector<Formula> parts;
          for ( std::size_t i = 0; i < kb; ++i )
            parts.push_back( ( ( x >> i ) & 1u ) ? pushed_formula[free_buttons[i]] : unpushed_formula[free_buttons[i]] );
          for ( std::size_t j = 0; j < ms; ++j )
            parts.push_back( ( ( x >> ( kb + j ) ) & 1u ) ? switches[j] : ~switches[j] );
          descriptions.push_back( conjoin( parts ) );
        }
        auto subst = transfer( witness, *image, descriptions );
        if ( !evaluate( s, w, f, subst ) )
          return { SystemRefutation{ std::move( subst ), w, witness }, {} };
        // verification failed at this world (typically a frontier world breaks the back
        // condition); try the next start world rather than larger control frames
      }
  }
  return { std::nullopt, "no start world yields a verified transfer of the S4.2 countermodel with " +
                             std::to_string( k ) + " buttons and " + std::to_string( m ) + " switches" };
}

RefutationOutcome refute_via_ratchet( const PotentialistSystem& s, const Formula& f,
                                      const std::vector<Formula>& ratchet, const Ordinal& nominal_length,
                                      const std::optional<WorldSet>& scope, const RefuteOptions& options )
{
  const auto where = scope_or_interior( s, scope );
  if ( !certify_ratchet( s, ratchet, RatchetForm::finite, where ) )
    throw error( "the given statements do not certify as a ratchet" );
  const auto w2 = Ordinal::omega_power( 2 );
  if ( !closed_under_addition_below( nominal_length, w2 ) )
    throw error( "ratchet length " + to_string( nominal_length ) + " is not closed under addition below w^2" );

  const auto decision = decide( f, Theory::S4_3, options.frame_bound, options.valuation_budget );
  if ( decision.valid_up_to_bound() )
    return { std::nullopt, "valid on linear preorders with at most " + std::to_string( options.frame_bound ) +
                               " worlds" };

  // The position chain has no clusters, so also look for a countermodel on a finite chain.
  std::vector<Refutation> witnesses{ *decision.refutation };
  for_each_frame( options.frame_bound, FrameClass::linear_preorder, [&]( const Frame& fr ) {
    if ( !frame_properties( fr ).antisymmetric )
      return true;
    if ( auto cm = find_countermodel( fr, f, options.valuation_budget ) )
    {
      witnesses.push_back( { std::move( cm->model ), cm->world } );
      return false;
    }
    return true;
  } );

  const auto len = ratchet.size();
  std::vector<WorldSet> push;
  for ( const auto& r : ratchet )
    push.push_back( pushed( s, r ) );
  std::vector<std::size_t> position( s.size(), 0 );
  for ( std::size_t v = 0; v < s.size(); ++v )
    while ( position[v] < len && push[position[v]].test( v ) )
      ++position[v];

  auto describe = [&]( std::size_t p ) {
    std::vector<Formula> parts;
    if ( p > 0 )
      parts.push_back( box( ratchet[p - 1] ) );
    if ( p < len )
      parts.push_back( ~box( ratchet[p] ) );
    return conjoin( parts );
  };

  std::set<std::size_t> tried_positions;
  for ( auto w = where.find_first(); w != WorldSet::npos; w = where.find_next( w ) )
  {
    if ( !tried_positions.insert( position[w] ).second || tried_positions.size() > max_start_worlds )
      continue;
    std::set<std::size_t> above;
    const auto& succ = s.order().successors( w );
    for ( auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next( v ) )
      above.insert( position[v] );
    const std::vector<std::size_t> chain( above.begin(), above.end() );
    Frame positions( chain.size() );
    for ( std::size_t i = 0; i < chain.size(); ++i )
      for ( std::size_t j = i; j < chain.size(); ++j )
        positions.add_edge( i, j );
    std::vector<Formula> descriptions;
    for ( auto p : chain )
      descriptions.push_back( describe( p ) );

    for ( const auto& witness : witnesses )
    {
      const auto image = find_p_morphism( positions, 0, witness.model.frame(), witness.world, options.search_budget );
      if ( !image )
        continue;
      auto subst = transfer( witness, *image, descriptions );
      if ( !evaluate( s, w, f, subst ) )
        return { SystemRefutation{ std::move( subst ), w, witness }, {} };
    }
  }
  return { std::nullopt, "no S4.3 countermodel up to bound is an image of the ratchet positions with a verified "
                         "transfer" };
}

/* comparison */

SystemComparison compare_systems( const PotentialistSystem& a, const PotentialistSystem& b )
{
  auto inside = []( const World& small, const World& big ) {
    return std::includes( big.content.begin(), big.content.end(), small.content.begin(), small.content.end() );
  };
  SystemComparison out;
  out.covers = std::all_of( b.worlds().begin(), b.worlds().end(), [&]( const World& wb ) {
    return std::any_of( a.worlds().begin(), a.worlds().end(), [&]( const World& wa ) { return inside( wb, wa ); } );
  } );
  const bool a_in_b = std::all_of( a.worlds().begin(), a.worlds().end(), [&]( const World& wa ) {
    return std::any_of( b.worlds().begin(), b.worlds().end(),
                        [&]( const World& wb ) { return wa.content == wb.content; } );
  } );
  out.refines = a_in_b && out.covers;
  return out;
}

} // namespace potkit
