#include <potkit/cli.hpp>

#include <potkit/error.hpp>
#include <potkit/finstruct.hpp>
#include <potkit/formula.hpp>
#include <potkit/frame_enum.hpp>
#include <potkit/kripke.hpp>
#include <potkit/logics.hpp>
#include <potkit/ordinal.hpp>
#include <potkit/potentialist.hpp>
#include <potkit/serialize.hpp>
#include <potkit/systems.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace potkit::cli {

namespace {

struct options
{
  bool json_out = false;
  bool dot = false;
  bool expect_valid = false;

  std::string formula;
  std::string frame_file;
  std::string system_file = "-";
  std::string other_file;
  std::string structure_file = "-";

  std::string theory = "S4";
  std::size_t bound = 3;
  std::size_t size = 3;
  std::string frame_class = "preorder";
  bool exact = false;

  std::string name;
  std::string lambda = "w*2";
  std::string cut = "w+6";
  std::uint64_t cap = 5;
  std::size_t coordinates = 2;
  std::uint64_t height = 4;
  bool amalgamate = false;

  std::vector<std::string> schemes{ "K", "Dual", "T", "4", ".2", ".3" };
  std::size_t depth = 1;
  std::size_t max_pool = 5000;
  bool interior = false;
  bool all_worlds = false;

  std::vector<std::string> buttons;
  std::vector<std::string> switches;
  std::vector<std::string> ratchet;
  bool long_form = false;
  std::string length;

  std::string expr;
  std::vector<std::string> add;
  std::vector<std::string> mul;
  std::string closed_below;

  std::vector<std::size_t> params;
  std::vector<std::string> subsets;
};

json read_json( const std::string& path, std::istream& in )
{
  try
  {
    if ( path == "-" )
      return json::parse( in );
    std::ifstream file( path );
    if ( !file )
      throw error( "cannot open '" + path + "'" );
    return json::parse( file );
  }
  catch ( const json::parse_error& e )
  {
    throw invalid_structure( "'" + path + "' is not valid JSON: " + e.what() );
  }
}

const char* yes_no( bool b ) { return b ? "yes" : "no"; }

std::string describe( const Substitution& subst )
{
  std::string out;
  for ( const auto& [name, f] : subst )
  {
    if ( !out.empty() )
      out += ", ";
    out += name + " ↦ " + to_string( f );
  }
  return out;
}

std::vector<Formula> parse_all( const std::vector<std::string>& texts )
{
  std::vector<Formula> out;
  for ( const auto& t : texts )
    out.push_back( parse( t ) );
  return out;
}

Subset parse_subset( const std::string& text, std::size_t n )
{
  Subset out = 0;
  std::string digits;
  auto flush = [&] {
    if ( digits.empty() )
      return;
    const auto x = std::stoul( digits );
    if ( x >= n )
      throw world_range_error( "element " + digits + " outside the domain" );
    out |= Subset{ 1 } << x;
    digits.clear();
  };
  for ( char c : text )
  {
    if ( c >= '0' && c <= '9' )
      digits += c;
    else if ( c == ',' || c == ' ' || c == '{' || c == '}' )
      flush();
    else
      throw parse_error( "unexpected character in subset '" + text + "'", 0 );
  }
  flush();
  return out;
}

void emit( std::ostream& out, const json& j ) { out << j.dump( 2 ) << "\n"; }

/* commands */

int cmd_parse( const options& o, std::ostream& out )
{
  const auto f = parse( o.formula );
  if ( o.json_out )
    emit( out, { { "formula", to_string( f ) },
                 { "modal_depth", modal_depth( f ) },
                 { "size", size( f ) },
                 { "atoms", atoms( f ) } } );
  else
    out << to_string( f ) << "\n";
  return exit_ok;
}

int cmd_check( const options& o, std::istream& in, std::ostream& out )
{
  const auto f = parse( o.formula );
  const auto doc = read_json( o.frame_file, in );
  const bool model_mode = doc.contains( "valuation" );
  WorldSet holds;
  std::size_t n = 0;
  if ( model_mode )
  {
    const auto m = model_from_json( doc );
    holds = truth_set( m, f );
    n = m.size();
  }
  else
  {
    const auto fr = frame_from_json( doc );
    holds = frame_truth_set( fr, f );
    n = fr.size();
  }

  if ( o.json_out )
  {
    json list = json::array();
    for ( std::size_t w = 0; w < n; ++w )
      list.push_back( holds.test( w ) );
    emit( out, { { "formula", to_string( f ) }, { "mode", model_mode ? "model" : "frame" }, { "holds", list } } );
  }
  else
  {
    out << "formula " << to_string( f ) << " (" << ( model_mode ? "this valuation" : "every valuation" ) << ")\n";
    out << "world  holds\n";
    for ( std::size_t w = 0; w < n; ++w )
      out << std::left << std::setw( 7 ) << w << yes_no( holds.test( w ) ) << "\n";
  }
  return o.expect_valid && !holds.all() ? exit_refuted : exit_ok;
}

int cmd_frame_props( const options& o, std::istream& in, std::ostream& out )
{
  const auto fr = frame_from_json( read_json( o.frame_file, in ) );
  if ( o.dot )
  {
    out << to_dot( fr );
    return exit_ok;
  }
  const auto p = frame_properties( fr );
  const std::vector<std::pair<const char*, bool>> rows{
      { "reflexive", p.reflexive },       { "transitive", p.transitive },
      { "directed", p.directed },         { "pairwise_directed", p.pairwise_directed },
      { "linear", p.linear },             { "forward_linear", p.forward_linear },
      { "antisymmetric", p.antisymmetric } };
  if ( o.json_out )
  {
    json j = { { "worlds", fr.size() } };
    for ( const auto& [name, value] : rows )
      j[name] = value;
    emit( out, j );
  }
  else
  {
    out << "worlds: " << fr.size() << "\n";
    for ( const auto& [name, value] : rows )
      out << name << ": " << yes_no( value ) << "\n";
  }
  return exit_ok;
}

int cmd_frame_enumerate( const options& o, std::ostream& out )
{
  const auto cls = frame_class_from_name( o.frame_class );
  if ( !cls )
    throw error( "unknown frame class '" + o.frame_class + "'" );
  const auto frames = o.exact ? enumerate_frames_exact( o.size, *cls ) : enumerate_frames( o.size, *cls );
  if ( o.dot )
  {
    for ( const auto& fr : frames )
      out << to_dot( fr );
    return exit_ok;
  }
  if ( o.json_out )
  {
    json list = json::array();
    for ( const auto& fr : frames )
      list.push_back( to_json( fr ) );
    emit( out, { { "class", frame_class_name( *cls ) },
                 { "size", o.size },
                 { "exact", o.exact },
                 { "count", frames.size() },
                 { "frames", list } } );
    return exit_ok;
  }
  out << frames.size() << " " << frame_class_name( *cls ) << " frames with " << ( o.exact ? "exactly " : "at most " )
      << o.size << " worlds\n";
  for ( const auto& fr : frames )
    out << to_json( fr ).dump() << "\n";
  return exit_ok;
}

int cmd_decide( const options& o, std::ostream& out )
{
  const auto f = parse( o.formula );
  const auto theory = theory_from_name( o.theory );
  if ( !theory )
    throw error( "unknown theory '" + o.theory + "'" );
  const auto result = decide( f, *theory, o.bound );
  const bool refuted = !result.valid_up_to_bound();
  if ( o.json_out )
  {
    json j = { { "formula", to_string( f ) },
               { "theory", theory_name( *theory ) },
               { "bound", o.bound },
               { "verdict", refuted ? "refuted" : "valid-up-to-bound" } };
    if ( refuted )
    {
      j["witness"] = to_json( *result.refutation );
      j["verified"] = verify_refutation( f, *result.refutation );
    }
    emit( out, j );
  }
  else if ( refuted )
  {
    const auto& r = *result.refutation;
    out << "refuted in " << theory_name( *theory ) << ": countermodel on " << r.model.size()
        << " worlds, false at world " << r.world << " (verified: " << yes_no( verify_refutation( f, r ) ) << ")\n";
    out << to_json( r ).dump() << "\n";
  }
  else
    out << "valid up to bound " << o.bound << " in " << theory_name( *theory ) << "\n";
  return o.expect_valid && refuted ? exit_refuted : exit_ok;
}

PotentialistSystem build( const options& o, std::istream& in )
{
  PotentialistSystem s;
  if ( o.name == "smallest-truth" )
  {
    TruncationSpec trunc;
    trunc.ordinal_cut = parse_ordinal( o.cut );
    trunc.height_cap = o.cap;
    s = smallest_truth_system( parse_ordinal( o.lambda ), trunc );
  }
  else if ( o.name == "cohen" )
    s = cohen_truth_system( o.coordinates, o.height );
  else if ( o.name == "killing-truth" )
    s = killing_truth_system();
  else if ( o.name == "mostowski-fork" )
    s = mostowski_fork();
  else if ( o.name == "amalgamated-fork" )
    s = amalgamated_variant( mostowski_fork() );
  else if ( o.name == "top-down" )
    s = top_down_system( structure_from_json( read_json( o.structure_file, in ) ) );
  else
    throw error( "unknown system '" + o.name + "'" );
  if ( o.amalgamate )
    s = amalgamated_variant( s );
  return s;
}

int cmd_system_build( const options& o, std::istream& in, std::ostream& out )
{
  const auto s = build( o, in );
  if ( o.dot )
    out << to_dot( s );
  else
    emit( out, to_json( s ) );
  return exit_ok;
}

int cmd_system_report( const options& o, std::istream& in, std::ostream& out )
{
  const auto s = system_from_json( read_json( o.system_file, in ) );
  std::vector<AxiomScheme> schemes;
  for ( const auto& name : o.schemes )
  {
    const auto scheme = scheme_from_name( name );
    if ( !scheme )
      throw error( "unknown scheme '" + name + "'" );
    schemes.push_back( *scheme );
  }
  PoolSpec pool;
  pool.depth = o.depth;
  pool.max_size = o.max_pool;
  const auto report = scheme_report( s, schemes, pool, o.interior ? WorldScope::interior : WorldScope::all_worlds );

  if ( o.json_out )
  {
    auto j = to_json( report );
    for ( auto& r : j["results"] )
      if ( !r["failure"].is_null() )
        r["failure"]["label"] = s.world( r["failure"]["world"].get<std::size_t>() ).label;
    emit( out, j );
    return exit_ok;
  }
  out << "system " << s.name() << ": " << s.size() << " worlds, pool of " << report.pool_size << " formulas (depth "
      << o.depth << ", " << ( o.interior ? "interior worlds" : "all worlds" ) << ")\n";
  bool failed = false;
  for ( const auto& r : report.results )
  {
    out << scheme_name( r.scheme );
    if ( r.failure )
    {
      failed = true;
      out << " FAILS at " << s.world( r.failure->world ).label << " (" << describe( r.failure->substitution ) << ")";
      if ( !r.failure->verified )
        out << " [not confirmed by direct evaluation]";
      out << "\n";
    }
    else
      out << " no failure in " << r.instances_checked << " instances\n";
  }
  return o.expect_valid && failed ? exit_refuted : exit_ok;
}

std::optional<WorldSet> scope_of( const options& o, const PotentialistSystem& s )
{
  if ( o.all_worlds )
    return WorldSet( s.size() ).set();
  return std::nullopt;
}

int cmd_system_certify( const options& o, std::istream& in, std::ostream& out )
{
  const auto s = system_from_json( read_json( o.system_file, in ) );
  const auto buttons = parse_all( o.buttons );
  const auto switches = parse_all( o.switches );
  const auto ratchet = parse_all( o.ratchet );
  const auto scope = scope_of( o, s );

  json j = { { "scope", o.all_worlds ? "all" : "interior" } };
  json items = json::array();
  for ( const auto& b : buttons )
    items.push_back( { { "kind", "button" }, { "statement", to_string( b ) }, { "certified", certify_button( s, b, scope ) } } );
  for ( const auto& sw : switches )
    items.push_back(
        { { "kind", "switch" }, { "statement", to_string( sw ) }, { "certified", certify_switch( s, sw, scope ) } } );
  j["statements"] = items;
  if ( !buttons.empty() || !switches.empty() )
    j["independent"] = certify_independent_controls( s, buttons, switches, scope );
  if ( !ratchet.empty() )
  {
    const auto form = o.long_form ? RatchetForm::long_ratchet : RatchetForm::finite;
    j["ratchet"] = { { "form", o.long_form ? "long" : "finite" },
                     { "length", ratchet.size() },
                     { "certified", certify_ratchet( s, ratchet, form, scope ) } };
  }

  if ( o.json_out )
  {
    emit( out, j );
    return exit_ok;
  }
  for ( const auto& item : j["statements"] )
    out << item["kind"].get<std::string>() << " " << item["statement"].get<std::string>() << ": "
        << ( item["certified"].get<bool>() ? "certified" : "not certified" ) << "\n";
  if ( j.contains( "independent" ) )
    out << "independent: " << yes_no( j["independent"].get<bool>() ) << "\n";
  if ( j.contains( "ratchet" ) )
    out << j["ratchet"]["form"].get<std::string>() << " ratchet of length " << ratchet.size() << ": "
        << ( j["ratchet"]["certified"].get<bool>() ? "certified" : "not certified" ) << "\n";
  return exit_ok;
}

int cmd_system_refute( const options& o, std::istream& in, std::ostream& out )
{
  const auto s = system_from_json( read_json( o.system_file, in ) );
  const auto f = parse( o.formula );
  const auto scope = scope_of( o, s );
  RefuteOptions opts;
  opts.frame_bound = o.bound;

  RefutationOutcome result;
  if ( !o.ratchet.empty() )
  {
    if ( o.length.empty() )
      throw error( "--ratchet needs --length" );
    result = refute_via_ratchet( s, f, parse_all( o.ratchet ), parse_ordinal( o.length ), scope, opts );
  }
  else
    result = refute_via_controls( s, f, parse_all( o.buttons ), parse_all( o.switches ), scope, opts );

  if ( o.json_out )
  {
    json j = { { "formula", to_string( f ) }, { "refuted", result.refutation.has_value() } };
    if ( result.refutation )
    {
      const auto& r = *result.refutation;
      json subst = json::object();
      for ( const auto& [name, g] : r.substitution )
        subst[name] = to_string( g );
      j["world"] = r.world;
      j["label"] = s.world( r.world ).label;
      j["substitution"] = subst;
      j["witness"] = to_json( r.witness );
      j["verified"] = !evaluate( s, r.world, f, r.substitution );
    }
    else
      j["reason"] = result.reason;
    emit( out, j );
  }
  else if ( result.refutation )
  {
    const auto& r = *result.refutation;
    out << "refuted at " << s.world( r.world ).label << "\n";
    for ( const auto& [name, g] : r.substitution )
      out << "  " << name << " ↦ " << to_string( g ) << "\n";
    out << "verified: " << yes_no( !evaluate( s, r.world, f, r.substitution ) ) << "\n";
  }
  else
    out << "no refutation: " << result.reason << "\n";
  return o.expect_valid && result.refutation ? exit_refuted : exit_ok;
}

int cmd_system_compare( const options& o, std::istream& in, std::ostream& out )
{
  if ( o.system_file == "-" && o.other_file == "-" )
    throw error( "at most one system can be read from standard input" );
  const auto a = system_from_json( read_json( o.system_file, in ) );
  const auto b = system_from_json( read_json( o.other_file, in ) );
  const auto c = compare_systems( a, b );
  if ( o.json_out )
    emit( out, { { "covers", c.covers }, { "refines", c.refines } } );
  else
    out << "first covers second: " << yes_no( c.covers ) << "\nsecond refines first: " << yes_no( c.refines ) << "\n";
  return exit_ok;
}

int cmd_ordinal( const options& o, std::ostream& out )
{
  auto a = parse_ordinal( o.expr );
  for ( const auto& x : o.add )
    a = a + parse_ordinal( x );
  for ( const auto& x : o.mul )
    a = a * parse_ordinal( x );
  const bool self_closed = closed_under_addition_below( a, a );
  json j = { { "ordinal", to_string( a ) },
             { "identifier", to_identifier( a ) },
             { "kind", a.is_zero() ? "zero" : a.is_limit() ? "limit" : "successor" },
             { "closed_under_own_addition", self_closed },
             { "ratchet_length", to_string( ratchet_length( a ) ) } };
  if ( !o.closed_below.empty() )
    j["closed_below"] = { { "gamma", to_string( parse_ordinal( o.closed_below ) ) },
                          { "closed", closed_under_addition_below( a, parse_ordinal( o.closed_below ) ) } };
  if ( o.json_out )
  {
    emit( out, j );
    return exit_ok;
  }
  out << to_string( a ) << " (" << j["kind"].get<std::string>() << ")\n";
  out << "closed under its own addition: " << yes_no( self_closed ) << "\n";
  out << "ratchet length: " << j["ratchet_length"].get<std::string>() << "\n";
  if ( j.contains( "closed_below" ) )
    out << "closed under addition below " << j["closed_below"]["gamma"].get<std::string>() << ": "
        << yes_no( j["closed_below"]["closed"].get<bool>() ) << "\n";
  return exit_ok;
}

void print_family( std::ostream& out, const ClassFamily& fam, std::size_t n )
{
  out << fam.members.size() << " subsets:";
  for ( auto a : fam.members )
    out << " " << subset_to_string( a, n );
  out << "\n";
}

json family_json( const ClassFamily& fam, std::size_t n )
{
  json list = json::array();
  for ( auto a : fam.members )
    list.push_back( subset_to_string( a, n ) );
  return { { "count", fam.members.size() }, { "closed", fam.closed }, { "subsets", list } };
}

int cmd_finstruct( const std::string& action, const options& o, std::istream& in, std::ostream& out )
{
  const auto m = structure_from_json( read_json( o.structure_file, in ) );
  const auto n = m.size();
  std::vector<Subset> sets;
  for ( const auto& t : o.subsets )
    sets.push_back( parse_subset( t, n ) );

  if ( action == "automorphisms" )
  {
    const auto group = automorphisms( m );
    if ( o.json_out )
      emit( out, { { "count", group.size() }, { "automorphisms", group } } );
    else
    {
      out << group.size() << " automorphisms\n";
      for ( const auto& g : group )
      {
        for ( std::size_t i = 0; i < g.size(); ++i )
          out << ( i ? " " : "" ) << g[i];
        out << "\n";
      }
    }
  }
  else if ( action == "definable" || action == "closure" )
  {
    ClassFamily fam;
    if ( action == "definable" )
      fam = definable_subsets( m, o.params, sets );
    else
    {
      ClassFamily seed;
      seed.members = sets;
      seed.normalize();
      fam = def_closure( m, seed );
    }
    if ( o.json_out )
      emit( out, family_json( fam, n ) );
    else
      print_family( out, fam, n );
  }
  else
  {
    const auto s = top_down_system( m, sets );
    if ( o.dot )
      out << to_dot( s );
    else
      emit( out, to_json( s ) );
  }
  return exit_ok;
}

} // namespace

int run( const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err )
{
  options o;
  CLI::App app{ "Potentialist system toolkit: Kripke frames, bounded modal decision, control statements", "potkit" };
  app.require_subcommand( 1 );
  app.failure_message( CLI::FailureMessage::help );
  app.add_flag( "--json", o.json_out, "Machine-readable JSON output" );
  app.add_flag( "--dot", o.dot, "Graphviz output for frames and systems" );
  app.add_flag( "--expect-valid", o.expect_valid, "Exit with status 1 when a refutation or failure is found" );
  app.fallthrough();

  auto* parse_cmd = app.add_subcommand( "parse", "Parse a formula and print its canonical form" );
  parse_cmd->add_option( "--formula,-f", o.formula, "Formula text" )->required();

  auto* check_cmd = app.add_subcommand( "check", "Per-world truth of a formula in a frame or model" );
  check_cmd->add_option( "--formula,-f", o.formula, "Formula text" )->required();
  check_cmd->add_option( "--frame", o.frame_file, "Frame or model JSON ('-' for stdin)" )->required();

  auto* frame_cmd = app.add_subcommand( "frame", "Frame properties and enumeration" );
  frame_cmd->require_subcommand( 1 );
  frame_cmd->fallthrough();
  auto* props_cmd = frame_cmd->add_subcommand( "props", "Frame properties" );
  props_cmd->add_option( "--frame", o.frame_file, "Frame JSON ('-' for stdin)" )->required();
  auto* enum_cmd = frame_cmd->add_subcommand( "enumerate", "Frames of a class up to isomorphism" );
  enum_cmd->add_option( "--size,-n", o.size, "Largest number of worlds" )->required();
  enum_cmd->add_option( "--class", o.frame_class, "preorder, directed-preorder or linear-preorder" );
  enum_cmd->add_flag( "--exact", o.exact, "Only frames with exactly --size worlds" );

  auto* decide_cmd = app.add_subcommand( "decide", "Bounded decision for S4, S4.2, S4.3" );
  decide_cmd->add_option( "--formula,-f", o.formula, "Formula text" )->required();
  decide_cmd->add_option( "--theory", o.theory, "S4, S4.2 or S4.3" );
  decide_cmd->add_option( "--bound", o.bound, "Largest frame size searched" );

  auto* system_cmd = app.add_subcommand( "system", "Potentialist systems" );
  system_cmd->require_subcommand( 1 );
  system_cmd->fallthrough();
  auto* build_cmd = system_cmd->add_subcommand( "build", "Construct a named system and print its JSON" );
  build_cmd->add_option( "name", o.name, "smallest-truth, cohen, killing-truth, mostowski-fork, amalgamated-fork, top-down" )
      ->required();
  build_cmd->add_option( "--lambda", o.lambda, "Ordinal for smallest-truth" );
  build_cmd->add_option( "--cut", o.cut, "Ordinal cut for smallest-truth" );
  build_cmd->add_option( "--cap", o.cap, "Largest coefficient sampled for smallest-truth" );
  build_cmd->add_option( "--coordinates", o.coordinates, "Coordinates of the cohen grid" );
  build_cmd->add_option( "--height", o.height, "Height of the cohen grid" );
  build_cmd->add_option( "--structure", o.structure_file, "Structure JSON for top-down" );
  build_cmd->add_flag( "--amalgamate", o.amalgamate, "Close the result under joins" );

  auto add_system_input = [&]( CLI::App* cmd ) {
    cmd->add_option( "--system,-s", o.system_file, "System JSON ('-' for stdin, the default)" );
  };
  auto add_controls = [&]( CLI::App* cmd ) {
    cmd->add_option( "--button", o.buttons, "Button statement (repeatable)" );
    cmd->add_option( "--switch", o.switches, "Switch statement (repeatable)" );
    cmd->add_option( "--ratchet", o.ratchet, "Ratchet element, in order (repeatable)" );
    cmd->add_flag( "--all-worlds", o.all_worlds, "Certify on frontier worlds too" );
  };

  auto* report_cmd = system_cmd->add_subcommand( "report", "Search a substitution pool for scheme failures" );
  add_system_input( report_cmd );
  report_cmd->add_option( "--schemes", o.schemes, "Schemes among K, Dual, T, 4, .2, .3" )->delimiter( ',' );
  report_cmd->add_option( "--depth", o.depth, "Nesting depth of the pool" );
  report_cmd->add_option( "--max-pool", o.max_pool, "Largest pool accepted" );
  report_cmd->add_flag( "--interior", o.interior, "Only look for failures at interior worlds" );

  auto* certify_cmd = system_cmd->add_subcommand( "certify", "Certify buttons, switches and ratchets" );
  add_system_input( certify_cmd );
  add_controls( certify_cmd );
  certify_cmd->add_flag( "--long", o.long_form, "Require the ratchet to be long" );

  auto* refute_cmd = system_cmd->add_subcommand( "refute", "Transfer a finite countermodel through controls" );
  add_system_input( refute_cmd );
  add_controls( refute_cmd );
  refute_cmd->add_option( "--formula,-f", o.formula, "Formula text" )->required();
  refute_cmd->add_option( "--length", o.length, "Nominal ratchet length (ordinal)" );
  refute_cmd->add_option( "--bound", o.bound, "Largest countermodel frame searched" )->default_val( 4 );

  auto* compare_cmd = system_cmd->add_subcommand( "compare", "Cover and refinement between two systems" );
  add_system_input( compare_cmd );
  compare_cmd->add_option( "--other", o.other_file, "Second system JSON" )->required();

  auto* ordinal_cmd = app.add_subcommand( "ordinal", "Ordinal arithmetic below w^w" );
  ordinal_cmd->add_option( "expr", o.expr, "Ordinal such as 'w^2*3 + w + 5'" )->required();
  ordinal_cmd->add_option( "--add", o.add, "Add on the right (repeatable)" );
  ordinal_cmd->add_option( "--mul", o.mul, "Multiply on the right (repeatable)" );
  ordinal_cmd->add_option( "--closed-below", o.closed_below, "Test closure under addition below this ordinal" );

  auto* fin_cmd = app.add_subcommand( "finstruct", "Definability over finite structures (finite analogue)" );
  fin_cmd->require_subcommand( 1 );
  fin_cmd->fallthrough();
  std::string fin_action;
  for ( const char* action : { "automorphisms", "definable", "closure", "top-down" } )
  {
    auto* cmd = fin_cmd->add_subcommand( action );
    cmd->add_option( "--structure", o.structure_file, "Structure JSON ('-' for stdin, the default)" );
    cmd->callback( [&fin_action, action] { fin_action = action; } );
  }
  fin_cmd->get_subcommand( "automorphisms" )->description( "Relation-preserving permutations" );
  fin_cmd->get_subcommand( "definable" )->description( "Subsets definable from parameters and extra predicates" );
  fin_cmd->get_subcommand( "definable" )->add_option( "--param", o.params, "Parameter element (repeatable)" );
  fin_cmd->get_subcommand( "definable" )->add_option( "--extra", o.subsets, "Extra predicate such as '0,2'" );
  fin_cmd->get_subcommand( "closure" )->description( "Definability closure of a seed family" );
  fin_cmd->get_subcommand( "closure" )->add_option( "--seed", o.subsets, "Seed subset such as '0,2' (repeatable)" );
  fin_cmd->get_subcommand( "top-down" )->description( "All closed families ordered by inclusion" );
  fin_cmd->get_subcommand( "top-down" )->add_option( "--benchmark", o.subsets, "Subset tracked by an atom" );

  std::vector<const char*> argv{ "potkit" };
  for ( const auto& a : args )
    argv.push_back( a.c_str() );
  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e, out, err );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( parse_cmd->parsed() )
      return cmd_parse( o, out );
    if ( check_cmd->parsed() )
      return cmd_check( o, in, out );
    if ( props_cmd->parsed() )
      return cmd_frame_props( o, in, out );
    if ( enum_cmd->parsed() )
      return cmd_frame_enumerate( o, out );
    if ( decide_cmd->parsed() )
      return cmd_decide( o, out );
    if ( build_cmd->parsed() )
      return cmd_system_build( o, in, out );
    if ( report_cmd->parsed() )
      return cmd_system_report( o, in, out );
    if ( certify_cmd->parsed() )
      return cmd_system_certify( o, in, out );
    if ( refute_cmd->parsed() )
      return cmd_system_refute( o, in, out );
    if ( compare_cmd->parsed() )
      return cmd_system_compare( o, in, out );
    if ( ordinal_cmd->parsed() )
      return cmd_ordinal( o, out );
    if ( fin_cmd->parsed() )
      return cmd_finstruct( fin_action, o, in, out );
  }
  catch ( const potkit::error& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( const json::exception& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  err << app.help();
  return exit_usage;
}

} // namespace potkit::cli
