#include <bnkmap/commands.hpp>
#include <bnkmap/minimize.hpp>

#include <ostream>
#include <sstream>

namespace bnkmap
{

model load_model( std::string_view text, std::optional<input_format> format, const size_limits& limits )
{
  if ( format.value_or( detect_format( text ) ) == input_format::matrix )
  {
    return parse_matrix_file( text, limits );
  }
  return parse_network_file( text, limits );
}

std::vector<truth_table> node_tables( const model& m, const size_limits& limits )
{
  if ( const auto* bn = std::get_if<boolean_network>( &m ) )
  {
    return truth_tables( *bn, limits );
  }
  const auto km = matrix_kmap( std::get<logical_matrix>( m ) );
  std::vector<truth_table> tables;
  for ( unsigned r = 1; r <= km.n; ++r )
  {
    tables.push_back( bitplane( km, r ) );
  }
  return tables;
}

namespace
{

std::string binary( std::uint32_t value, unsigned width )
{
  std::string s( width, '0' );
  for ( unsigned b = 0; b < width; ++b )
  {
    if ( ( value >> ( width - 1 - b ) ) & 1u )
    {
      s[b] = '1';
    }
  }
  return s;
}

std::string format_residual( const dense_matrix& m )
{
  std::ostringstream os;
  os << '[';
  for ( Eigen::Index r = 0; r < m.rows(); ++r )
  {
    os << ( r ? "; " : "" );
    for ( Eigen::Index c = 0; c < m.cols(); ++c )
    {
      os << ( c ? " " : "" ) << m( r, c );
    }
  }
  os << ']';
  return os.str();
}

std::string var_list( const std::vector<unsigned>& vars )
{
  std::string s;
  for ( auto v : vars )
  {
    s += ( s.empty() ? "x" : " x" ) + std::to_string( v );
  }
  return s.empty() ? "none" : s;
}

const logical_matrix& require_matrix( const model& m, std::string_view command )
{
  if ( const auto* L = std::get_if<logical_matrix>( &m ) )
  {
    return *L;
  }
  throw error( std::string( command ) + " expects a matrix file (delta ...)" );
}

const boolean_network& require_network( const model& m, std::string_view command )
{
  if ( const auto* bn = std::get_if<boolean_network>( &m ) )
  {
    return *bn;
  }
  throw error( std::string( command ) + " expects a network file (x1' = ...)" );
}

template <typename Body>
int guarded( const command_options& opts, std::ostream& err, Body&& body )
{
  try
  {
    return body();
  }
  catch ( const parse_error& e )
  {
    err << opts.source << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << '\n';
    return exit_code::user_error;
  }
  catch ( const size_limit_error& e )
  {
    err << opts.source << ": limit: " << e.what() << '\n';
    return exit_code::limit;
  }
  catch ( const error& e )
  {
    err << opts.source << ": error: " << e.what() << '\n';
    return exit_code::user_error;
  }
  catch ( const std::exception& e )
  {
    err << opts.source << ": internal error: " << e.what() << '\n';
    return exit_code::limit;
  }
}

} // namespace

std::string render_network_kmap( const kmap_cells& km )
{
  std::ostringstream os;
  os << "K-map (decimal)\n"
     << render_kmap( km.n, [&]( std::uint64_t k ) { return std::to_string( km.cells[k] ); } ) << '\n'
     << "K-map (binary)\n"
     << render_kmap( km.n, [&]( std::uint64_t k ) { return binary( km.cells[k], km.n ); } );
  return os.str();
}

std::string format_cheng_report( const cheng_report& report, const size_limits& limits )
{
  std::ostringstream os;
  os << "swap convention: "
     << ( report.convention == swap_convention::standard ? "W[2,2^(j-1)] (standard)" : "W[2^(j-1),2] (transposed)" )
     << '\n';
  for ( const auto& node : report.nodes )
  {
    const auto n = static_cast<unsigned>( node.full_arity_checks.size() );
    os << 'x' << node.node << ": M" << node.node << " = " << node.structure << '\n';
    for ( unsigned j = 1; j <= n; ++j )
    {
      const auto& check = node.full_arity_checks[j - 1];
      os << "  j=" << j << ": residual " << format_residual( check.residual ) << ( check.holds ? " = 0" : " != 0" )
         << '\n';
    }
    if ( node.failed )
    {
      os << "  FAILED: no variable can be eliminated at full arity " << n << '\n';
      continue;
    }
    os << "  removed: " << var_list( node.removed ) << '\n';
    os << "  reduced: M" << node.node << "' = " << node.reduced << " over (" << var_list( node.remaining ) << ")\n";
    os << "  in-degree: " << node.remaining.size() << '\n';

    const auto arity = static_cast<unsigned>( node.remaining.size() );
    if ( arity <= limits.max_exact_n )
    {
      try
      {
        const auto rule = sop_to_expr( minimize( to_minterms( from_structure_matrix( node.reduced ) ), limits ) );
        os << "  rule: x" << node.node << "' = " << to_string( rename_vars( rule, node.remaining ) ) << '\n';
      }
      catch ( const size_limit_error& e )
      {
        os << "  rule: not minimized (" << e.what() << ")\n";
      }
    }
  }
  return os.str();
}

std::string dependency_graph( const std::vector<truth_table>& tables )
{
  std::ostringstream os;
  os << "digraph boolean_network {\n";
  std::vector<std::vector<unsigned>> inputs;
  for ( const auto& t : tables )
  {
    inputs.push_back( support( t ) );
  }
  for ( std::size_t i = 0; i < tables.size(); ++i )
  {
    os << "  x" << i + 1 << ";  // in-degree " << inputs[i].size() << '\n';
  }
  for ( std::size_t i = 0; i < tables.size(); ++i )
  {
    for ( auto j : inputs[i] )
    {
      os << "  x" << j << " -> x" << i + 1 << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

verify_result verify_model( const model& m, const size_limits& limits )
{
  std::ostringstream os;
  bool pass = true;

  std::vector<truth_table> expected;
  std::vector<truth_table> actual;
  if ( const auto* bn = std::get_if<boolean_network>( &m ) )
  {
    const auto L = to_matrix( *bn, limits );
    if ( L != to_matrix_oracle( *bn, limits ) )
    {
      pass = false;
      os << "transition matrix disagrees with direct state enumeration\n";
    }
    expected = truth_tables( *bn, limits );
    actual = truth_tables( reconstruct_kmap( L ), limits );
  }
  else
  {
    const auto& L = std::get<logical_matrix>( m );
    const auto rebuilt = reconstruct_kmap( L );
    const auto L2 = to_matrix( rebuilt, limits );
    if ( L2 != L )
    {
      pass = false;
      os << "matrix round trip differs: " << L2 << '\n';
    }
    expected = node_tables( m, limits );
    actual = truth_tables( rebuilt, limits );
  }

  for ( std::size_t r = 0; r < expected.size(); ++r )
  {
    if ( expected[r] == actual[r] )
    {
      continue;
    }
    pass = false;
    os << "x" << r + 1 << ": expected " << to_sigma_string( to_minterms( expected[r] ) ) << ", got "
       << to_sigma_string( to_minterms( actual[r] ) ) << '\n';
  }
  os << ( pass ? "PASS" : "FAIL" ) << ": " << expected.size() << " node(s) survive the round trip"
     << ( pass ? "" : " with differences" ) << '\n';
  return { pass, os.str() };
}

int run_to_matrix( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    out << format_matrix( to_matrix( require_network( m, "to-matrix" ), opts.limits ) );
    return exit_code::ok;
  } );
}

int run_from_matrix( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    const auto& L = require_matrix( m, "from-matrix" );
    const auto forms = reconstruct_minterms( L );

    std::vector<bool_expr> rules;
    std::vector<std::string> comments;
    for ( const auto& form : forms )
    {
      if ( opts.canonical )
      {
        rules.push_back( minterm_to_expr( form ) );
        comments.push_back( to_sigma_string( form ) );
      }
      else
      {
        rules.push_back( sop_to_expr( minimize( form, opts.limits ) ) );
      }
    }
    out << format_network( boolean_network( std::move( rules ) ), comments );
    return exit_code::ok;
  } );
}

int run_kmap( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    const auto km = std::holds_alternative<boolean_network>( m )
                        ? net_kmap( std::get<boolean_network>( m ), opts.limits )
                        : matrix_kmap( std::get<logical_matrix>( m ) );
    out << render_network_kmap( km );
    return exit_code::ok;
  } );
}

int run_cheng( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    const auto L = std::holds_alternative<logical_matrix>( m ) ? std::get<logical_matrix>( m )
                                                               : to_matrix( std::get<boolean_network>( m ), opts.limits );
    out << format_cheng_report( cheng_reduce( L, opts.limits ), opts.limits );
    return exit_code::ok;
  } );
}

int run_graph( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    out << dependency_graph( node_tables( m, opts.limits ) );
    return exit_code::ok;
  } );
}

int run_verify( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    const auto result = verify_model( m, opts.limits );
    out << result.report;
    return result.pass ? exit_code::ok : exit_code::user_error;
  } );
}

int run_simulate( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err )
{
  return guarded( opts, err, [&] {
    const auto m = load_model( text, opts.format, opts.limits );
    const unsigned n = std::holds_alternative<boolean_network>( m ) ? std::get<boolean_network>( m ).n()
                                                                    : std::get<logical_matrix>( m ).n_vars();
    if ( opts.init.size() != n || opts.init.find_first_not_of( "01" ) != std::string::npos )
    {
      throw error( "--init needs a bit string of length " + std::to_string( n ) );
    }
    state_vector s( n );
    for ( unsigned r = 0; r < n; ++r )
    {
      s[r] = opts.init[r] == '1';
    }
    const auto print = [&]( const state_vector& state ) {
      for ( bool b : state )
      {
        out << ( b ? '1' : '0' );
      }
      out << '\n';
    };
    print( s );
    for ( std::uint64_t t = 0; t < opts.steps; ++t )
    {
      if ( const auto* bn = std::get_if<boolean_network>( &m ) )
      {
        s = step( *bn, s );
      }
      else
      {
        s = decode( stp_logical( std::get<logical_matrix>( m ), encode( s ) ) );
      }
      print( s );
    }
    return exit_code::ok;
  } );
}

} // namespace bnkmap
