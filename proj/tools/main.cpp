#include <bnkmap/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace
{

bool read_input( const std::string& path, std::string& text )
{
  if ( path == "-" )
  {
    text.assign( std::istreambuf_iterator<char>( std::cin ), std::istreambuf_iterator<char>() );
    return true;
  }
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Convert Boolean networks between update rules and STP transition matrices" };
  app.require_subcommand( 1 );

  bnkmap::command_options opts;
  std::string format;
  std::string input = "-";
  app.add_option( "--max-n", opts.limits.max_n, "Largest network size accepted" )->capture_default_str();
  app.add_option( "--max-cover-work", opts.limits.max_cover_work, "Work budget of exact minimization" )
      ->capture_default_str();
  app.add_option( "--format", format, "Input format, detected from content by default" )
      ->check( CLI::IsMember( { "net", "mat" } ) );

  const auto with_input = [&]( CLI::App* sub ) {
    sub->add_option( "input", input, "Input file, or - for standard input" )->capture_default_str();
    return sub;
  };

  auto* to_matrix = with_input( app.add_subcommand( "to-matrix", "Network file to transition matrix" ) );
  auto* from_matrix = with_input( app.add_subcommand( "from-matrix", "Transition matrix to network file" ) );
  bool canonical = false;
  bool minimal = false;
  auto* canonical_flag = from_matrix->add_flag( "--canonical", canonical, "Emit sums of minterms" );
  from_matrix->add_flag( "--minimal", minimal, "Emit minimized sums of products (default)" )->excludes( canonical_flag );
  auto* kmap = with_input( app.add_subcommand( "kmap", "Render the K-map of a network or matrix" ) );
  auto* cheng = with_input( app.add_subcommand( "cheng", "Structure-matrix elimination report" ) );
  auto* graph = with_input( app.add_subcommand( "graph", "Dependency graph in DOT format" ) );
  auto* verify = with_input( app.add_subcommand( "verify", "Round-trip self-check" ) );
  auto* simulate = with_input( app.add_subcommand( "simulate", "Synchronous trajectory from an initial state" ) );
  simulate->add_option( "--init", opts.init, "Initial state, x1 first, e.g. 101" )->required();
  simulate->add_option( "--steps", opts.steps, "Number of updates" )->required();

  CLI11_PARSE( app, argc, argv );

  if ( format == "net" )
  {
    opts.format = bnkmap::input_format::network;
  }
  else if ( format == "mat" )
  {
    opts.format = bnkmap::input_format::matrix;
  }
  opts.canonical = canonical;
  opts.source = input == "-" ? "<stdin>" : input;

  std::string text;
  if ( !read_input( input, text ) )
  {
    std::cerr << input << ": error: cannot open file\n";
    return bnkmap::exit_code::user_error;
  }

  if ( *to_matrix )
  {
    return bnkmap::run_to_matrix( text, opts, std::cout, std::cerr );
  }
  if ( *from_matrix )
  {
    return bnkmap::run_from_matrix( text, opts, std::cout, std::cerr );
  }
  if ( *kmap )
  {
    return bnkmap::run_kmap( text, opts, std::cout, std::cerr );
  }
  if ( *cheng )
  {
    return bnkmap::run_cheng( text, opts, std::cout, std::cerr );
  }
  if ( *graph )
  {
    return bnkmap::run_graph( text, opts, std::cout, std::cerr );
  }
  if ( *verify )
  {
    return bnkmap::run_verify( text, opts, std::cout, std::cerr );
  }
  return bnkmap::run_simulate( text, opts, std::cout, std::cerr );
}
