#pragma once

#include <bnkmap/formats.hpp>
#include <bnkmap/limits.hpp>
#include <bnkmap/network.hpp>
#include <bnkmap/reconstruct.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bnkmap
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int user_error = 1;
inline constexpr int limit = 2;
} // namespace exit_code

using model = std::variant<boolean_network, logical_matrix>;

model load_model( std::string_view text, std::optional<input_format> format, const size_limits& limits );

/// Node truth tables of either representation.
std::vector<truth_table> node_tables( const model& m, const size_limits& limits );

/// Composed K-map in decimal and in binary notation.
std::string render_network_kmap( const kmap_cells& km );

std::string format_cheng_report( const cheng_report& report, const size_limits& limits = {} );

/// Dependency graph in Graphviz DOT: edge x_j -> x_i iff f_i depends on x_j.
std::string dependency_graph( const std::vector<truth_table>& tables );

struct verify_result
{
  bool pass = false;
  std::string report;
};

/// Forward then inverse conversion, compared node by node.
verify_result verify_model( const model& m, const size_limits& limits = {} );

struct command_options
{
  std::optional<input_format> format;
  size_limits limits;
  /// from-matrix: sum-of-minterms output instead of minimized rules.
  bool canonical = false;
  /// simulate: initial state as a bit string, x_1 first.
  std::string init;
  std::uint64_t steps = 0;
  /// Name used in diagnostics.
  std::string source = "<stdin>";
};

// Each command reads `text`, writes results to `out` and diagnostics to
// `err`, and returns a process exit code.
int run_to_matrix( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_from_matrix( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_kmap( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_cheng( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_graph( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_verify( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );
int run_simulate( std::string_view text, const command_options& opts, std::ostream& out, std::ostream& err );

} // namespace bnkmap
