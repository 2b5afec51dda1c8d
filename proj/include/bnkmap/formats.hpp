#pragma once

#include <bnkmap/limits.hpp>
#include <bnkmap/network.hpp>
#include <bnkmap/stp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bnkmap
{

/*
 * Network file: one rule per line, `x<r>' = <expr>`. `#` starts a comment,
 * blank lines are ignored, and n is the number of rule lines. Each index
 * 1..n appears exactly once, in any order.
 *
 * Matrix file: `delta <2^n> [i_1 i_2 ... i_{2^n}]`, whitespace separated,
 * 1-based indices. Comments and line breaks between tokens are allowed.
 */

enum class input_format
{
  network,
  matrix
};

/// `matrix` when the first token is `delta`, `network` otherwise.
input_format detect_format( std::string_view text );

boolean_network parse_network_file( std::string_view text, const size_limits& limits = {} );
logical_matrix parse_matrix_file( std::string_view text, const size_limits& limits = {} );

/// One `x<r>' = <expr>` line per node. A non-empty comment for node r is
/// appended as `  # <comment>`.
std::string format_network( const boolean_network& bn, const std::vector<std::string>& comments = {} );

/// `delta <rows> [i_1 ... i_cols]` followed by a newline.
std::string format_matrix( const logical_matrix& m );

} // namespace bnkmap
