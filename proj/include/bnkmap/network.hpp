#pragma once

#include <bnkmap/boolfn.hpp>
#include <bnkmap/limits.hpp>
#include <bnkmap/stp.hpp>

#include <cstdint>
#include <vector>

namespace bnkmap
{

/// Synchronous Boolean network: x_r(t+1) = f_r(x_1(t), ..., x_n(t)).
class boolean_network
{
public:
  explicit boolean_network( std::vector<bool_expr> rules );

  unsigned n() const noexcept { return static_cast<unsigned>( rules_.size() ); }
  const std::vector<bool_expr>& rules() const noexcept { return rules_; }
  /// Rule of node r (1-based).
  const bool_expr& rule( unsigned r ) const;

private:
  std::vector<bool_expr> rules_;
};

/// Composed K-map: bit r (MSB is r = 1) of cell k is the value of f_r on minterm k.
struct kmap_cells
{
  unsigned n = 0;
  std::vector<std::uint32_t> cells;

  friend bool operator==( const kmap_cells&, const kmap_cells& ) = default;
};

using state_vector = std::vector<bool>;

kmap_cells net_kmap( const boolean_network& bn, const size_limits& limits = {} );

/// Transition matrix from the composed K-map: i_r = 2^n - c_{2^n - r}.
logical_matrix to_matrix( const boolean_network& bn, const size_limits& limits = {} );

/// Transition matrix by direct simulation of every state.
logical_matrix to_matrix_oracle( const boolean_network& bn, const size_limits& limits = {} );

state_vector step( const boolean_network& bn, const state_vector& s );

/// x_1 ⋉ ... ⋉ x_n as a unit vector.
logical_vector encode( const state_vector& s );
state_vector decode( const logical_vector& v );

/// Node-wise truth tables.
std::vector<truth_table> truth_tables( const boolean_network& bn, const size_limits& limits = {} );

} // namespace bnkmap
