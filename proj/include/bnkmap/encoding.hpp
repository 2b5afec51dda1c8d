#pragma once

// The single state-encoding convention shared by every module.
//
// An assignment (b_1, ..., b_n) with True = 1 has minterm number
// k = sum_r b_r 2^(n-r), so x_1 is the most significant bit. Its vector form
// x_1 ⋉ ... ⋉ x_n is δ_{2^n}^{2^n - k}, i.e. minterm k lives in column
// 2^n - k of any matrix acting on states.

#include <cstdint>
#include <vector>

namespace bnkmap
{

inline std::uint64_t state_count( unsigned n ) { return std::uint64_t{ 1 } << n; }

/// Value of variable r (1-based) in minterm k over n variables.
inline bool minterm_bit( std::uint64_t k, unsigned n, unsigned r ) { return ( ( k >> ( n - r ) ) & 1u ) != 0u; }

inline std::uint64_t minterm_of( const std::vector<bool>& bits )
{
  std::uint64_t k = 0;
  for ( bool b : bits )
  {
    k = ( k << 1 ) | ( b ? 1u : 0u );
  }
  return k;
}

inline std::vector<bool> assignment_of( std::uint64_t k, unsigned n )
{
  std::vector<bool> bits( n );
  for ( unsigned r = 1; r <= n; ++r )
  {
    bits[r - 1] = minterm_bit( k, n, r );
  }
  return bits;
}

/// 1-based vector index of minterm k: 2^n - k.
inline std::uint64_t vector_index_of( std::uint64_t k, unsigned n ) { return state_count( n ) - k; }

/// Minterm carried by 1-based vector index i: 2^n - i.
inline std::uint64_t minterm_of_index( std::uint64_t i, unsigned n ) { return state_count( n ) - i; }

} // namespace bnkmap
