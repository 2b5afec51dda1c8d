#pragma once

// Generators shared by the test suites. Fixed seeds keep every run identical.

#include <bnkmap/boolfn.hpp>
#include <bnkmap/encoding.hpp>
#include <bnkmap/minimize.hpp>
#include <bnkmap/network.hpp>
#include <bnkmap/stp.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace bnkmap::testing
{

inline std::mt19937_64 make_rng( std::uint64_t seed = 0x5eed ) { return std::mt19937_64( seed ); }

/// Function of n <= 6 variables whose bit k is bit k of `code`.
inline truth_table table_from_code( unsigned n, std::uint64_t code )
{
  std::vector<bool> bits( std::uint64_t{ 1 } << n );
  for ( std::uint64_t k = 0; k < bits.size(); ++k )
  {
    bits[k] = ( ( code >> k ) & 1u ) != 0u;
  }
  return truth_table( n, std::move( bits ) );
}

inline truth_table random_table( std::mt19937_64& rng, unsigned n )
{
  std::vector<bool> bits( std::uint64_t{ 1 } << n );
  for ( std::uint64_t k = 0; k < bits.size(); ++k )
  {
    bits[k] = ( rng() & 1u ) != 0u;
  }
  return truth_table( n, std::move( bits ) );
}

inline bool_expr random_expr( std::mt19937_64& rng, unsigned n, unsigned depth )
{
  const auto pick = rng() % ( depth == 0u ? 2u : 7u );
  if ( pick == 0u || n == 0u )
  {
    return n == 0u || rng() % 8u == 0u ? bool_expr::constant( rng() & 1u ) : bool_expr::var( 1u + rng() % n );
  }
  if ( pick == 1u )
  {
    return bool_expr::var( 1u + rng() % n );
  }
  if ( pick == 2u )
  {
    return bool_expr::negate( random_expr( rng, n, depth - 1 ) );
  }
  std::vector<bool_expr> ops;
  const auto arity = 2u + rng() % 2u;
  for ( unsigned i = 0; i < arity; ++i )
  {
    ops.push_back( random_expr( rng, n, depth - 1 ) );
  }
  switch ( pick % 3u )
  {
  case 0u:
    return bool_expr::conjoin( std::move( ops ) );
  case 1u:
    return bool_expr::disjoin( std::move( ops ) );
  default:
    return bool_expr::exclusive( std::move( ops ) );
  }
}

inline boolean_network random_network( std::mt19937_64& rng, unsigned n, unsigned depth = 3 )
{
  std::vector<bool_expr> rules;
  for ( unsigned r = 0; r < n; ++r )
  {
    rules.push_back( random_expr( rng, n, depth ) );
  }
  return boolean_network( std::move( rules ) );
}

inline logical_matrix random_transition( std::mt19937_64& rng, unsigned n )
{
  const std::uint64_t dim = std::uint64_t{ 1 } << n;
  std::vector<std::uint32_t> indices( dim );
  for ( auto& i : indices )
  {
    i = static_cast<std::uint32_t>( 1u + rng() % dim );
  }
  return logical_matrix::transition( n, std::move( indices ) );
}

/// The n=2 transition matrix numbered `code` in base 4 (256 in total).
inline logical_matrix transition_from_code( unsigned code )
{
  std::vector<std::uint32_t> indices( 4 );
  for ( auto& i : indices )
  {
    i = 1u + code % 4u;
    code /= 4u;
  }
  return logical_matrix::transition( 2, std::move( indices ) );
}

inline dense_matrix random_dense( std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols )
{
  dense_matrix m( rows, cols );
  for ( Eigen::Index r = 0; r < rows; ++r )
  {
    for ( Eigen::Index c = 0; c < cols; ++c )
    {
      m( r, c ) = static_cast<std::int64_t>( rng() % 7u ) - 3;
    }
  }
  return m;
}

// Every cube over n variables: each variable positive, negative or absent.
inline std::vector<implicant> all_cubes( unsigned n )
{
  std::vector<implicant> cubes;
  std::uint64_t total = 1;
  for ( unsigned r = 0; r < n; ++r )
    total *= 3u;
  for ( std::uint64_t code = 0; code < total; ++code )
  {
    implicant t{ n, 0, 0 };
    auto c = code;
    for ( unsigned b = 0; b < n; ++b, c /= 3u )
    {
      if ( c % 3u == 0u )
        continue;
      t.care_mask |= 1u << b;
      if ( c % 3u == 1u )
        t.values |= 1u << b;
    }
    cubes.push_back( t );
  }
  return cubes;
}

inline bool implies( const implicant& t, const truth_table& f )
{
  for ( std::uint64_t k = 0; k < f.size(); ++k )
  {
    if ( t.covers( k ) && !f.bit( k ) )
      return false;
  }
  return true;
}

struct best_cover
{
  std::size_t terms;
  unsigned literals;
};

// Smallest cover by any set of cubes, then fewest literals among those.
inline best_cover brute_force_cover( const truth_table& f )
{
  std::vector<implicant> candidates;
  for ( const auto& c : all_cubes( f.n_vars() ) )
  {
    if ( implies( c, f ) )
      candidates.push_back( c );
  }
  const auto on = to_minterms( f ).on_set;
  if ( on.empty() )
    return { 0, 0 };

  for ( std::size_t size = 1; size <= on.size(); ++size )
  {
    std::optional<unsigned> best;
    std::vector<std::size_t> pick( size );
    // Enumerate size-subsets of candidates in lexicographic index order.
    for ( std::size_t i = 0; i < size; ++i )
      pick[i] = i;
    if ( size > candidates.size() )
      break;
    while ( true )
    {
      bool covered = std::all_of( on.begin(), on.end(), [&]( std::uint64_t k ) {
        return std::any_of( pick.begin(), pick.end(), [&]( std::size_t i ) { return candidates[i].covers( k ); } );
      } );
      if ( covered )
      {
        unsigned lits = 0;
        for ( auto i : pick )
          lits += candidates[i].literal_count();
        best = std::min( best.value_or( lits ), lits );
      }
      std::size_t i = size;
      while ( i > 0 && pick[i - 1] == candidates.size() - size + i - 1 )
        --i;
      if ( i == 0 )
        break;
      ++pick[i - 1];
      for ( std::size_t q = i; q < size; ++q )
        pick[q] = pick[q - 1] + 1;
    }
    if ( best )
      return { size, *best };
  }
  return { on.size(), 0 };
}

} // namespace bnkmap::testing
