#include <doctest.h>

#include "support.hpp"

#include <bnkmap/encoding.hpp>
#include <bnkmap/error.hpp>
#include <bnkmap/stp.hpp>

#include <numeric>
#include <sstream>

using namespace bnkmap;

namespace
{

// Entry-by-entry Kronecker product.
dense_matrix kron_oracle( const dense_matrix& a, const dense_matrix& b )
{
  dense_matrix r( a.rows() * b.rows(), a.cols() * b.cols() );
  for ( Eigen::Index i = 0; i < r.rows(); ++i )
  {
    for ( Eigen::Index j = 0; j < r.cols(); ++j )
    {
      r( i, j ) = a( i / b.rows(), j / b.cols() ) * b( i % b.rows(), j % b.cols() );
    }
  }
  return r;
}

dense_matrix stp_oracle( const dense_matrix& a, const dense_matrix& b )
{
  const auto alpha = std::lcm( a.cols(), b.rows() );
  const dense_matrix ia = dense_matrix::Identity( alpha / a.cols(), alpha / a.cols() );
  const dense_matrix ib = dense_matrix::Identity( alpha / b.rows(), alpha / b.rows() );
  return kron_oracle( a, ia ) * kron_oracle( b, ib );
}

// W with W (x ⊗ y) = y ⊗ x, found by trying every pair of unit vectors.
dense_matrix swap_oracle( Eigen::Index m, Eigen::Index p )
{
  dense_matrix w = dense_matrix::Zero( m * p, m * p );
  for ( Eigen::Index i = 0; i < m; ++i )
  {
    for ( Eigen::Index j = 0; j < p; ++j )
    {
      dense_matrix x = dense_matrix::Zero( m, 1 );
      dense_matrix y = dense_matrix::Zero( p, 1 );
      x( i, 0 ) = 1;
      y( j, 0 ) = 1;
      const dense_matrix xy = kron_oracle( x, y );
      const dense_matrix yx = kron_oracle( y, x );
      Eigen::Index col = 0;
      Eigen::Index row = 0;
      xy.col( 0 ).maxCoeff( &col );
      yx.col( 0 ).maxCoeff( &row );
      w( row, col ) = 1;
    }
  }
  return w;
}

dense_matrix mat( Eigen::Index rows, Eigen::Index cols, std::initializer_list<std::int64_t> values )
{
  dense_matrix m( rows, cols );
  auto it = values.begin();
  for ( Eigen::Index r = 0; r < rows; ++r )
  {
    for ( Eigen::Index c = 0; c < cols; ++c )
    {
      m( r, c ) = *it++;
    }
  }
  return m;
}

} // namespace

TEST_CASE( "kron of negation with identity" )
{
  const auto neg = mat( 2, 2, { 0, 1, 1, 0 } );
  const dense_matrix i2 = dense_matrix::Identity( 2, 2 );
  const auto expected = mat( 4, 4, { 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0 } );
  CHECK( kron( neg, i2 ) == expected );
  CHECK( kron_oracle( neg, i2 ) == expected );
}

TEST_CASE( "stp of a row with a column" )
{
  const auto x = mat( 1, 4, { 1, 2, 3, 4 } );
  const auto y = mat( 2, 1, { 5, 6 } );
  CHECK( stp( x, y ) == mat( 1, 2, { 1 * 5 + 3 * 6, 2 * 5 + 4 * 6 } ) );
}

TEST_CASE( "stp reduces to the ordinary product on matching dimensions" )
{
  auto rng = testing::make_rng( 1 );
  for ( int trial = 0; trial < 50; ++trial )
  {
    const auto rows = static_cast<Eigen::Index>( 1 + rng() % 4 );
    const auto inner = static_cast<Eigen::Index>( 1 + rng() % 4 );
    const auto cols = static_cast<Eigen::Index>( 1 + rng() % 4 );
    const auto a = testing::random_dense( rng, rows, inner );
    const auto b = testing::random_dense( rng, inner, cols );
    CHECK( stp( a, b ) == dense_matrix( a * b ) );
  }
}

TEST_CASE( "stp agrees with the padded definition and is associative" )
{
  auto rng = testing::make_rng( 2 );
  const Eigen::Index dims[] = { 1, 2, 4, 8 };
  for ( auto r1 : dims )
    for ( auto c1 : dims )
      for ( auto c2 : dims )
        for ( auto c3 : dims )
        {
          const auto a = testing::random_dense( rng, r1, c1 );
          const auto b = testing::random_dense( rng, 2, c2 );
          const auto c = testing::random_dense( rng, 4, c3 );
          CHECK( stp( a, b ) == stp_oracle( a, b ) );
          CHECK( stp( stp( a, b ), c ) == stp( a, stp( b, c ) ) );
        }
}

TEST_CASE( "stp_chain folds left" )
{
  auto rng = testing::make_rng( 3 );
  std::vector<dense_matrix> fs{ testing::random_dense( rng, 2, 4 ), testing::random_dense( rng, 2, 2 ),
                                testing::random_dense( rng, 4, 1 ) };
  CHECK( stp_chain<std::int64_t>( fs ) == stp( stp( fs[0], fs[1] ), fs[2] ) );
}

TEST_CASE( "swap matrix" )
{
  CHECK( to_logical( swap_matrix<std::int64_t>( 2, 2 ) ) == logical_matrix( 4, { 1, 3, 2, 4 } ) );
  CHECK( swap_logical( 2, 2 ) == logical_matrix( 4, { 1, 3, 2, 4 } ) );
  for ( std::uint64_t m = 1; m <= 5; ++m )
  {
    for ( std::uint64_t p = 1; p <= 5; ++p )
    {
      const auto w = swap_matrix<std::int64_t>( m, p );
      CHECK( w == swap_oracle( m, p ) );
      CHECK( to_logical( w ) == swap_logical( m, p ) );
      CHECK( dense_matrix( w * swap_matrix<std::int64_t>( p, m ) ) == dense_matrix::Identity( m * p, m * p ) );
      CHECK( dense_matrix( w * w.transpose() ) == dense_matrix::Identity( m * p, m * p ) );
    }
  }
}

TEST_CASE( "swap exchanges factors of arbitrary vectors" )
{
  auto rng = testing::make_rng( 4 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    const auto m = static_cast<Eigen::Index>( 1 + rng() % 5 );
    const auto p = static_cast<Eigen::Index>( 1 + rng() % 5 );
    const auto x = testing::random_dense( rng, m, 1 );
    const auto y = testing::random_dense( rng, p, 1 );
    CHECK( dense_matrix( swap_matrix<std::int64_t>( m, p ) * kron( x, y ) ) == kron( y, x ) );
  }
}

TEST_CASE( "logical matrix basics" )
{
  const logical_matrix l( 4, { 1, 2, 2, 4 } );
  CHECK( l.rows() == 4 );
  CHECK( l.cols() == 4 );
  CHECK( l.at( 3 ) == 2 );
  CHECK( l.is_transition() );
  CHECK( l.n_vars() == 2 );
  CHECK( l.column( 4 ) == logical_vector( 4, 4 ) );
  std::ostringstream os;
  os << l;
  CHECK( os.str() == "delta 4 [1 2 2 4]" );

  CHECK_THROWS_AS( logical_matrix( 4, { 1, 5 } ), index_error );
  CHECK_THROWS_AS( logical_matrix( 4, { 0, 1 } ), index_error );
  CHECK_THROWS_AS( logical_matrix::transition( 2, { 1, 2, 3 } ), dimension_error );
  CHECK_THROWS_AS( logical_vector( 2, 3 ), index_error );
}

TEST_CASE( "dense and logical views agree" )
{
  const logical_matrix l( 2, { 1, 2, 2, 2 } );
  const dense_matrix d = to_dense<std::int64_t>( l );
  CHECK( d == mat( 2, 4, { 1, 0, 0, 0, 0, 1, 1, 1 } ) );
  CHECK( to_logical( d ) == l );
  CHECK_THROWS_AS( to_logical( mat( 2, 2, { 1, 0, 1, 0 } ) ), error );
  CHECK_THROWS_AS( to_logical( mat( 2, 2, { 1, 1, 1, 0 } ) ), error );
}

TEST_CASE( "stp_logical matches dense stp exhaustively for small shapes" )
{
  // Every 2 x 4 and 4 x 4 logical matrix against every 4 x 2 and 2 x 2 one.
  std::vector<logical_matrix> lefts;
  std::vector<logical_matrix> rights;
  for ( unsigned code = 0; code < 16; ++code )
  {
    lefts.emplace_back( 2, std::vector<std::uint32_t>{ 1 + ( code & 1 ), 1 + ( code >> 1 & 1 ), 1 + ( code >> 2 & 1 ),
                                                       1 + ( code >> 3 & 1 ) } );
  }
  for ( unsigned code = 0; code < 256; ++code )
  {
    lefts.push_back( testing::transition_from_code( code ) );
  }
  for ( unsigned code = 0; code < 4; ++code )
  {
    rights.emplace_back( 2, std::vector<std::uint32_t>{ 1 + ( code & 1 ), 1 + ( code >> 1 & 1 ) } );
  }
  for ( unsigned code = 0; code < 16; ++code )
  {
    rights.emplace_back( 4, std::vector<std::uint32_t>{ 1 + code % 4, 1 + code / 4 } );
  }
  for ( const auto& a : lefts )
  {
    for ( const auto& b : rights )
    {
      const dense_matrix expected = stp_oracle( to_dense<std::int64_t>( a ), to_dense<std::int64_t>( b ) );
      REQUIRE( to_dense<std::int64_t>( stp_logical( a, b ) ) == expected );
    }
  }
}

TEST_CASE( "stp_logical matches dense stp on random shapes" )
{
  auto rng = testing::make_rng( 5 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const std::uint64_t a_rows = 1u << ( rng() % 4 );
    const std::uint64_t a_cols = 1u << ( rng() % 4 );
    const std::uint64_t b_rows = 1u << ( rng() % 4 );
    const std::uint64_t b_cols = 1u << ( rng() % 4 );
    std::vector<std::uint32_t> ia( a_cols );
    std::vector<std::uint32_t> ib( b_cols );
    for ( auto& i : ia )
      i = static_cast<std::uint32_t>( 1 + rng() % a_rows );
    for ( auto& i : ib )
      i = static_cast<std::uint32_t>( 1 + rng() % b_rows );
    const logical_matrix a( a_rows, ia );
    const logical_matrix b( b_rows, ib );
    REQUIRE( to_dense<std::int64_t>( stp_logical( a, b ) ) ==
             stp_oracle( to_dense<std::int64_t>( a ), to_dense<std::int64_t>( b ) ) );
  }
}

TEST_CASE( "vector products follow the state encoding" )
{
  CHECK( stp_logical( truth_vector( true ), truth_vector( false ) ) == logical_vector( 4, 2 ) );
  CHECK( stp_logical( logical_matrix( 4, { 1, 2, 2, 4 } ), logical_vector( 4, 3 ) ) == logical_vector( 4, 2 ) );

  for ( unsigned n = 1; n <= 10; ++n )
  {
    for ( std::uint64_t k = 0; k < state_count( n ); ++k )
    {
      // i_r = 1 for a true bit, 2 for a false bit; a(n) = Σ (i_r mod 2) 2^(n-r).
      std::uint64_t a = 0;
      auto chain = truth_vector( minterm_bit( k, n, 1 ) );
      for ( unsigned r = 1; r <= n; ++r )
      {
        const unsigned i_r = minterm_bit( k, n, r ) ? 1u : 2u;
        a += ( i_r % 2u ) << ( n - r );
        if ( r > 1 )
        {
          chain = stp_logical( chain, logical_vector( 2, i_r ) );
        }
      }
      REQUIRE( chain == logical_vector( state_count( n ), state_count( n ) - a ) );
      REQUIRE( vector_index_of( k, n ) == state_count( n ) - a );
    }
  }
}

TEST_CASE( "vector products follow the state encoding in dense form" )
{
  for ( unsigned n = 1; n <= 3; ++n )
  {
    for ( std::uint64_t k = 0; k < state_count( n ); ++k )
    {
      std::vector<dense_matrix> factors;
      for ( unsigned r = 1; r <= n; ++r )
      {
        factors.push_back( to_dense<std::int64_t>( truth_vector( minterm_bit( k, n, r ) ) ) );
      }
      dense_matrix expected = dense_matrix::Zero( static_cast<Eigen::Index>( state_count( n ) ), 1 );
      expected( static_cast<Eigen::Index>( state_count( n ) - k - 1 ), 0 ) = 1;
      CHECK( stp_chain<std::int64_t>( factors ) == expected );
    }
  }
}

TEST_CASE( "s_matrix extracts a coordinate" )
{
  CHECK( s_matrix( 1, 2 ) == logical_matrix( 2, { 1, 1, 2, 2 } ) );
  CHECK( s_matrix( 2, 2 ) == logical_matrix( 2, { 1, 2, 1, 2 } ) );
  CHECK( stp_logical( s_matrix( 2, 2 ), logical_matrix( 4, { 1, 2, 2, 4 } ) ) == logical_matrix( 2, { 1, 2, 2, 2 } ) );
  for ( unsigned n = 1; n <= 5; ++n )
  {
    for ( unsigned i = 1; i <= n; ++i )
    {
      for ( std::uint64_t k = 0; k < state_count( n ); ++k )
      {
        CHECK( stp_logical( s_matrix( i, n ), logical_vector( state_count( n ), vector_index_of( k, n ) ) ) ==
               truth_vector( minterm_bit( k, n, i ) ) );
      }
    }
  }
  CHECK( negation_matrix() == logical_matrix( 2, { 2, 1 } ) );
}

TEST_CASE( "size limits are enforced" )
{
  const dense_matrix big = dense_matrix::Zero( 1 << 12, 1 << 12 );
  const dense_matrix two = dense_matrix::Identity( 2, 2 );
  CHECK_THROWS_AS( kron( big, two ), size_limit_error );
  CHECK_THROWS_AS( swap_matrix<std::int64_t>( 1 << 13, 1 << 13 ), size_limit_error );
  CHECK_THROWS_AS( check_arity( 21, size_limits{} ), size_limit_error );
  CHECK_NOTHROW( check_arity( 20, size_limits{} ) );
  CHECK_THROWS_AS( check_exact_arity( 13, size_limits{} ), size_limit_error );
}
