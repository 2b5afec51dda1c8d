#pragma once

#include <bnkmap/error.hpp>
#include <bnkmap/limits.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace bnkmap
{

template <typename Scalar>
using dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix used by every dense path in the library.
using dense_matrix = dense<std::int64_t>;

namespace detail
{

inline void check_dense_shape( std::uint64_t rows, std::uint64_t cols, std::uint64_t limit )
{
  if ( rows == 0u || cols == 0u )
  {
    throw dimension_error( "dense matrices must have at least one row and one column" );
  }
  if ( rows > limit || cols > limit || rows * cols > limit )
  {
    throw size_limit_error( "dense result of " + std::to_string( rows ) + "x" + std::to_string( cols ) +
                            " exceeds the limit of " + std::to_string( limit ) + " entries" );
  }
}

} // namespace detail

/// Kronecker product.
template <typename DerivedA, typename DerivedB>
dense<typename DerivedA::Scalar> kron( const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                                       std::uint64_t limit = max_dense_entries )
{
  static_assert( std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                 "kron operands must share a scalar type" );
  using scalar = typename DerivedA::Scalar;

  const auto rows = static_cast<std::uint64_t>( a.rows() ) * static_cast<std::uint64_t>( b.rows() );
  const auto cols = static_cast<std::uint64_t>( a.cols() ) * static_cast<std::uint64_t>( b.cols() );
  detail::check_dense_shape( rows, cols, limit );

  dense<scalar> result( a.rows() * b.rows(), a.cols() * b.cols() );
  for ( Eigen::Index i = 0; i < a.rows(); ++i )
  {
    for ( Eigen::Index j = 0; j < a.cols(); ++j )
    {
      result.block( i * b.rows(), j * b.cols(), b.rows(), b.cols() ) = a( i, j ) * b;
    }
  }
  return result;
}

/// Semi-tensor product: (A ⊗ I_{α/n}) (B ⊗ I_{α/p}) with α = lcm(cols(A), rows(B)).
/// Reduces to the ordinary product when the inner dimensions agree.
template <typename DerivedA, typename DerivedB>
dense<typename DerivedA::Scalar> stp( const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                                      std::uint64_t limit = max_dense_entries )
{
  static_assert( std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                 "stp operands must share a scalar type" );
  using scalar = typename DerivedA::Scalar;

  const auto n = static_cast<std::uint64_t>( a.cols() );
  const auto p = static_cast<std::uint64_t>( b.rows() );
  if ( n == 0u || p == 0u || a.rows() == 0 || b.cols() == 0 )
  {
    throw dimension_error( "stp operands must be non-empty" );
  }
  const std::uint64_t alpha = std::lcm( n, p );

  const auto rows = static_cast<std::uint64_t>( a.rows() ) * ( alpha / n );
  const auto cols = static_cast<std::uint64_t>( b.cols() ) * ( alpha / p );
  detail::check_dense_shape( rows, alpha, limit );
  detail::check_dense_shape( alpha, cols, limit );
  detail::check_dense_shape( rows, cols, limit );

  if ( n == p )
  {
    return a * b;
  }
  const auto left = dense<scalar>::Identity( static_cast<Eigen::Index>( alpha / n ), static_cast<Eigen::Index>( alpha / n ) );
  const auto right = dense<scalar>::Identity( static_cast<Eigen::Index>( alpha / p ), static_cast<Eigen::Index>( alpha / p ) );
  return kron( a, left, limit ) * kron( b, right, limit );
}

/// Left-to-right semi-tensor product of a non-empty chain.
template <typename Scalar>
dense<Scalar> stp_chain( std::span<const dense<Scalar>> factors, std::uint64_t limit = max_dense_entries )
{
  if ( factors.empty() )
  {
    throw dimension_error( "stp_chain needs at least one factor" );
  }
  dense<Scalar> result = factors.front();
  for ( std::size_t i = 1; i < factors.size(); ++i )
  {
    result = stp( result, factors[i], limit );
  }
  return result;
}

/// A unit column vector δ_dim^index (1-based index).
class logical_vector
{
public:
  logical_vector( std::uint64_t dim, std::uint64_t index );

  std::uint64_t dim() const noexcept { return dim_; }
  std::uint64_t index() const noexcept { return index_; }

  friend bool operator==( const logical_vector&, const logical_vector& ) = default;

private:
  std::uint64_t dim_;
  std::uint64_t index_;
};

/// δ_2^1 for true, δ_2^2 for false.
logical_vector truth_vector( bool value );

/// A 0/1 matrix with exactly one 1 per column, stored as the 1-based row
/// index of that 1 for each column: δ_rows[i_1, ..., i_cols].
class logical_matrix
{
public:
  logical_matrix( std::uint64_t rows, std::vector<std::uint32_t> indices );

  /// The square 2^n x 2^n matrix δ_{2^n}[indices].
  static logical_matrix transition( unsigned n_vars, std::vector<std::uint32_t> indices );
  static logical_matrix identity( std::uint64_t dim );
  static logical_matrix from_vector( const logical_vector& v );

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return indices_.size(); }

  /// Row index (1-based) of the 1 in column `col` (1-based).
  std::uint32_t at( std::uint64_t col ) const;
  std::span<const std::uint32_t> indices() const noexcept { return indices_; }

  /// Number of Boolean variables when the matrix is 2^n x 2^n; 0 otherwise.
  unsigned n_vars() const noexcept;
  bool is_transition() const noexcept;

  logical_vector column( std::uint64_t col ) const;

  friend bool operator==( const logical_matrix&, const logical_matrix& ) = default;

private:
  std::uint64_t rows_;
  std::vector<std::uint32_t> indices_;
};

std::ostream& operator<<( std::ostream& os, const logical_vector& v );
std::ostream& operator<<( std::ostream& os, const logical_matrix& m );

template <typename Scalar = std::int64_t>
dense<Scalar> to_dense( const logical_matrix& m, std::uint64_t limit = max_dense_entries )
{
  detail::check_dense_shape( m.rows(), m.cols(), limit );
  dense<Scalar> result = dense<Scalar>::Zero( static_cast<Eigen::Index>( m.rows() ), static_cast<Eigen::Index>( m.cols() ) );
  const auto idx = m.indices();
  for ( std::size_t c = 0; c < idx.size(); ++c )
  {
    result( idx[c] - 1, static_cast<Eigen::Index>( c ) ) = Scalar{ 1 };
  }
  return result;
}

template <typename Scalar = std::int64_t>
dense<Scalar> to_dense( const logical_vector& v, std::uint64_t limit = max_dense_entries )
{
  return to_dense<Scalar>( logical_matrix::from_vector( v ), limit );
}

/// Recovers the index form of a dense logical matrix; throws dimension_error
/// unless every column is a unit vector.
template <typename Derived>
logical_matrix to_logical( const Eigen::MatrixBase<Derived>& m )
{
  using scalar = typename Derived::Scalar;
  std::vector<std::uint32_t> indices( static_cast<std::size_t>( m.cols() ) );
  for ( Eigen::Index c = 0; c < m.cols(); ++c )
  {
    Eigen::Index hit = -1;
    for ( Eigen::Index r = 0; r < m.rows(); ++r )
    {
      const scalar x = m( r, c );
      if ( x == scalar{ 0 } )
      {
        continue;
      }
      if ( x != scalar{ 1 } || hit >= 0 )
      {
        throw dimension_error( "column " + std::to_string( c + 1 ) + " is not a unit vector" );
      }
      hit = r;
    }
    if ( hit < 0 )
    {
      throw dimension_error( "column " + std::to_string( c + 1 ) + " is zero" );
    }
    indices[static_cast<std::size_t>( c )] = static_cast<std::uint32_t>( hit + 1 );
  }
  return logical_matrix( static_cast<std::uint64_t>( m.rows() ), std::move( indices ) );
}

/// O(1) product of a logical matrix with a unit vector: picks a column.
logical_vector stp_logical( const logical_matrix& a, const logical_vector& v );

/// Semi-tensor product of two logical matrices without dense expansion.
logical_matrix stp_logical( const logical_matrix& a, const logical_matrix& b );

/// Semi-tensor product of two column unit vectors (their Kronecker product).
logical_vector stp_logical( const logical_vector& a, const logical_vector& b );

/// W_[m,p]: the mp x mp permutation with W (x ⊗ y) = y ⊗ x for dim x = m, dim y = p.
logical_matrix swap_logical( std::uint64_t m, std::uint64_t p );

template <typename Scalar = std::int64_t>
dense<Scalar> swap_matrix( std::uint64_t m, std::uint64_t p, std::uint64_t limit = max_dense_entries )
{
  if ( m == 0u || p == 0u )
  {
    throw dimension_error( "swap matrix dimensions must be positive" );
  }
  detail::check_dense_shape( m * p, m * p, limit );
  return to_dense<Scalar>( swap_logical( m, p ), limit );
}

/// S_i^n: the 2 x 2^n matrix extracting node i from a state vector.
logical_matrix s_matrix( unsigned i, unsigned n );

/// M_¬ = δ_2[2,1].
logical_matrix negation_matrix();

} // namespace bnkmap
