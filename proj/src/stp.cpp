#include <bnkmap/stp.hpp>

#include <bit>
#include <limits>
#include <ostream>

namespace bnkmap
{

namespace
{

// Cap on the column count of any logical matrix built by the fast paths.
constexpr std::uint64_t max_logical_columns = std::uint64_t{ 1 } << 30;

void check_logical_columns( std::uint64_t cols )
{
  if ( cols > max_logical_columns )
  {
    throw size_limit_error( "logical matrix with " + std::to_string( cols ) + " columns exceeds the limit" );
  }
}

} // namespace

void check_arity( unsigned n, const size_limits& limits )
{
  if ( n > limits.max_n )
  {
    throw size_limit_error( "network size n = " + std::to_string( n ) + " exceeds the cap of " +
                            std::to_string( limits.max_n ) );
  }
}

void check_exact_arity( unsigned n, const size_limits& limits )
{
  if ( n > limits.max_exact_n )
  {
    throw size_limit_error( "arity n = " + std::to_string( n ) + " exceeds the exact-computation cap of " +
                            std::to_string( limits.max_exact_n ) );
  }
}

logical_vector::logical_vector( std::uint64_t dim, std::uint64_t index ) : dim_( dim ), index_( index )
{
  if ( dim == 0u )
  {
    throw dimension_error( "logical vector dimension must be positive" );
  }
  if ( index == 0u || index > dim )
  {
    throw index_error( "logical vector index " + std::to_string( index ) + " outside 1.." + std::to_string( dim ) );
  }
}

logical_vector truth_vector( bool value )
{
  return logical_vector( 2u, value ? 1u : 2u );
}

logical_matrix::logical_matrix( std::uint64_t rows, std::vector<std::uint32_t> indices )
    : rows_( rows ), indices_( std::move( indices ) )
{
  if ( rows == 0u || indices_.empty() )
  {
    throw dimension_error( "logical matrix must have at least one row and one column" );
  }
  if ( rows > std::numeric_limits<std::uint32_t>::max() )
  {
    throw size_limit_error( "logical matrix row count exceeds the index range" );
  }
  check_logical_columns( indices_.size() );
  for ( std::size_t c = 0; c < indices_.size(); ++c )
  {
    if ( indices_[c] == 0u || indices_[c] > rows )
    {
      throw index_error( "column " + std::to_string( c + 1 ) + " has index " + std::to_string( indices_[c] ) +
                         " outside 1.." + std::to_string( rows ) );
    }
  }
}

logical_matrix logical_matrix::transition( unsigned n_vars, std::vector<std::uint32_t> indices )
{
  if ( n_vars >= 31u )
  {
    throw size_limit_error( "transition matrix arity too large" );
  }
  const std::uint64_t dim = std::uint64_t{ 1 } << n_vars;
  if ( indices.size() != dim )
  {
    throw dimension_error( "transition matrix over " + std::to_string( n_vars ) + " variables needs " +
                           std::to_string( dim ) + " columns, got " + std::to_string( indices.size() ) );
  }
  return logical_matrix( dim, std::move( indices ) );
}

logical_matrix logical_matrix::identity( std::uint64_t dim )
{
  check_logical_columns( dim );
  std::vector<std::uint32_t> indices( dim );
  std::iota( indices.begin(), indices.end(), std::uint32_t{ 1 } );
  return logical_matrix( dim, std::move( indices ) );
}

logical_matrix logical_matrix::from_vector( const logical_vector& v )
{
  return logical_matrix( v.dim(), { static_cast<std::uint32_t>( v.index() ) } );
}

std::uint32_t logical_matrix::at( std::uint64_t col ) const
{
  if ( col == 0u || col > indices_.size() )
  {
    throw index_error( "column " + std::to_string( col ) + " outside 1.." + std::to_string( indices_.size() ) );
  }
  return indices_[col - 1];
}

unsigned logical_matrix::n_vars() const noexcept
{
  return is_transition() ? static_cast<unsigned>( std::countr_zero( rows_ ) ) : 0u;
}

bool logical_matrix::is_transition() const noexcept
{
  return rows_ == indices_.size() && std::has_single_bit( rows_ );
}

logical_vector logical_matrix::column( std::uint64_t col ) const
{
  return logical_vector( rows_, at( col ) );
}

std::ostream& operator<<( std::ostream& os, const logical_vector& v )
{
  return os << "delta " << v.dim() << "^" << v.index();
}

std::ostream& operator<<( std::ostream& os, const logical_matrix& m )
{
  os << "delta " << m.rows() << " [";
  const auto idx = m.indices();
  for ( std::size_t c = 0; c < idx.size(); ++c )
  {
    os << ( c ? " " : "" ) << idx[c];
  }
  return os << "]";
}

logical_vector stp_logical( const logical_matrix& a, const logical_vector& v )
{
  if ( v.dim() != a.cols() )
  {
    throw dimension_error( "vector of dimension " + std::to_string( v.dim() ) + " does not match " +
                           std::to_string( a.cols() ) + " matrix columns" );
  }
  return logical_vector( a.rows(), a.indices()[v.index() - 1] );
}

logical_matrix stp_logical( const logical_matrix& a, const logical_matrix& b )
{
  // Column (c', t') of B ⊗ I_{α/p} carries its 1 at row b[c'] (α/p) + t'; that
  // row selects column (c, t) of A ⊗ I_{α/n}, whose 1 sits at a[c] (α/n) + t.
  const std::uint64_t n = a.cols();
  const std::uint64_t p = b.rows();
  const std::uint64_t alpha = std::lcm( n, p );
  const std::uint64_t pad_a = alpha / n;
  const std::uint64_t pad_b = alpha / p;

  const std::uint64_t rows = a.rows() * pad_a;
  const std::uint64_t cols = b.cols() * pad_b;
  check_logical_columns( cols );

  const auto ai = a.indices();
  const auto bi = b.indices();
  std::vector<std::uint32_t> result( cols );
  for ( std::uint64_t cb = 0; cb < b.cols(); ++cb )
  {
    for ( std::uint64_t tb = 0; tb < pad_b; ++tb )
    {
      const std::uint64_t k = ( bi[cb] - 1u ) * pad_b + tb;
      const std::uint64_t ca = k / pad_a;
      const std::uint64_t ta = k % pad_a;
      result[cb * pad_b + tb] = static_cast<std::uint32_t>( ( ai[ca] - 1u ) * pad_a + ta + 1u );
    }
  }
  return logical_matrix( rows, std::move( result ) );
}

logical_vector stp_logical( const logical_vector& a, const logical_vector& b )
{
  const std::uint64_t dim = a.dim() * b.dim();
  if ( a.dim() != 0u && dim / a.dim() != b.dim() )
  {
    throw size_limit_error( "vector product dimension overflows" );
  }
  return logical_vector( dim, ( a.index() - 1u ) * b.dim() + b.index() );
}

logical_matrix swap_logical( std::uint64_t m, std::uint64_t p )
{
  if ( m == 0u || p == 0u )
  {
    throw dimension_error( "swap matrix dimensions must be positive" );
  }
  check_logical_columns( m * p );
  std::vector<std::uint32_t> indices( m * p );
  for ( std::uint64_t i = 0; i < m; ++i )
  {
    for ( std::uint64_t j = 0; j < p; ++j )
    {
      // x ⊗ y has its 1 at i p + j; y ⊗ x has it at j m + i.
      indices[i * p + j] = static_cast<std::uint32_t>( j * m + i + 1u );
    }
  }
  return logical_matrix( m * p, std::move( indices ) );
}

logical_matrix s_matrix( unsigned i, unsigned n )
{
  if ( n == 0u || i == 0u || i > n )
  {
    throw index_error( "S_i^n needs 1 <= i <= n, got i = " + std::to_string( i ) + ", n = " + std::to_string( n ) );
  }
  if ( n >= 31u )
  {
    throw size_limit_error( "S_i^n arity too large" );
  }
  const std::uint64_t cols = std::uint64_t{ 1 } << n;
  check_logical_columns( cols );
  const unsigned shift = n - i;
  std::vector<std::uint32_t> indices( cols );
  for ( std::uint64_t c = 0; c < cols; ++c )
  {
    indices[c] = ( ( c >> shift ) & 1u ) ? 2u : 1u;
  }
  return logical_matrix( 2u, std::move( indices ) );
}

logical_matrix negation_matrix()
{
  return logical_matrix( 2u, { 2u, 1u } );
}

} // namespace bnkmap
