#include <bnkmap/encoding.hpp>
#include <bnkmap/network.hpp>

#include <bit>

namespace bnkmap
{

boolean_network::boolean_network( std::vector<bool_expr> rules ) : rules_( std::move( rules ) )
{
  if ( rules_.empty() )
  {
    throw dimension_error( "a Boolean network needs at least one node" );
  }
  for ( std::size_t r = 0; r < rules_.size(); ++r )
  {
    if ( max_var( rules_[r] ) > rules_.size() )
    {
      throw index_error( "rule of x" + std::to_string( r + 1 ) + " references x" +
                         std::to_string( max_var( rules_[r] ) ) + " beyond n = " + std::to_string( rules_.size() ) );
    }
  }
}

const bool_expr& boolean_network::rule( unsigned r ) const
{
  if ( r == 0u || r > rules_.size() )
  {
    throw index_error( "node " + std::to_string( r ) + " outside 1.." + std::to_string( rules_.size() ) );
  }
  return rules_[r - 1];
}

kmap_cells net_kmap( const boolean_network& bn, const size_limits& limits )
{
  const unsigned n = bn.n();
  check_arity( n, limits );
  kmap_cells km{ n, std::vector<std::uint32_t>( state_count( n ), 0u ) };
  for ( unsigned r = 1; r <= n; ++r )
  {
    const auto t = tabulate( bn.rule( r ), n );
    const std::uint32_t weight = std::uint32_t{ 1 } << ( n - r );
    for ( std::uint64_t k = 0; k < km.cells.size(); ++k )
    {
      if ( t.bit( k ) )
      {
        km.cells[k] |= weight;
      }
    }
  }
  return km;
}

logical_matrix to_matrix( const boolean_network& bn, const size_limits& limits )
{
  const auto km = net_kmap( bn, limits );
  const std::uint64_t dim = state_count( km.n );
  std::vector<std::uint32_t> indices( dim );
  for ( std::uint64_t r = 1; r <= dim; ++r )
  {
    indices[r - 1] = static_cast<std::uint32_t>( dim - km.cells[dim - r] );
  }
  return logical_matrix::transition( km.n, std::move( indices ) );
}

logical_matrix to_matrix_oracle( const boolean_network& bn, const size_limits& limits )
{
  const unsigned n = bn.n();
  check_arity( n, limits );
  const std::uint64_t dim = state_count( n );
  std::vector<std::uint32_t> indices( dim );
  for ( std::uint64_t k = 0; k < dim; ++k )
  {
    const state_vector next = step( bn, assignment_of( k, n ) );
    indices[vector_index_of( k, n ) - 1] = static_cast<std::uint32_t>( encode( next ).index() );
  }
  return logical_matrix::transition( n, std::move( indices ) );
}

state_vector step( const boolean_network& bn, const state_vector& s )
{
  if ( s.size() != bn.n() )
  {
    throw dimension_error( "state has " + std::to_string( s.size() ) + " entries, network has " +
                           std::to_string( bn.n() ) + " nodes" );
  }
  const std::uint64_t k = minterm_of( s );
  state_vector bits( s.size() );
  for ( unsigned r = 1; r <= bn.n(); ++r )
  {
    bits[r - 1] = eval_minterm( bn.rule( r ), bn.n(), k );
  }
  return bits;
}

logical_vector encode( const state_vector& s )
{
  if ( s.empty() || s.size() >= 63u )
  {
    throw dimension_error( "state vectors need 1..62 entries" );
  }
  const std::uint64_t k = minterm_of( s );
  const auto n = static_cast<unsigned>( s.size() );
  return logical_vector( state_count( n ), vector_index_of( k, n ) );
}

state_vector decode( const logical_vector& v )
{
  if ( !std::has_single_bit( v.dim() ) || v.dim() < 2u )
  {
    throw dimension_error( "state vectors have dimension 2^n with n >= 1" );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( v.dim() ) );
  return assignment_of( minterm_of_index( v.index(), n ), n );
}

std::vector<truth_table> truth_tables( const boolean_network& bn, const size_limits& limits )
{
  check_arity( bn.n(), limits );
  std::vector<truth_table> tables;
  tables.reserve( bn.n() );
  for ( unsigned r = 1; r <= bn.n(); ++r )
  {
    tables.push_back( tabulate( bn.rule( r ), bn.n() ) );
  }
  return tables;
}

} // namespace bnkmap
