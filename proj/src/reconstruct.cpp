#include <bnkmap/encoding.hpp>
#include <bnkmap/reconstruct.hpp>

#include <bit>

namespace bnkmap
{

namespace
{

void require_transition( const logical_matrix& m )
{
  if ( !m.is_transition() || m.n_vars() == 0u )
  {
    throw dimension_error( "expected a 2^n x 2^n transition matrix with n >= 1" );
  }
}

unsigned structure_arity( const logical_matrix& m )
{
  if ( m.rows() != 2u || !std::has_single_bit( m.cols() ) )
  {
    throw dimension_error( "structure matrices are 2 x 2^n" );
  }
  return static_cast<unsigned>( std::countr_zero( m.cols() ) );
}

} // namespace

kmap_cells matrix_kmap( const logical_matrix& transition )
{
  require_transition( transition );
  const unsigned n = transition.n_vars();
  const std::uint64_t dim = state_count( n );
  kmap_cells km{ n, std::vector<std::uint32_t>( dim ) };
  for ( std::uint64_t k = 0; k < dim; ++k )
  {
    km.cells[k] = static_cast<std::uint32_t>( dim - transition.at( dim - k ) );
  }
  return km;
}

truth_table bitplane( const kmap_cells& km, unsigned r )
{
  if ( r == 0u || r > km.n )
  {
    throw index_error( "node " + std::to_string( r ) + " outside 1.." + std::to_string( km.n ) );
  }
  std::vector<bool> bits( km.cells.size() );
  for ( std::size_t k = 0; k < bits.size(); ++k )
  {
    bits[k] = ( ( km.cells[k] >> ( km.n - r ) ) & 1u ) != 0u;
  }
  return truth_table( km.n, std::move( bits ) );
}

std::vector<minterm_form> reconstruct_minterms( const logical_matrix& transition )
{
  const auto km = matrix_kmap( transition );
  std::vector<minterm_form> forms;
  forms.reserve( km.n );
  for ( unsigned r = 1; r <= km.n; ++r )
  {
    forms.push_back( to_minterms( bitplane( km, r ) ) );
  }
  return forms;
}

boolean_network reconstruct_kmap( const logical_matrix& transition )
{
  std::vector<bool_expr> rules;
  for ( const auto& form : reconstruct_minterms( transition ) )
  {
    rules.push_back( minterm_to_expr( form ) );
  }
  return boolean_network( std::move( rules ) );
}

bool independent_of( const truth_table& t, unsigned j )
{
  if ( j == 0u || j > t.n_vars() )
  {
    throw index_error( "variable " + std::to_string( j ) + " outside 1.." + std::to_string( t.n_vars() ) );
  }
  const std::uint64_t flip = std::uint64_t{ 1 } << ( t.n_vars() - j );
  for ( std::uint64_t k = 0; k < t.size(); ++k )
  {
    if ( t.bit( k ) != t.bit( k ^ flip ) )
    {
      return false;
    }
  }
  return true;
}

std::vector<unsigned> support( const truth_table& t )
{
  std::vector<unsigned> vars;
  for ( unsigned j = 1; j <= t.n_vars(); ++j )
  {
    if ( !independent_of( t, j ) )
    {
      vars.push_back( j );
    }
  }
  return vars;
}

logical_matrix swap_for_variable( unsigned j, swap_convention convention )
{
  if ( j == 0u || j > 30u )
  {
    throw index_error( "variable index " + std::to_string( j ) + " out of range" );
  }
  const std::uint64_t lead = std::uint64_t{ 1 } << ( j - 1u );
  return convention == swap_convention::standard ? swap_logical( 2u, lead ) : swap_logical( lead, 2u );
}

swap_convention detect_swap_convention()
{
  static const swap_convention detected = [] {
    const auto agrees = []( swap_convention convention ) {
      for ( unsigned n = 1; n <= 3; ++n )
      {
        const std::uint64_t functions = std::uint64_t{ 1 } << state_count( n );
        for ( std::uint64_t f = 0; f < functions; ++f )
        {
          std::vector<bool> bits( state_count( n ) );
          for ( std::uint64_t k = 0; k < bits.size(); ++k )
          {
            bits[k] = ( ( f >> k ) & 1u ) != 0u;
          }
          const truth_table t( n, std::move( bits ) );
          const auto m = structure_matrix( t );
          for ( unsigned j = 1; j <= n; ++j )
          {
            if ( cheng_condition( m, j, n, convention ).holds != independent_of( t, j ) )
            {
              return false;
            }
          }
        }
      }
      return true;
    };
    if ( agrees( swap_convention::standard ) )
    {
      return swap_convention::standard;
    }
    if ( agrees( swap_convention::transposed ) )
    {
      return swap_convention::transposed;
    }
    throw error( "no swap-matrix convention reproduces variable independence" );
  }();
  return detected;
}

logical_matrix cheng_structure( const logical_matrix& transition, unsigned i )
{
  require_transition( transition );
  const unsigned n = transition.n_vars();
  if ( i == 0u || i > n )
  {
    throw index_error( "node " + std::to_string( i ) + " outside 1.." + std::to_string( n ) );
  }
  return stp_logical( s_matrix( i, n ), transition );
}

cheng_check cheng_condition( const logical_matrix& structure, unsigned j, unsigned n, swap_convention convention )
{
  if ( structure_arity( structure ) != n )
  {
    throw dimension_error( "structure matrix is not 2 x 2^" + std::to_string( n ) );
  }
  if ( j == 0u || j > n )
  {
    throw index_error( "variable " + std::to_string( j ) + " outside 1.." + std::to_string( n ) );
  }
  // STP distributes over the difference, so both terms stay logical.
  const auto shifted = stp_logical( structure, swap_for_variable( j, convention ) );
  const auto negated = stp_logical( shifted, negation_matrix() );
  const auto kept = stp_logical( shifted, logical_matrix::identity( 2u ) );

  cheng_check check{ true, dense_matrix::Zero( 2, static_cast<Eigen::Index>( negated.cols() ) ) };
  for ( std::uint64_t c = 1; c <= negated.cols(); ++c )
  {
    check.residual( negated.at( c ) - 1, static_cast<Eigen::Index>( c - 1 ) ) += 1;
    check.residual( kept.at( c ) - 1, static_cast<Eigen::Index>( c - 1 ) ) -= 1;
  }
  check.holds = check.residual.isZero();
  return check;
}

logical_matrix cheng_eliminate( const logical_matrix& structure, unsigned j, unsigned n, swap_convention convention )
{
  if ( structure_arity( structure ) != n )
  {
    throw dimension_error( "structure matrix is not 2 x 2^" + std::to_string( n ) );
  }
  if ( j == 0u || j > n )
  {
    throw index_error( "variable " + std::to_string( j ) + " outside 1.." + std::to_string( n ) );
  }
  const auto shifted = stp_logical( structure, swap_for_variable( j, convention ) );
  return stp_logical( shifted, logical_matrix::from_vector( truth_vector( true ) ) );
}

cheng_report cheng_reduce( const logical_matrix& transition, const size_limits& limits )
{
  require_transition( transition );
  const unsigned n = transition.n_vars();
  check_arity( n, limits );

  cheng_report report{ detect_swap_convention(), {} };
  for ( unsigned i = 1; i <= n; ++i )
  {
    const auto structure = cheng_structure( transition, i );
    cheng_node_report node{ i, structure, {}, {}, structure, {}, false };
    for ( unsigned j = 1; j <= n; ++j )
    {
      node.full_arity_checks.push_back( cheng_condition( structure, j, n, report.convention ) );
    }
    for ( unsigned v = 1; v <= n; ++v )
    {
      node.remaining.push_back( v );
    }

    bool progress = true;
    while ( progress )
    {
      progress = false;
      const auto arity = static_cast<unsigned>( node.remaining.size() );
      for ( unsigned j = 1; j <= arity; ++j )
      {
        if ( cheng_condition( node.reduced, j, arity, report.convention ).holds )
        {
          node.reduced = cheng_eliminate( node.reduced, j, arity, report.convention );
          node.removed.push_back( node.remaining[j - 1] );
          node.remaining.erase( node.remaining.begin() + ( j - 1 ) );
          progress = true;
          break;
        }
      }
    }
    node.failed = node.removed.empty();
    report.nodes.push_back( std::move( node ) );
  }
  return report;
}

} // namespace bnkmap
