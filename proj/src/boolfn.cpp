#include <bnkmap/boolfn.hpp>
#include <bnkmap/encoding.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace bnkmap
{

bool_expr::bool_expr( kind op, unsigned index, bool value, std::vector<bool_expr> operands )
    : op_( op ), index_( index ), value_( value ), operands_( std::move( operands ) )
{
}

bool_expr bool_expr::var( unsigned index )
{
  if ( index == 0u )
  {
    throw index_error( "variable indices start at 1" );
  }
  return bool_expr( kind::variable, index, false, {} );
}

bool_expr bool_expr::constant( bool value )
{
  return bool_expr( kind::constant, 0u, value, {} );
}

bool_expr bool_expr::negate( bool_expr operand )
{
  std::vector<bool_expr> ops;
  ops.push_back( std::move( operand ) );
  return bool_expr( kind::negation, 0u, false, std::move( ops ) );
}

namespace
{

void require_nary( const std::vector<bool_expr>& operands )
{
  if ( operands.size() < 2u )
  {
    throw dimension_error( "n-ary operators need at least two operands" );
  }
}

} // namespace

bool_expr bool_expr::conjoin( std::vector<bool_expr> operands )
{
  require_nary( operands );
  return bool_expr( kind::conjunction, 0u, false, std::move( operands ) );
}

bool_expr bool_expr::disjoin( std::vector<bool_expr> operands )
{
  require_nary( operands );
  return bool_expr( kind::disjunction, 0u, false, std::move( operands ) );
}

bool_expr bool_expr::exclusive( std::vector<bool_expr> operands )
{
  require_nary( operands );
  return bool_expr( kind::exclusive_or, 0u, false, std::move( operands ) );
}

bool_expr make_product( std::vector<bool_expr> operands )
{
  if ( operands.empty() )
  {
    return bool_expr::constant( true );
  }
  if ( operands.size() == 1u )
  {
    return std::move( operands.front() );
  }
  return bool_expr::conjoin( std::move( operands ) );
}

bool_expr make_sum( std::vector<bool_expr> operands )
{
  if ( operands.empty() )
  {
    return bool_expr::constant( false );
  }
  if ( operands.size() == 1u )
  {
    return std::move( operands.front() );
  }
  return bool_expr::disjoin( std::move( operands ) );
}

/* parsing */

namespace
{

class expr_parser
{
public:
  expr_parser( std::string_view text, unsigned n_vars ) : text_( text ), n_vars_( n_vars ) {}

  bool_expr parse()
  {
    skip_space();
    if ( at_end() )
    {
      fail( "empty expression" );
    }
    auto e = parse_chain( 0 );
    skip_space();
    if ( !at_end() )
    {
      fail( std::string( "unexpected '" ) + text_[pos_] + "'" );
    }
    return e;
  }

private:
  // Binary levels from loosest to tightest.
  static constexpr char level_glyph[] = { '|', '^', '&' };

  bool_expr parse_chain( int level )
  {
    if ( level == 3 )
    {
      return parse_unary();
    }
    std::vector<bool_expr> operands;
    operands.push_back( parse_chain( level + 1 ) );
    while ( peek() == level_glyph[level] )
    {
      ++pos_;
      operands.push_back( parse_chain( level + 1 ) );
    }
    if ( operands.size() == 1u )
    {
      return std::move( operands.front() );
    }
    switch ( level )
    {
    case 0:
      return bool_expr::disjoin( std::move( operands ) );
    case 1:
      return bool_expr::exclusive( std::move( operands ) );
    default:
      return bool_expr::conjoin( std::move( operands ) );
    }
  }

  bool_expr parse_unary()
  {
    if ( peek() == '!' )
    {
      ++pos_;
      return bool_expr::negate( parse_unary() );
    }
    return parse_primary();
  }

  bool_expr parse_primary()
  {
    const char c = peek();
    const std::size_t start = pos_;
    if ( c == '(' )
    {
      ++pos_;
      auto inner = parse_chain( 0 );
      if ( peek() != ')' )
      {
        fail( at_end() ? "missing ')'" : std::string( "expected ')' but found '" ) + text_[pos_] + "'" );
      }
      ++pos_;
      return inner;
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      return bool_expr::constant( c == '1' );
    }
    if ( c == 'x' )
    {
      ++pos_;
      std::uint64_t index = 0;
      std::size_t digits = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        index = std::min<std::uint64_t>( index * 10u + static_cast<unsigned>( text_[pos_] - '0' ), 1u << 30 );
        ++pos_;
        ++digits;
      }
      if ( digits == 0u )
      {
        fail( "expected variable number after 'x'" );
      }
      if ( index == 0u || index > n_vars_ )
      {
        pos_ = start;
        fail( "variable x" + std::to_string( index ) + " outside x1..x" + std::to_string( n_vars_ ) );
      }
      return bool_expr::var( static_cast<unsigned>( index ) );
    }
    if ( at_end() )
    {
      fail( "unexpected end of expression" );
    }
    fail( std::string( "unexpected '" ) + c + "'" );
  }

  char peek()
  {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail( const std::string& what ) const { throw parse_error( what, 1u, pos_ + 1u ); }

  std::string_view text_;
  unsigned n_vars_;
  std::size_t pos_ = 0;
};

int precedence( bool_expr::kind k )
{
  switch ( k )
  {
  case bool_expr::kind::disjunction:
    return 1;
  case bool_expr::kind::exclusive_or:
    return 2;
  case bool_expr::kind::conjunction:
    return 3;
  case bool_expr::kind::negation:
    return 4;
  default:
    return 5;
  }
}

void print( const bool_expr& e, std::ostream& os )
{
  using kind = bool_expr::kind;
  switch ( e.op() )
  {
  case kind::variable:
    os << 'x' << e.index();
    return;
  case kind::constant:
    os << ( e.value() ? '1' : '0' );
    return;
  case kind::negation:
  {
    const auto& child = e.operands().front();
    os << '!';
    const bool wrap = precedence( child.op() ) < precedence( kind::negation );
    os << ( wrap ? "(" : "" );
    print( child, os );
    os << ( wrap ? ")" : "" );
    return;
  }
  default:
  {
    const char* glyph = e.op() == kind::conjunction ? " & " : e.op() == kind::disjunction ? " | " : " ^ ";
    bool first = true;
    for ( const auto& child : e.operands() )
    {
      os << ( first ? "" : glyph );
      first = false;
      // Same-operator children are parenthesized so the chain is not re-flattened.
      const bool wrap = precedence( child.op() ) <= precedence( e.op() );
      os << ( wrap ? "(" : "" );
      print( child, os );
      os << ( wrap ? ")" : "" );
    }
  }
  }
}

} // namespace

bool_expr parse_expr( std::string_view text, unsigned n_vars )
{
  return expr_parser( text, n_vars ).parse();
}

std::string to_string( const bool_expr& e )
{
  std::ostringstream os;
  print( e, os );
  return os.str();
}

/* evaluation */

namespace
{

template <typename VarValue>
bool evaluate( const bool_expr& e, const VarValue& value_of )
{
  using kind = bool_expr::kind;
  switch ( e.op() )
  {
  case kind::variable:
    return value_of( e.index() );
  case kind::constant:
    return e.value();
  case kind::negation:
    return !evaluate( e.operands().front(), value_of );
  case kind::conjunction:
    return std::all_of( e.operands().begin(), e.operands().end(),
                        [&]( const bool_expr& c ) { return evaluate( c, value_of ); } );
  case kind::disjunction:
    return std::any_of( e.operands().begin(), e.operands().end(),
                        [&]( const bool_expr& c ) { return evaluate( c, value_of ); } );
  case kind::exclusive_or:
  {
    bool acc = false;
    for ( const auto& c : e.operands() )
    {
      acc = acc != evaluate( c, value_of );
    }
    return acc;
  }
  }
  return false;
}

} // namespace

bool eval_expr( const bool_expr& e, const std::vector<bool>& assignment )
{
  return evaluate( e, [&]( unsigned r ) {
    if ( r > assignment.size() )
    {
      throw index_error( "assignment has no value for x" + std::to_string( r ) );
    }
    return assignment[r - 1];
  } );
}

bool eval_minterm( const bool_expr& e, unsigned n, std::uint64_t k )
{
  return evaluate( e, [&]( unsigned r ) {
    if ( r > n )
    {
      throw index_error( "formula references x" + std::to_string( r ) + " beyond n = " + std::to_string( n ) );
    }
    return minterm_bit( k, n, r );
  } );
}

unsigned max_var( const bool_expr& e )
{
  unsigned m = e.op() == bool_expr::kind::variable ? e.index() : 0u;
  for ( const auto& c : e.operands() )
  {
    m = std::max( m, max_var( c ) );
  }
  return m;
}

bool_expr eliminate_xor( const bool_expr& e )
{
  using kind = bool_expr::kind;
  switch ( e.op() )
  {
  case kind::variable:
  case kind::constant:
    return e;
  case kind::negation:
    return bool_expr::negate( eliminate_xor( e.operands().front() ) );
  case kind::conjunction:
  case kind::disjunction:
  {
    std::vector<bool_expr> ops;
    for ( const auto& c : e.operands() )
    {
      ops.push_back( eliminate_xor( c ) );
    }
    return e.op() == kind::conjunction ? bool_expr::conjoin( std::move( ops ) ) : bool_expr::disjoin( std::move( ops ) );
  }
  case kind::exclusive_or:
  {
    // a ^ b = a & !b | !a & b, folded left over the chain.
    bool_expr acc = eliminate_xor( e.operands().front() );
    for ( std::size_t i = 1; i < e.operands().size(); ++i )
    {
      bool_expr rhs = eliminate_xor( e.operands()[i] );
      acc = bool_expr::disjoin( { bool_expr::conjoin( { acc, bool_expr::negate( rhs ) } ),
                                  bool_expr::conjoin( { bool_expr::negate( acc ), rhs } ) } );
    }
    return acc;
  }
  }
  return e;
}

bool_expr rename_vars( const bool_expr& e, std::span<const unsigned> mapping )
{
  using kind = bool_expr::kind;
  switch ( e.op() )
  {
  case kind::variable:
    if ( e.index() > mapping.size() )
    {
      throw index_error( "no mapping for x" + std::to_string( e.index() ) );
    }
    return bool_expr::var( mapping[e.index() - 1] );
  case kind::constant:
    return e;
  case kind::negation:
    return bool_expr::negate( rename_vars( e.operands().front(), mapping ) );
  default:
  {
    std::vector<bool_expr> ops;
    for ( const auto& c : e.operands() )
    {
      ops.push_back( rename_vars( c, mapping ) );
    }
    if ( e.op() == kind::conjunction )
    {
      return bool_expr::conjoin( std::move( ops ) );
    }
    return e.op() == kind::disjunction ? bool_expr::disjoin( std::move( ops ) ) : bool_expr::exclusive( std::move( ops ) );
  }
  }
}

/* truth tables and canonical forms */

truth_table::truth_table( unsigned n_vars, std::vector<bool> bits ) : n_vars_( n_vars ), bits_( std::move( bits ) )
{
  if ( n_vars >= 31u )
  {
    throw size_limit_error( "truth table arity too large" );
  }
  if ( bits_.size() != state_count( n_vars ) )
  {
    throw dimension_error( "truth table over " + std::to_string( n_vars ) + " variables needs " +
                           std::to_string( state_count( n_vars ) ) + " bits, got " + std::to_string( bits_.size() ) );
  }
}

truth_table truth_table::constant( unsigned n_vars, bool value )
{
  return truth_table( n_vars, std::vector<bool>( state_count( n_vars ), value ) );
}

truth_table tabulate( const bool_expr& e, unsigned n_vars )
{
  if ( max_var( e ) > n_vars )
  {
    throw index_error( "formula references x" + std::to_string( max_var( e ) ) + " beyond n = " + std::to_string( n_vars ) );
  }
  std::vector<bool> bits( state_count( n_vars ) );
  for ( std::uint64_t k = 0; k < bits.size(); ++k )
  {
    bits[k] = eval_minterm( e, n_vars, k );
  }
  return truth_table( n_vars, std::move( bits ) );
}

minterm_form to_minterms( const truth_table& t )
{
  minterm_form m{ t.n_vars(), {} };
  for ( std::uint64_t k = 0; k < t.size(); ++k )
  {
    if ( t.bit( k ) )
    {
      m.on_set.push_back( k );
    }
  }
  return m;
}

truth_table from_minterms( const minterm_form& m )
{
  std::vector<bool> bits( state_count( m.n_vars ) );
  for ( auto k : m.on_set )
  {
    if ( k >= bits.size() )
    {
      throw index_error( "minterm " + std::to_string( k ) + " outside 0.." + std::to_string( bits.size() - 1 ) );
    }
    bits[k] = true;
  }
  return truth_table( m.n_vars, std::move( bits ) );
}

bool_expr minterm_to_expr( const minterm_form& m )
{
  if ( m.on_set.size() == state_count( m.n_vars ) )
  {
    return bool_expr::constant( true );
  }
  std::vector<bool_expr> terms;
  terms.reserve( m.on_set.size() );
  for ( auto k : m.on_set )
  {
    std::vector<bool_expr> literals;
    for ( unsigned r = 1; r <= m.n_vars; ++r )
    {
      auto v = bool_expr::var( r );
      literals.push_back( minterm_bit( k, m.n_vars, r ) ? std::move( v ) : bool_expr::negate( std::move( v ) ) );
    }
    terms.push_back( make_product( std::move( literals ) ) );
  }
  return make_sum( std::move( terms ) );
}

std::string to_sigma_string( const minterm_form& m )
{
  std::string s = "m(";
  for ( std::size_t i = 0; i < m.on_set.size(); ++i )
  {
    s += ( i ? "," : "" ) + std::to_string( m.on_set[i] );
  }
  return s + ")";
}

logical_matrix structure_matrix( const truth_table& t )
{
  const unsigned n = t.n_vars();
  std::vector<std::uint32_t> indices( t.size() );
  for ( std::uint64_t r = 1; r <= t.size(); ++r )
  {
    indices[r - 1] = t.bit( minterm_of_index( r, n ) ) ? 1u : 2u;
  }
  return logical_matrix( 2u, std::move( indices ) );
}

truth_table from_structure_matrix( const logical_matrix& m )
{
  if ( m.rows() != 2u || !std::has_single_bit( m.cols() ) )
  {
    throw dimension_error( "structure matrices are 2 x 2^n" );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( m.cols() ) );
  std::vector<bool> bits( m.cols() );
  for ( std::uint64_t r = 1; r <= m.cols(); ++r )
  {
    bits[minterm_of_index( r, n )] = m.at( r ) == 1u;
  }
  return truth_table( n, std::move( bits ) );
}

/* K-map layout */

namespace
{

std::uint64_t gray( std::uint64_t i ) { return i ^ ( i >> 1 ); }

std::string bit_string( std::uint64_t v, unsigned width )
{
  std::string s( width, '0' );
  for ( unsigned b = 0; b < width; ++b )
  {
    if ( ( v >> ( width - 1 - b ) ) & 1u )
    {
      s[b] = '1';
    }
  }
  return s;
}

} // namespace

kmap_layout::kmap_layout( unsigned n ) : n( n ), col_vars( n - n / 2 ), row_vars( n / 2 ) {}

std::uint64_t kmap_layout::minterm_at( std::uint64_t row, std::uint64_t col ) const
{
  return ( gray( col ) << row_vars ) | gray( row );
}

std::string kmap_layout::row_header( std::uint64_t row ) const { return bit_string( gray( row ), row_vars ); }

std::string kmap_layout::col_header( std::uint64_t col ) const { return bit_string( gray( col ), col_vars ); }

std::string render_kmap( unsigned n, const std::function<std::string( std::uint64_t )>& cell )
{
  const kmap_layout layout( n );

  std::string corner;
  for ( unsigned r = layout.col_vars + 1; r <= n; ++r )
  {
    corner += "x" + std::to_string( r );
  }
  corner += "\\";
  for ( unsigned r = 1; r <= layout.col_vars; ++r )
  {
    corner += "x" + std::to_string( r );
  }

  std::vector<std::vector<std::string>> cells( layout.rows(), std::vector<std::string>( layout.cols() ) );
  std::size_t width = layout.col_vars;
  for ( std::uint64_t row = 0; row < layout.rows(); ++row )
  {
    for ( std::uint64_t col = 0; col < layout.cols(); ++col )
    {
      cells[row][col] = cell( layout.minterm_at( row, col ) );
      width = std::max( width, cells[row][col].size() );
    }
  }
  const std::size_t label = std::max<std::size_t>( corner.size(), layout.row_vars );

  auto pad = []( const std::string& s, std::size_t w ) { return std::string( w - std::min( w, s.size() ), ' ' ) + s; };

  std::ostringstream os;
  os << pad( corner, label ) << " |";
  for ( std::uint64_t col = 0; col < layout.cols(); ++col )
  {
    os << ' ' << pad( layout.col_header( col ), width );
  }
  os << '\n';
  for ( std::uint64_t row = 0; row < layout.rows(); ++row )
  {
    os << pad( layout.row_header( row ), label ) << " |";
    for ( std::uint64_t col = 0; col < layout.cols(); ++col )
    {
      os << ' ' << pad( cells[row][col], width );
    }
    os << '\n';
  }
  return os.str();
}

std::string render_kmap( const truth_table& t )
{
  return render_kmap( t.n_vars(), [&]( std::uint64_t k ) { return std::string( t.bit( k ) ? "1" : "0" ); } );
}

} // namespace bnkmap
