#include <bnkmap/formats.hpp>

#include <bit>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace bnkmap
{

namespace
{

struct token
{
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_space( char c ) { return std::isspace( static_cast<unsigned char>( c ) ) != 0; }

bool is_digit( char c ) { return std::isdigit( static_cast<unsigned char>( c ) ) != 0; }

/// Splits on whitespace, treats `[` and `]` as separate tokens, drops comments.
std::vector<token> tokenize( std::string_view text )
{
  std::vector<token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  const auto advance = [&]() {
    if ( text[i] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
    ++i;
  };
  while ( i < text.size() )
  {
    const char c = text[i];
    if ( c == '#' )
    {
      while ( i < text.size() && text[i] != '\n' )
      {
        advance();
      }
    }
    else if ( is_space( c ) )
    {
      advance();
    }
    else if ( c == '[' || c == ']' )
    {
      tokens.push_back( { std::string( 1, c ), line, column } );
      advance();
    }
    else
    {
      token t{ {}, line, column };
      while ( i < text.size() && !is_space( text[i] ) && text[i] != '#' && text[i] != '[' && text[i] != ']' )
      {
        t.text += text[i];
        advance();
      }
      tokens.push_back( std::move( t ) );
    }
  }
  return tokens;
}

std::optional<std::uint64_t> parse_count( const std::string& s )
{
  if ( s.empty() || s.size() > 18u )
  {
    return std::nullopt;
  }
  std::uint64_t v = 0;
  for ( char c : s )
  {
    if ( !is_digit( c ) )
    {
      return std::nullopt;
    }
    v = v * 10u + static_cast<unsigned>( c - '0' );
  }
  return v;
}

} // namespace

input_format detect_format( std::string_view text )
{
  const auto tokens = tokenize( text );
  return !tokens.empty() && tokens.front().text == "delta" ? input_format::matrix : input_format::network;
}

boolean_network parse_network_file( std::string_view text, const size_limits& limits )
{
  struct rule_line
  {
    std::size_t line;
    std::size_t expr_column;
    std::string_view expr;
  };
  std::map<std::uint64_t, rule_line> rules;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    ++line_no;
    const std::size_t end = std::min( text.find( '\n', start ), text.size() );
    std::string_view line = text.substr( start, end - start );
    start = end + 1;

    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    std::size_t pos = 0;
    const auto skip = [&]() {
      while ( pos < line.size() && is_space( line[pos] ) )
      {
        ++pos;
      }
    };
    const auto fail = [&]( const std::string& what ) -> void { throw parse_error( what, line_no, pos + 1 ); };

    skip();
    if ( pos == line.size() )
    {
      continue;
    }
    if ( line[pos] != 'x' )
    {
      fail( "expected a rule of the form x<r>' = <expr>" );
    }
    const std::size_t index_column = pos;
    ++pos;
    const std::size_t digits_start = pos;
    while ( pos < line.size() && is_digit( line[pos] ) )
    {
      ++pos;
    }
    const auto index = parse_count( std::string( line.substr( digits_start, pos - digits_start ) ) );
    if ( !index || *index == 0u )
    {
      fail( "expected a node number after 'x'" );
    }
    if ( pos >= line.size() || line[pos] != '\'' )
    {
      fail( "expected ' after the node name" );
    }
    ++pos;
    skip();
    if ( pos >= line.size() || line[pos] != '=' )
    {
      fail( "expected '='" );
    }
    ++pos;
    if ( rules.contains( *index ) )
    {
      pos = index_column;
      fail( "duplicate rule for x" + std::to_string( *index ) );
    }
    rules.emplace( *index, rule_line{ line_no, pos, line.substr( pos ) } );
  }

  if ( rules.empty() )
  {
    throw parse_error( "no rules found", line_no, 1 );
  }
  const auto n = rules.size();
  if ( n > limits.max_n )
  {
    throw size_limit_error( "network with " + std::to_string( n ) + " nodes exceeds the cap of " +
                            std::to_string( limits.max_n ) );
  }

  std::vector<bool_expr> exprs;
  std::uint64_t expected = 1;
  for ( const auto& [index, rule] : rules )
  {
    if ( index != expected )
    {
      throw parse_error( "rule for x" + std::to_string( expected ) + " is missing (" + std::to_string( n ) +
                             " rules define x1..x" + std::to_string( n ) + ")",
                         rule.line, 1 );
    }
    ++expected;
    try
    {
      exprs.push_back( parse_expr( rule.expr, static_cast<unsigned>( n ) ) );
    }
    catch ( const parse_error& e )
    {
      throw parse_error( e.message(), rule.line, rule.expr_column + e.column() );
    }
  }
  return boolean_network( std::move( exprs ) );
}

logical_matrix parse_matrix_file( std::string_view text, const size_limits& limits )
{
  const auto tokens = tokenize( text );
  std::size_t t = 0;
  const auto fail_at = [&]( const std::string& what, std::size_t at ) -> void {
    if ( at < tokens.size() )
    {
      throw parse_error( what, tokens[at].line, tokens[at].column );
    }
    const std::size_t line = tokens.empty() ? 1u : tokens.back().line;
    const std::size_t column = tokens.empty() ? 1u : tokens.back().column + tokens.back().text.size();
    throw parse_error( what + " (unexpected end of input)", line, column );
  };

  if ( tokens.empty() || tokens[0].text != "delta" )
  {
    fail_at( "expected 'delta'", 0 );
  }
  t = 1;
  const auto dim = t < tokens.size() ? parse_count( tokens[t].text ) : std::nullopt;
  if ( !dim )
  {
    fail_at( "expected the matrix dimension after 'delta'", t );
  }
  if ( *dim < 2u || !std::has_single_bit( *dim ) )
  {
    fail_at( "dimension " + tokens[t].text + " is not a power of two >= 2", t );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( *dim ) );
  check_arity( n, limits );
  ++t;
  if ( t >= tokens.size() || tokens[t].text != "[" )
  {
    fail_at( "expected '['", t );
  }
  ++t;

  std::vector<std::uint32_t> indices;
  while ( t < tokens.size() && tokens[t].text != "]" )
  {
    const auto value = parse_count( tokens[t].text );
    if ( !value )
    {
      fail_at( "expected a column index, found '" + tokens[t].text + "'", t );
    }
    if ( *value == 0u || *value > *dim )
    {
      fail_at( "index " + tokens[t].text + " outside 1.." + std::to_string( *dim ), t );
    }
    if ( indices.size() == *dim )
    {
      fail_at( "more than " + std::to_string( *dim ) + " column indices", t );
    }
    indices.push_back( static_cast<std::uint32_t>( *value ) );
    ++t;
  }
  if ( t >= tokens.size() )
  {
    fail_at( "expected ']'", t );
  }
  if ( indices.size() != *dim )
  {
    fail_at( "expected " + std::to_string( *dim ) + " column indices, found " + std::to_string( indices.size() ), t );
  }
  ++t;
  if ( t < tokens.size() )
  {
    fail_at( "unexpected '" + tokens[t].text + "' after the matrix", t );
  }
  return logical_matrix::transition( n, std::move( indices ) );
}

std::string format_network( const boolean_network& bn, const std::vector<std::string>& comments )
{
  std::ostringstream os;
  for ( unsigned r = 1; r <= bn.n(); ++r )
  {
    os << 'x' << r << "' = " << to_string( bn.rule( r ) );
    if ( r <= comments.size() && !comments[r - 1].empty() )
    {
      os << "  # " << comments[r - 1];
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix( const logical_matrix& m )
{
  std::ostringstream os;
  os << m << '\n';
  return os.str();
}

} // namespace bnkmap
