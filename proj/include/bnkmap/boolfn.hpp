#pragma once

#include <bnkmap/stp.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnkmap
{

/// Propositional formula over x_1 ... x_n. Value type; children are owned.
class bool_expr
{
public:
  enum class kind
  {
    variable,
    constant,
    negation,
    conjunction,
    disjunction,
    exclusive_or
  };

  static bool_expr var( unsigned index );
  static bool_expr constant( bool value );
  static bool_expr negate( bool_expr operand );
  /// N-ary operators require at least two operands.
  static bool_expr conjoin( std::vector<bool_expr> operands );
  static bool_expr disjoin( std::vector<bool_expr> operands );
  static bool_expr exclusive( std::vector<bool_expr> operands );

  kind op() const noexcept { return op_; }
  unsigned index() const noexcept { return index_; }
  bool value() const noexcept { return value_; }
  const std::vector<bool_expr>& operands() const noexcept { return operands_; }

  friend bool operator==( const bool_expr&, const bool_expr& ) = default;

private:
  bool_expr( kind op, unsigned index, bool value, std::vector<bool_expr> operands );

  kind op_;
  unsigned index_ = 0;
  bool value_ = false;
  std::vector<bool_expr> operands_;
};

/// Conjunction that collapses: no operands -> 1, one operand -> itself.
bool_expr make_product( std::vector<bool_expr> operands );
/// Disjunction that collapses: no operands -> 0, one operand -> itself.
bool_expr make_sum( std::vector<bool_expr> operands );

/// Parses `x1 & !x2 | x3`-style text. Precedence ! > & > ^ > |, binary
/// operators left-associative; an unparenthesized chain of one operator
/// becomes a single n-ary node. Throws parse_error (line 1).
bool_expr parse_expr( std::string_view text, unsigned n_vars );

/// Inverse of parse_expr: parse_expr(to_string(e)) == e for every tree.
std::string to_string( const bool_expr& e );

bool eval_expr( const bool_expr& e, const std::vector<bool>& assignment );

/// Evaluates on the assignment whose minterm number over n variables is k.
bool eval_minterm( const bool_expr& e, unsigned n, std::uint64_t k );

/// Largest variable index referenced, 0 when the formula is variable-free.
unsigned max_var( const bool_expr& e );

/// Rewrites every Xor into And/Or/Not.
bool_expr eliminate_xor( const bool_expr& e );

/// Replaces x_i by x_{mapping[i-1]}.
bool_expr rename_vars( const bool_expr& e, std::span<const unsigned> mapping );

/// Boolean function of n variables; bit k is the value on minterm k.
class truth_table
{
public:
  truth_table( unsigned n_vars, std::vector<bool> bits );
  static truth_table constant( unsigned n_vars, bool value );

  unsigned n_vars() const noexcept { return n_vars_; }
  std::uint64_t size() const noexcept { return bits_.size(); }
  bool bit( std::uint64_t k ) const { return bits_.at( k ); }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  friend bool operator==( const truth_table&, const truth_table& ) = default;

private:
  unsigned n_vars_;
  std::vector<bool> bits_;
};

truth_table tabulate( const bool_expr& e, unsigned n_vars );

/// Sum-of-minterms: the sorted minterm numbers on which f is true.
struct minterm_form
{
  unsigned n_vars = 0;
  std::vector<std::uint64_t> on_set;

  friend bool operator==( const minterm_form&, const minterm_form& ) = default;
};

minterm_form to_minterms( const truth_table& t );
truth_table from_minterms( const minterm_form& m );

/// Or of full minterm products; empty on-set -> 0, full on-set -> 1.
bool_expr minterm_to_expr( const minterm_form& m );

/// Renders `m(1,2,3)`.
std::string to_sigma_string( const minterm_form& m );

/// 2 x 2^n structure matrix: column r is δ_2^1 iff f is true on minterm 2^n - r.
logical_matrix structure_matrix( const truth_table& t );

/// Inverse of structure_matrix for any 2 x 2^n logical matrix.
truth_table from_structure_matrix( const logical_matrix& m );

/// Gray-code K-map arrangement. Columns carry x_1 ... x_c with
/// c = ceil(n/2); rows carry the remaining floor(n/2) variables.
struct kmap_layout
{
  explicit kmap_layout( unsigned n );

  unsigned n;
  unsigned col_vars;
  unsigned row_vars;

  std::uint64_t rows() const noexcept { return std::uint64_t{ 1 } << row_vars; }
  std::uint64_t cols() const noexcept { return std::uint64_t{ 1 } << col_vars; }

  /// Minterm shown in the square at (row, col), both 0-based display positions.
  std::uint64_t minterm_at( std::uint64_t row, std::uint64_t col ) const;
  std::string row_header( std::uint64_t row ) const;
  std::string col_header( std::uint64_t col ) const;
};

/// Renders a K-map grid whose square k shows cell(k).
std::string render_kmap( unsigned n, const std::function<std::string( std::uint64_t )>& cell );

/// Single-function K-map with 0/1 cells.
std::string render_kmap( const truth_table& t );

} // namespace bnkmap
