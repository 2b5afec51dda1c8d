#pragma once

#include <bnkmap/boolfn.hpp>
#include <bnkmap/limits.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace bnkmap
{

/// Product term. Bit (n - r) of both masks refers to x_r, matching minterm numbering.
struct implicant
{
  unsigned n_vars = 0;
  /// Set bits mark variables present in the product.
  std::uint32_t care_mask = 0;
  /// Literal polarity where present; zero wherever care_mask is zero.
  std::uint32_t values = 0;

  unsigned literal_count() const noexcept;
  bool covers( std::uint64_t minterm ) const noexcept;
  /// Every minterm covered by `other` is covered by this term.
  bool contains( const implicant& other ) const noexcept;

  friend bool operator==( const implicant&, const implicant& ) = default;
};

/// Reading x_1 ... x_n in turn: positive literal < negative literal < absent.
bool implicant_less( const implicant& a, const implicant& b ) noexcept;

struct sop_form
{
  unsigned n_vars = 0;
  /// Empty means constant false; one term with no literals means constant true.
  std::vector<implicant> implicants;

  friend bool operator==( const sop_form&, const sop_form& ) = default;
};

/// All prime implicants of the function (tabulation method), sorted by implicant_less.
std::vector<implicant> prime_implicants( const minterm_form& m, const size_limits& limits = {} );

/// Exact minimum cover: fewest implicants, then fewest literals, then the
/// lexicographically smallest sorted implicant sequence. Throws
/// size_limit_error when the search exceeds limits.max_cover_work.
sop_form minimal_cover( std::span<const implicant> primes, const minterm_form& m, const size_limits& limits = {} );

sop_form minimize( const minterm_form& m, const size_limits& limits = {} );

bool_expr implicant_to_expr( const implicant& term );
bool_expr sop_to_expr( const sop_form& s );

} // namespace bnkmap
