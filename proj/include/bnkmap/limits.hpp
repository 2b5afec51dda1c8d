#pragma once

#include <cstddef>
#include <cstdint>

namespace bnkmap
{

/// Largest dense matrix (rows * cols) any dense operation will materialize.
inline constexpr std::uint64_t max_dense_entries = std::uint64_t{ 1 } << 24;

/// Size caps shared by the network-level operations.
struct size_limits
{
  /// Largest network handled through logical (index sequence) forms.
  unsigned max_n = 20;
  /// Largest arity handled by exact minimization and dense expansions.
  unsigned max_exact_n = 12;
  /// Work budget of one exact cover search, roughly one unit per pair of
  /// prime implicants compared. Beyond it minimization gives up.
  std::uint64_t max_cover_work = 1'000'000'000;
};

void check_arity( unsigned n, const size_limits& limits );
void check_exact_arity( unsigned n, const size_limits& limits );

} // namespace bnkmap
