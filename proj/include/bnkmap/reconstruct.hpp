#pragma once

#include <bnkmap/boolfn.hpp>
#include <bnkmap/network.hpp>
#include <bnkmap/stp.hpp>

#include <vector>

namespace bnkmap
{

/// K-map of a transition matrix: d_k = 2^n - i_{2^n - k}.
/// Equal to net_kmap of the network the matrix determines.
kmap_cells matrix_kmap( const logical_matrix& transition );

/// K-map of f_r: bit k is bit r (MSB is r = 1) of cell k.
truth_table bitplane( const kmap_cells& km, unsigned r );

/// Minterm canonical form of every node, read off the matrix K-map.
std::vector<minterm_form> reconstruct_minterms( const logical_matrix& transition );

/// Network whose rule r is the sum of minterms of f_r. Total on every transition matrix.
boolean_network reconstruct_kmap( const logical_matrix& transition );

/// True iff f never changes when x_j alone flips.
bool independent_of( const truth_table& t, unsigned j );

/// Variables f depends on, ascending.
std::vector<unsigned> support( const truth_table& t );

/*
 * Structure-matrix elimination: M_i = S_i^n ⋉ L, and x_j is removable from
 * f_i when M_i ⋉ W ⋉ (M_¬ - I_2) = 0, leaving M_i' = M_i ⋉ W ⋉ δ_2^1.
 * It cannot touch a node whose function depends on every variable.
 */

/// Which argument order of the swap matrix W_[2,2^(j-1)] makes the zero test
/// coincide with semantic independence.
enum class swap_convention
{
  /// W_[2,2^(j-1)] (x ⊗ y) = y ⊗ x with dim x = 2.
  standard,
  /// W_[2^(j-1),2].
  transposed
};

/// Picks the convention once by checking every function of up to three
/// variables against independent_of. Throws if neither convention agrees.
swap_convention detect_swap_convention();

logical_matrix swap_for_variable( unsigned j, swap_convention convention );

/// M_i = S_i^n ⋉ L.
logical_matrix cheng_structure( const logical_matrix& transition, unsigned i );

struct cheng_check
{
  bool holds = false;
  /// M ⋉ W ⋉ (M_¬ - I_2), a 2 x 2^n matrix with entries in {-1, 0, 1}.
  dense_matrix residual;
};

/// Evaluates the elimination condition for variable j of a 2 x 2^n structure matrix.
cheng_check cheng_condition( const logical_matrix& structure, unsigned j, unsigned n,
                             swap_convention convention = detect_swap_convention() );

/// M ⋉ W ⋉ δ_2^1: the 2 x 2^(n-1) structure matrix with x_j removed.
logical_matrix cheng_eliminate( const logical_matrix& structure, unsigned j, unsigned n,
                                swap_convention convention = detect_swap_convention() );

struct cheng_node_report
{
  unsigned node = 0;
  logical_matrix structure;
  /// One check per j = 1..n at full arity.
  std::vector<cheng_check> full_arity_checks;
  /// Original indices of the eliminated variables, in removal order.
  std::vector<unsigned> removed;
  logical_matrix reduced;
  /// Original indices of the variables the reduced matrix ranges over.
  std::vector<unsigned> remaining;
  /// No variable could be eliminated at full arity.
  bool failed = false;
};

struct cheng_report
{
  swap_convention convention = swap_convention::standard;
  std::vector<cheng_node_report> nodes;
};

/// Greedy smallest-j-first elimination for every node.
cheng_report cheng_reduce( const logical_matrix& transition, const size_limits& limits = {} );

} // namespace bnkmap
