#pragma once

// Decides the n-permutation property: the first n positive elements must
// generate G, and every consecutive block of n elements must hit each
// residue class modulo n exactly once.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "persemi/core.hpp"

namespace persemi {

/// Elements g_{kn+1}, ..., g_{kn+n} and their residues modulo n.
struct Block {
  std::size_t index = 0;
  std::vector<Int> entries;
  std::vector<Int> residues;

  friend bool operator==(Block const&, Block const&) = default;
};

struct PermutationReport {
  Int n = 0;
  bool verdict = false;
  bool generated_by_prefix = false;
  std::size_t blocks_checked = 0;
  std::optional<Block> first_failure;
  /// Largest element index examined, i.e. blocks_checked * n.
  std::size_t horizon_index = 0;
};

/// True iff the entries are pairwise distinct modulo n.
/// Throws std::invalid_argument unless there are exactly n entries.
bool is_block_permutation(std::span<const Int> entries, Int n);

/// Number of blocks that need an explicit check: floor(N/n) + 1, where N
/// counts the positive elements not exceeding F(G). Every later block lies
/// above F(G) and consists of n consecutive integers.
std::size_t verification_horizon(Semigroup const& semigroup, Int n);

Block make_block(ElementStream const& stream, std::size_t index, Int n);

/// Whether <prefix> = G; false when gcd(prefix) != 1.
bool generates(std::span<const Int> prefix, Semigroup const& semigroup);

PermutationReport is_n_permutation(Semigroup const& semigroup, Int n);

}  // namespace persemi
