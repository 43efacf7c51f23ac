#pragma once

// Pruned exhaustive enumeration of n-permutation semigroups by their first
// block, and the harness that classifies 3-permutation semigroups against
// the sixteen families.

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "persemi/core.hpp"
#include "persemi/families.hpp"

namespace persemi {

struct EnumerationQuery {
  Int block_size = 3;
  Int min_g1 = 1;
  /// Bound on g_n. Only multiplicities g1 <= max_gk / n are searched: for
  /// those the window is complete, because g_n <= n * g1.
  Int max_gk = 1;
};

struct EnumerationOptions {
  unsigned workers = 1;
  /// Also fully check candidates rejected by the g_j <= j*g1 and first-block
  /// residue prunes; any that pass are reported as audit violations.
  bool audit = false;
};

struct EnumerationResult {
  EnumerationQuery query;
  /// Lexicographically sorted first blocks.
  std::vector<std::vector<Int>> found;
  std::size_t candidates_examined = 0;
  std::chrono::duration<double> wall_time{};
  /// Only populated in audit mode; empty when the prunes are sound.
  std::vector<std::vector<Int>> audit_violations;
};

/// The tuple is exactly the n smallest positive elements of the semigroup
/// it generates, and that semigroup is an n-permutation semigroup.
bool accepts_first_block(std::span<const Int> block);

/// Throws std::invalid_argument on n = 0 or an empty multiplicity range.
EnumerationResult enumerate(EnumerationQuery const& query, EnumerationOptions const& options = {});

struct ConjectureRow {
  std::vector<Int> generators;
  std::vector<std::pair<FamilyId, Int>> matches;
  /// Family recorded for this set in the reference classification of
  /// multiplicities 12..35, when there is one.
  std::optional<FamilyId> reference_label;
  /// Whether reference_label is among matches; empty without a label.
  std::optional<bool> confirmed;

  Int multiplicity() const { return generators.front(); }
};

struct ConjectureReport {
  Int m_min = 0;
  Int m_max = 0;
  /// Set when m_min < 12, outside the conjecture's hypothesis.
  bool below_hypothesis = false;
  std::vector<ConjectureRow> rows;
  std::vector<std::vector<Int>> unmatched;

  /// Unmatched sets of multiplicity >= 12.
  std::vector<std::vector<Int>> counterexamples() const;
};

inline constexpr Int kConjectureMinMultiplicity = 12;

/// Reference labels for the 72 sets of multiplicity 12..35.
std::optional<FamilyId> reference_label(std::span<const Int> generators);

ConjectureReport check_conjecture(Int m_min, Int m_max, unsigned workers = 1);

}  // namespace persemi
