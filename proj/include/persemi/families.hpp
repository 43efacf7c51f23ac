#pragma once

// The sixteen parametrized families H1..H16 of 3-permutation semigroups and
// the generic n-permutation family, each with its generator formula, its
// explicit description as intervals plus an infinite tail, and (for nine of
// them) a parametric membership form.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persemi/core.hpp"

namespace persemi {

class FamilyId {
 public:
  enum class Kind { H, NFamily };

  /// H1..H16.
  static FamilyId h(int index);
  /// Generic family with block size n >= 3.
  static FamilyId nfamily(int block_size);
  /// Parses "H1".."H16" or "N<block>"; throws std::invalid_argument.
  static FamilyId parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Family number for H, block size for NFamily.
  int index() const { return index_; }
  /// Block size of the permutation property: 3 for H, n for NFamily.
  Int block_size() const { return kind_ == Kind::H ? 3 : index_; }
  Int min_k() const;
  std::string to_string() const;

  friend bool operator==(FamilyId const&, FamilyId const&) = default;
  friend auto operator<=>(FamilyId const&, FamilyId const&) = default;

 private:
  FamilyId(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

/// All of H1..H16 in order.
std::vector<FamilyId> all_h_families();

struct FamilyInstance {
  FamilyId id;
  Int k;
  GeneratorSet generators;
};

/// [lo, hi] with step 1, or the integers of [lo, hi] congruent to lo mod 2.
struct IntervalSpec {
  Int lo;
  Int hi;
  int step;

  static IntervalSpec singleton(Int value) { return {value, value, 1}; }
  friend bool operator==(IntervalSpec const&, IntervalSpec const&) = default;
};

struct StructuralDescription {
  std::vector<IntervalSpec> pieces;
  /// Start of the final interval [tail_start, infinity).
  Int tail_start = 0;
};

struct StructureCheck {
  bool ok = false;
  Int bound = 0;
  /// Smallest element of the symmetric difference, if any.
  std::optional<Int> first_difference;
  /// Whether first_difference belongs to the semigroup (else to the description).
  bool difference_in_semigroup = false;
};

struct FamilyMatch {
  std::vector<std::pair<FamilyId, Int>> matches;
};

/// Throws std::domain_error if k is outside the family's domain.
GeneratorSet family_generators(FamilyId id, Int k);
FamilyInstance family_instance(FamilyId id, Int k);

StructuralDescription family_structure(FamilyId id, Int k);

/// Sorted, deduplicated union of the pieces and the tail, cut at bound.
std::vector<Int> materialize(StructuralDescription const& description, Int bound);

/// Compares the description against the generated semigroup on
/// [0, tail_start + 2 * largest generator].
StructureCheck verify_structure(FamilyId id, Int k);

bool has_parametric_form(FamilyId id);

/// Every x <= bound expressible in the family's parametric membership form.
/// Throws std::invalid_argument for families without one.
std::vector<Int> parametric_members(FamilyId id, Int k, Int bound);

/// All (id, k) over H1..H16 whose generator formula yields exactly gens.
FamilyMatch match_family(GeneratorSet const& gens);

}  // namespace persemi
