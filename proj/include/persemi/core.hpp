#pragma once

// Exact arithmetic on numerical semigroups: generators, Apery tables,
// Frobenius numbers, membership and ordered element enumeration.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace persemi {

using Int = std::int64_t;

// Inputs whose intermediate values could exceed this are rejected.
inline constexpr Int kMaxIntermediate = Int{1} << 62;

/// Floor division for a positive divisor.
constexpr Int floor_div(Int num, Int den) {
  Int q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

Int gcd_of(std::span<const Int> values);

/// A non-empty, strictly increasing list of positive integers with gcd 1.
class GeneratorSet {
 public:
  /// Throws std::invalid_argument if any invariant fails.
  explicit GeneratorSet(std::vector<Int> elements);
  GeneratorSet(std::initializer_list<Int> elements)
      : GeneratorSet(std::vector<Int>(elements)) {}

  std::span<const Int> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Int operator[](std::size_t i) const { return elements_[i]; }
  Int smallest() const { return elements_.front(); }
  Int largest() const { return elements_.back(); }

  friend bool operator==(GeneratorSet const&, GeneratorSet const&) = default;
  friend auto operator<=>(GeneratorSet const& lhs, GeneratorSet const& rhs) {
    return lhs.elements_ <=> rhs.elements_;
  }

 private:
  std::vector<Int> elements_;
};

/// Per-residue minima of a semigroup modulo one of its nonzero elements.
class AperyTable {
 public:
  AperyTable(Int modulus, std::vector<Int> minima);

  Int modulus() const { return modulus_; }
  std::span<const Int> minima() const { return minima_; }
  Int minimum(Int residue) const { return minima_[static_cast<std::size_t>(residue)]; }
  Int max() const;

  /// x is in the semigroup iff x >= minima[x mod modulus].
  bool contains(Int x) const {
    if (x < 0) return false;
    return x >= minima_[static_cast<std::size_t>(x % modulus_)];
  }

 private:
  Int modulus_;
  std::vector<Int> minima_;
};

class Semigroup {
 public:
  explicit Semigroup(GeneratorSet generators);

  GeneratorSet const& generators() const { return generators_; }
  Int multiplicity() const { return generators_.smallest(); }
  AperyTable const& apery() const { return apery_; }
  /// Largest integer outside the semigroup; -1 for the naturals.
  Int frobenius() const { return frobenius_; }
  bool contains(Int x) const { return apery_.contains(x); }

 private:
  GeneratorSet generators_;
  AperyTable apery_;
  Int frobenius_;
};

/// Random access to the positive elements g_1 < g_2 < ... by 1-based index.
/// Elements up to the Frobenius number are stored; above it they are
/// consecutive, so any index is answered in O(1).
class ElementStream {
 public:
  explicit ElementStream(Semigroup const& semigroup);

  Int at(std::size_t index) const;
  /// Number of positive elements not exceeding the Frobenius number.
  std::size_t count_below_frobenius() const { return small_.size(); }
  /// g_first, ..., g_{first+count-1}.
  std::vector<Int> take(std::size_t first, std::size_t count) const;

 private:
  std::vector<Int> small_;
  Int tail_base_;
};

Semigroup make_semigroup(GeneratorSet const& generators);
Semigroup make_semigroup(std::vector<Int> generators);
inline Semigroup make_semigroup(std::initializer_list<Int> generators) {
  return make_semigroup(std::vector<Int>(generators));
}

/// Ap(G, n). Throws std::invalid_argument unless n is a positive element of G.
AperyTable apery_set(Semigroup const& semigroup, Int n);

Int frobenius(Semigroup const& semigroup);
bool contains(Semigroup const& semigroup, Int x);

/// Elements of G in [0, bound], ascending.
std::vector<Int> elements_up_to(Semigroup const& semigroup, Int bound);

/// Membership in <a0, a0+e, ..., a0+k*e> via x = a0*q + e*r, 0 <= r <= k*q.
bool arith_seq_contains(Int a0, Int e, Int k, Int x);

/// a0 * floor((a0-2)/k) + e*(a0-1); requires gcd(a0, e) = 1.
Int arith_seq_frobenius(Int a0, Int e, Int k);

}  // namespace persemi
