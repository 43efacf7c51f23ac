#include "persemi/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace persemi {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Round-robin relaxation over the residues modulo `modulus`: every pass adds
// each generator to every reached minimum and keeps the smaller value per
// residue, until a pass changes nothing. Unreachable residues stay
// kUnreached (only possible when gcd(generators) != 1).
std::vector<Int> relax_residues(std::span<const Int> generators, Int modulus) {
  auto const m = static_cast<std::size_t>(modulus);
  std::vector<Int> minima(m, kUnreached);
  minima[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 0; r < m; ++r) {
      if (minima[r] == kUnreached) continue;
      for (Int g : generators) {
        Int const candidate = minima[r] + g;
        auto const target = static_cast<std::size_t>(candidate % modulus);
        if (candidate < minima[target]) {
          minima[target] = candidate;
          changed = true;
        }
      }
    }
  }
  return minima;
}

void check_width(Int modulus, Int largest) {
  // Every minimum is a sum of fewer than `modulus` generators.
  if (largest > kMaxIntermediate / modulus) {
    throw std::invalid_argument("generators too large for 64-bit exact arithmetic");
  }
}

}  // namespace

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

GeneratorSet::GeneratorSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("generator set is empty");
  }
  if (elements_.front() < 1) {
    throw std::invalid_argument("generators must be positive");
  }
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i] <= elements_[i - 1]) {
      throw std::invalid_argument("generators must be strictly increasing");
    }
  }
  if (Int g = gcd_of(elements_); g != 1) {
    throw std::invalid_argument("generators have gcd " + std::to_string(g) +
                                ", not a numerical semigroup");
  }
}

AperyTable::AperyTable(Int modulus, std::vector<Int> minima)
    : modulus_(modulus), minima_(std::move(minima)) {
  if (modulus_ <= 0 || minima_.size() != static_cast<std::size_t>(modulus_)) {
    throw std::invalid_argument("Apery table size must equal its modulus");
  }
}

Int AperyTable::max() const { return *std::max_element(minima_.begin(), minima_.end()); }

namespace {

AperyTable apery_from_generators(GeneratorSet const& generators, Int modulus) {
  check_width(modulus, generators.largest());
  return AperyTable(modulus, relax_residues(generators.elements(), modulus));
}

}  // namespace

Semigroup::Semigroup(GeneratorSet generators)
    : generators_(std::move(generators)),
      apery_(apery_from_generators(generators_, generators_.smallest())),
      frobenius_(apery_.max() - apery_.modulus()) {}

ElementStream::ElementStream(Semigroup const& semigroup)
    : tail_base_(std::max<Int>(semigroup.frobenius(), 0)) {
  for (Int x = 1; x <= semigroup.frobenius(); ++x) {
    if (semigroup.contains(x)) small_.push_back(x);
  }
}

Int ElementStream::at(std::size_t index) const {
  if (index == 0) return 0;
  if (index <= small_.size()) return small_[index - 1];
  return tail_base_ + static_cast<Int>(index - small_.size());
}

std::vector<Int> ElementStream::take(std::size_t first, std::size_t count) const {
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(at(first + i));
  return out;
}

Semigroup make_semigroup(GeneratorSet const& generators) { return Semigroup(generators); }

Semigroup make_semigroup(std::vector<Int> generators) {
  return Semigroup(GeneratorSet(std::move(generators)));
}

AperyTable apery_set(Semigroup const& semigroup, Int n) {
  if (n <= 0) {
    throw std::invalid_argument("Apery set modulus must be positive");
  }
  if (!semigroup.contains(n)) {
    throw std::invalid_argument("Apery set modulus " + std::to_string(n) +
                                " is not an element of the semigroup");
  }
  if (n == semigroup.multiplicity()) return semigroup.apery();
  return apery_from_generators(semigroup.generators(), n);
}

Int frobenius(Semigroup const& semigroup) { return semigroup.frobenius(); }

bool contains(Semigroup const& semigroup, Int x) { return semigroup.contains(x); }

std::vector<Int> elements_up_to(Semigroup const& semigroup, Int bound) {
  std::vector<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (semigroup.contains(x)) out.push_back(x);
  }
  return out;
}

bool arith_seq_contains(Int a0, Int e, Int k, Int x) {
  if (a0 <= 0 || e <= 0 || k <= 0) {
    throw std::invalid_argument("arithmetic sequence parameters must be positive");
  }
  if (x < 0) return false;
  for (Int q = 0; q <= x / a0; ++q) {
    Int const rest = x - a0 * q;
    if (rest % e == 0 && rest / e <= k * q) return true;
  }
  return false;
}

Int arith_seq_frobenius(Int a0, Int e, Int k) {
  if (a0 <= 0 || e <= 0 || k <= 0) {
    throw std::invalid_argument("arithmetic sequence parameters must be positive");
  }
  if (std::gcd(a0, e) != 1) {
    throw std::invalid_argument("gcd(a0, e) must be 1");
  }
  if (a0 > (Int{1} << 30) || e > (Int{1} << 30)) {
    throw std::invalid_argument("arithmetic sequence too large for 64-bit exact arithmetic");
  }
  return a0 * floor_div(a0 - 2, k) + e * (a0 - 1);
}

}  // namespace persemi
