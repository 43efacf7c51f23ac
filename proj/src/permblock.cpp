#include "persemi/permblock.hpp"

#include <stdexcept>

namespace persemi {

bool is_block_permutation(std::span<const Int> entries, Int n) {
  if (n <= 0) {
    throw std::invalid_argument("block size must be positive");
  }
  if (entries.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("block must contain exactly n entries");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Int x : entries) {
    auto const r = static_cast<std::size_t>(((x % n) + n) % n);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

std::size_t verification_horizon(Semigroup const& semigroup, Int n) {
  if (n <= 0) {
    throw std::invalid_argument("block size must be positive");
  }
  std::size_t below = 0;
  for (Int x = 1; x <= semigroup.frobenius(); ++x) {
    if (semigroup.contains(x)) ++below;
  }
  return below / static_cast<std::size_t>(n) + 1;
}

Block make_block(ElementStream const& stream, std::size_t index, Int n) {
  auto const width = static_cast<std::size_t>(n);
  Block block;
  block.index = index;
  block.entries = stream.take(index * width + 1, width);
  block.residues.reserve(width);
  for (Int x : block.entries) block.residues.push_back(x % n);
  return block;
}

bool generates(std::span<const Int> prefix, Semigroup const& semigroup) {
  if (gcd_of(prefix) != 1) return false;
  Semigroup const sub = make_semigroup(std::vector<Int>(prefix.begin(), prefix.end()));
  for (Int g : semigroup.generators().elements()) {
    if (!sub.contains(g)) return false;
  }
  return true;
}

PermutationReport is_n_permutation(Semigroup const& semigroup, Int n) {
  if (n <= 0) {
    throw std::invalid_argument("block size must be positive");
  }
  ElementStream const stream(semigroup);
  PermutationReport report;
  report.n = n;

  std::vector<Int> const prefix = stream.take(1, static_cast<std::size_t>(n));
  report.generated_by_prefix = generates(prefix, semigroup);

  std::size_t const horizon = verification_horizon(semigroup, n);
  bool blocks_ok = true;
  for (std::size_t k = 0; k < horizon; ++k) {
    Block block = make_block(stream, k, n);
    ++report.blocks_checked;
    if (!is_block_permutation(block.entries, n)) {
      blocks_ok = false;
      report.first_failure = std::move(block);
      break;
    }
  }
  report.horizon_index = report.blocks_checked * static_cast<std::size_t>(n);
  report.verdict = report.generated_by_prefix && blocks_ok;
  return report;
}

}  // namespace persemi
