#include "persemi/search.hpp"

#include <algorithm>
#include <atomic>
#include <array>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "persemi/permblock.hpp"

namespace persemi {

namespace {

struct ShardResult {
  std::vector<std::vector<Int>> found;
  std::vector<std::vector<Int>> violations;
  std::size_t examined = 0;
};

// Depth-first over first blocks with a fixed g1. The prunes are
// (a) g_j <= j * g1, (b) pairwise distinct residues mod n, (c) gcd 1.
class ShardSearch {
 public:
  ShardSearch(EnumerationQuery const& query, bool audit, Int g1)
      : n_(query.block_size), max_gk_(query.max_gk), audit_(audit), g1_(g1) {}

  ShardResult run() {
    tuple_.assign(1, g1_);
    seen_.assign(static_cast<std::size_t>(n_), false);
    seen_[static_cast<std::size_t>(g1_ % n_)] = true;
    extend(false);
    return std::move(result_);
  }

 private:
  void extend(bool pruned) {
    auto const j = static_cast<Int>(tuple_.size()) + 1;
    if (j > n_) {
      finish(pruned);
      return;
    }
    Int const multiple_bound = std::min(j * g1_, max_gk_);
    Int const upper = audit_ ? max_gk_ : multiple_bound;
    for (Int g = tuple_.back() + 1; g <= upper; ++g) {
      auto const residue = static_cast<std::size_t>(g % n_);
      bool const repeats = seen_[residue];
      bool const rejected = repeats || g > multiple_bound;
      if (rejected && !audit_) continue;
      bool const marked = !repeats;
      if (marked) seen_[residue] = true;
      tuple_.push_back(g);
      extend(pruned || rejected);
      tuple_.pop_back();
      if (marked) seen_[residue] = false;
    }
  }

  void finish(bool pruned) {
    if (gcd_of(tuple_) != 1) return;
    if (pruned) {
      if (accepts_first_block(tuple_)) result_.violations.push_back(tuple_);
      return;
    }
    ++result_.examined;
    if (accepts_first_block(tuple_)) result_.found.push_back(tuple_);
  }

  Int n_;
  Int max_gk_;
  bool audit_;
  Int g1_;
  std::vector<Int> tuple_;
  std::vector<bool> seen_;
  ShardResult result_;
};

struct ReferenceEntry {
  std::array<Int, 3> generators;
  int family;
};

// Published classification of all 3-permutation semigroups of
// multiplicity 12..35, sorted by generators.
constexpr ReferenceEntry kReferenceLabels[] = {
    {{12, 13, 23}, 1}, {{13, 14, 21}, 2}, {{13, 15, 17}, 4},
    {{13, 20, 21}, 3}, {{13, 20, 24}, 5}, {{13, 23, 24}, 6},
    {{14, 15, 16}, 7}, {{14, 16, 21}, 8}, {{14, 25, 27}, 9},
    {{15, 16, 29}, 1}, {{15, 17, 28}, 10}, {{16, 17, 24}, 11},
    {{16, 21, 23}, 12}, {{16, 29, 30}, 6}, {{17, 18, 19}, 7},
    {{17, 24, 25}, 13}, {{17, 28, 30}, 14}, {{17, 31, 33}, 9},
    {{18, 19, 35}, 1}, {{19, 20, 30}, 2}, {{19, 21, 23}, 4},
    {{19, 29, 30}, 3}, {{19, 32, 36}, 5}, {{19, 35, 36}, 6},
    {{20, 21, 22}, 7}, {{20, 22, 33}, 15}, {{20, 31, 33}, 16},
    {{20, 37, 39}, 9}, {{21, 22, 41}, 1}, {{21, 23, 40}, 10},
    {{22, 23, 33}, 11}, {{22, 41, 42}, 6}, {{23, 24, 25}, 7},
    {{23, 33, 34}, 13}, {{23, 40, 42}, 14}, {{23, 43, 45}, 9},
    {{24, 25, 47}, 1}, {{25, 26, 39}, 2}, {{25, 27, 29}, 4},
    {{25, 38, 39}, 3}, {{25, 44, 48}, 5}, {{25, 47, 48}, 6},
    {{26, 27, 28}, 7}, {{26, 28, 39}, 8}, {{26, 49, 51}, 9},
    {{27, 28, 53}, 1}, {{27, 29, 52}, 10}, {{28, 29, 42}, 11},
    {{28, 39, 41}, 12}, {{28, 53, 54}, 6}, {{29, 30, 31}, 7},
    {{29, 42, 43}, 13}, {{29, 52, 54}, 14}, {{29, 55, 57}, 9},
    {{30, 31, 59}, 1}, {{31, 32, 48}, 2}, {{31, 33, 35}, 4},
    {{31, 47, 48}, 3}, {{31, 56, 60}, 5}, {{31, 59, 60}, 6},
    {{32, 33, 34}, 7}, {{32, 34, 51}, 15}, {{32, 49, 51}, 16},
    {{32, 61, 63}, 9}, {{33, 34, 65}, 1}, {{33, 35, 64}, 10},
    {{34, 35, 51}, 11}, {{34, 65, 66}, 6}, {{35, 36, 37}, 7},
    {{35, 51, 52}, 13}, {{35, 64, 66}, 14}, {{35, 67, 69}, 9},
};

}  // namespace

bool accepts_first_block(std::span<const Int> block) {
  if (block.empty() || gcd_of(block) != 1) return false;
  Semigroup const semigroup = make_semigroup(std::vector<Int>(block.begin(), block.end()));
  ElementStream const stream(semigroup);
  auto const n = static_cast<Int>(block.size());
  std::vector<Int> const smallest = stream.take(1, block.size());
  if (!std::equal(smallest.begin(), smallest.end(), block.begin(), block.end())) return false;
  return is_n_permutation(semigroup, n).verdict;
}

EnumerationResult enumerate(EnumerationQuery const& query, EnumerationOptions const& options) {
  if (query.block_size <= 0) {
    throw std::invalid_argument("block size must be positive");
  }
  if (query.min_g1 < 1 || query.min_g1 > query.max_gk) {
    throw std::invalid_argument("empty range: need 1 <= min_g1 <= max_gk");
  }
  if (query.max_gk > (Int{1} << 20)) {
    throw std::invalid_argument("max_gk too large");
  }
  auto const start = std::chrono::steady_clock::now();

  Int const last_g1 = query.max_gk / query.block_size;
  std::size_t const shards =
      last_g1 >= query.min_g1 ? static_cast<std::size_t>(last_g1 - query.min_g1 + 1) : 0;
  std::vector<ShardResult> results(shards);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shards; i = next++) {
      results[i] = ShardSearch(query, options.audit, query.min_g1 + static_cast<Int>(i)).run();
    }
  };
  unsigned const workers = std::max(1u, options.workers);
  if (workers == 1 || shards <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, shards); ++w) pool.emplace_back(worker);
  }

  EnumerationResult out;
  out.query = query;
  for (auto& shard : results) {
    out.candidates_examined += shard.examined;
    std::move(shard.found.begin(), shard.found.end(), std::back_inserter(out.found));
    std::move(shard.violations.begin(), shard.violations.end(),
              std::back_inserter(out.audit_violations));
  }
  std::sort(out.found.begin(), out.found.end());
  std::sort(out.audit_violations.begin(), out.audit_violations.end());
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

std::vector<std::vector<Int>> ConjectureReport::counterexamples() const {
  std::vector<std::vector<Int>> out;
  for (auto const& gens : unmatched) {
    if (gens.front() >= kConjectureMinMultiplicity) out.push_back(gens);
  }
  return out;
}

std::optional<FamilyId> reference_label(std::span<const Int> generators) {
  if (generators.size() != 3) return std::nullopt;
  for (auto const& entry : kReferenceLabels) {
    if (std::equal(entry.generators.begin(), entry.generators.end(), generators.begin())) {
      return FamilyId::h(entry.family);
    }
  }
  return std::nullopt;
}

ConjectureReport check_conjecture(Int m_min, Int m_max, unsigned workers) {
  if (m_min < 1 || m_min > m_max) {
    throw std::invalid_argument("need 1 <= m_min <= m_max");
  }
  ConjectureReport report;
  report.m_min = m_min;
  report.m_max = m_max;
  report.below_hypothesis = m_min < kConjectureMinMultiplicity;

  EnumerationResult const found = enumerate({3, m_min, 3 * m_max}, {workers, false});
  for (auto const& gens : found.found) {
    ConjectureRow row;
    row.generators = gens;
    row.matches = match_family(GeneratorSet(gens)).matches;
    row.reference_label = reference_label(gens);
    if (row.reference_label) {
      row.confirmed = std::any_of(row.matches.begin(), row.matches.end(),
                                  [&](auto const& m) { return m.first == *row.reference_label; });
    }
    if (row.matches.empty()) report.unmatched.push_back(gens);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace persemi
