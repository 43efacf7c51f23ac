#pragma once

// Reference implementations used only by the tests. None of them call into
// the library; they work from first principles on small inputs.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// Membership table of <gens> on [0, bound] by dynamic programming.
inline std::vector<bool> sieve(std::vector<Int> const& gens, Int bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
  in[0] = true;
  for (Int x = 1; x <= bound; ++x) {
    for (Int g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

inline Int gcd_all(std::vector<Int> const& gens) {
  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  return d;
}

// Every gap is below (a-1)(b-1) for two coprime generators, and below
// a * max for any generating set containing a.
inline Int safe_bound(std::vector<Int> const& gens) {
  return gens.front() * gens.back() + gens.back();
}

// Largest gap, or -1 when there is none.
inline Int frobenius(std::vector<Int> const& gens) {
  Int const bound = safe_bound(gens);
  auto const in = sieve(gens, bound);
  for (Int x = bound; x >= 1; --x) {
    if (!in[static_cast<std::size_t>(x)]) return x;
  }
  return -1;
}

inline std::vector<Int> elements_up_to(std::vector<Int> const& gens, Int bound) {
  auto const in = sieve(gens, bound);
  std::vector<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (in[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

// Smallest element in each residue class modulo m.
inline std::vector<Int> apery(std::vector<Int> const& gens, Int m) {
  Int const bound = safe_bound(gens) + m;
  auto const in = sieve(gens, bound);
  std::vector<Int> out(static_cast<std::size_t>(m), -1);
  for (Int x = 0; x <= bound; ++x) {
    auto& slot = out[static_cast<std::size_t>(x % m)];
    if (in[static_cast<std::size_t>(x)] && slot < 0) slot = x;
  }
  return out;
}

// Blocks of n consecutive positive elements are checked until they start
// past the largest gap, after which they are runs of consecutive integers.
inline bool is_n_permutation(std::vector<Int> const& gens, Int n) {
  if (gcd_all(gens) != 1) return false;
  Int const f = frobenius(gens);
  Int const bound = std::max<Int>(f, 0) + 2 * n + 1;
  auto const elems = elements_up_to(gens, bound);
  std::vector<Int> positive(elems.begin() + 1, elems.end());
  if (static_cast<Int>(positive.size()) < n) return false;
  // The first n elements must generate every listed generator.
  std::vector<Int> prefix(positive.begin(), positive.begin() + n);
  auto const in_prefix = sieve(prefix, gens.back());
  for (Int g : gens) {
    if (!in_prefix[static_cast<std::size_t>(g)]) return false;
  }
  for (std::size_t start = 0; start + static_cast<std::size_t>(n) <= positive.size();
       start += static_cast<std::size_t>(n)) {
    if (positive[start] > f) break;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (Int j = 0; j < n; ++j) {
      auto const r = static_cast<std::size_t>(positive[start + static_cast<std::size_t>(j)] % n);
      if (hit[r]) return false;
      hit[r] = true;
    }
  }
  return true;
}

// Unpruned reference enumerator: every increasing tuple with
// min_g1 <= g1 <= max_gk / n and g_n <= max_gk.
inline std::vector<std::vector<Int>> naive_enumerate(Int n, Int min_g1, Int max_gk) {
  std::vector<std::vector<Int>> found;
  std::vector<Int> tuple;
  auto accept = [&] {
    if (gcd_all(tuple) != 1) return;
    auto const elems = elements_up_to(tuple, tuple.back());
    std::vector<Int> const smallest(elems.begin() + 1,
                                    elems.begin() + 1 + std::min<std::ptrdiff_t>(
                                                            n, static_cast<std::ptrdiff_t>(elems.size()) - 1));
    if (smallest != tuple) return;
    if (is_n_permutation(tuple, n)) found.push_back(tuple);
  };
  auto rec = [&](auto&& self, Int lo) -> void {
    if (static_cast<Int>(tuple.size()) == n) {
      accept();
      return;
    }
    for (Int g = lo; g <= max_gk; ++g) {
      tuple.push_back(g);
      self(self, g + 1);
      tuple.pop_back();
    }
  };
  for (Int g1 = min_g1; g1 <= max_gk / n; ++g1) {
    tuple.assign(1, g1);
    rec(rec, g1 + 1);
  }
  return found;
}

// Random generator set: distinct values in [2, max_value], gcd 1, sorted.
inline std::vector<Int> random_generators(std::mt19937& rng, Int max_value, int max_count) {
  std::uniform_int_distribution<int> count_dist(1, max_count);
  std::uniform_int_distribution<Int> value_dist(2, max_value);
  for (;;) {
    int const count = count_dist(rng);
    std::vector<Int> gens;
    while (static_cast<int>(gens.size()) < count) {
      Int const v = value_dist(rng);
      if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
    }
    std::sort(gens.begin(), gens.end());
    if (gcd_all(gens) == 1) return gens;
  }
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Splits "a,b,c" into integers.
inline std::vector<Int> split_ints(std::string const& line) {
  std::vector<Int> out;
  std::stringstream s(line);
  std::string field;
  while (std::getline(s, field, ',')) out.push_back(std::stoll(field));
  return out;
}

struct LabeledSet {
  std::vector<Int> generators;
  std::string family;
};

// tests/golden/n3_m12_35_families.csv: header, then g1,g2,g3,Hj.
inline std::vector<LabeledSet> read_labels(std::string const& path) {
  std::vector<LabeledSet> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto const cut = line.rfind(',');
    out.push_back({split_ints(line.substr(0, cut)), line.substr(cut + 1)});
  }
  return out;
}

// Multiplicity of H_{j,k} as c*k + d, from the family table.
struct FirstGenerator {
  Int coef;
  Int offset;
};

inline constexpr FirstGenerator kFirstGenerator[16] = {
    {3, 0}, {6, 1}, {6, 1},  {6, 1},  {6, 1},  {3, 1},  {3, 2},   {12, 2},
    {3, 2}, {6, 3}, {6, 4}, {12, 4}, {6, 5}, {6, 5}, {12, 8}, {12, 8},
};

// k with c*k + d = multiplicity for family "Hj", or 0 when there is none.
inline Int k_from_multiplicity(std::string const& family, Int multiplicity) {
  int const j = std::stoi(family.substr(1));
  auto const [c, d] = kFirstGenerator[j - 1];
  if ((multiplicity - d) % c != 0 || multiplicity <= d) return 0;
  return (multiplicity - d) / c;
}

}  // namespace oracle
