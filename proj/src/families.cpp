#include "persemi/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace persemi {

namespace {

// Keeps every intermediate value of the closed forms far below 2^62.
constexpr Int kMaxFamilyK = Int{1} << 20;

using Pieces = std::vector<IntervalSpec>;

// [lo, hi]; empty when lo > hi.
void add_range(Pieces& out, Int lo, Int hi) {
  if (lo <= hi) out.push_back({lo, hi, 1});
}

// [lo, hi]_2: the integers of [lo, hi] with the parity of lo.
void add_step2(Pieces& out, Int lo, Int hi) {
  if (lo > hi) return;
  if ((hi - lo) % 2 != 0) --hi;
  out.push_back(lo == hi ? IntervalSpec::singleton(lo) : IntervalSpec{lo, hi, 2});
}

void add_point(Pieces& out, Int value) { out.push_back(IntervalSpec::singleton(value)); }

void append(Pieces& out, Pieces const& more) { out.insert(out.end(), more.begin(), more.end()); }

Pieces shifted(Pieces const& pieces, Int offset) {
  Pieces out;
  out.reserve(pieces.size());
  for (auto const& p : pieces) out.push_back({p.lo + offset, p.hi + offset, p.step});
  return out;
}

// Generator i of H_f at k is coef * k + offset.
struct LinearForm {
  Int coef;
  Int offset;
};

constexpr std::array<std::array<LinearForm, 3>, 16> kGeneratorForms{{
    {{{3, 0}, {3, 1}, {6, -1}}},      // H1
    {{{6, 1}, {6, 2}, {9, 3}}},       // H2
    {{{6, 1}, {9, 2}, {9, 3}}},       // H3
    {{{6, 1}, {6, 3}, {6, 5}}},       // H4
    {{{6, 1}, {12, -4}, {12, 0}}},    // H5
    {{{3, 1}, {6, -1}, {6, 0}}},      // H6
    {{{3, 2}, {3, 3}, {3, 4}}},       // H7
    {{{12, 2}, {12, 4}, {18, 3}}},    // H8
    {{{3, 2}, {6, 1}, {6, 3}}},       // H9
    {{{6, 3}, {6, 5}, {12, 4}}},      // H10
    {{{6, 4}, {6, 5}, {9, 6}}},       // H11
    {{{12, 4}, {18, 3}, {18, 5}}},    // H12
    {{{6, 5}, {9, 6}, {9, 7}}},       // H13
    {{{6, 5}, {12, 4}, {12, 6}}},     // H14
    {{{12, 8}, {12, 10}, {18, 15}}},  // H15
    {{{12, 8}, {18, 13}, {18, 15}}},  // H16
}};

void check_domain(FamilyId id, Int k) {
  if (k < id.min_k() || k > kMaxFamilyK) {
    throw std::domain_error(id.to_string() + " is defined for k >= " +
                            std::to_string(id.min_k()) + ", got k = " + std::to_string(k));
  }
}

// H1: A_i = [2i*3k - i, 2i*3k + 2i], B_i = [(2i+1)3k - i, (2i+1)3k + 2i + 1].
StructuralDescription structure_h1(Int k) {
  StructuralDescription d;
  d.tail_start = (2 * (k - 1) + 1) * 3 * k - (k - 1);
  for (Int i = 0; 2 * i * 3 * k - i < d.tail_start; ++i) {
    add_range(d.pieces, 2 * i * 3 * k - i, 2 * i * 3 * k + 2 * i);
    add_range(d.pieces, (2 * i + 1) * 3 * k - i, (2 * i + 1) * 3 * k + 2 * i + 1);
  }
  return d;
}

StructuralDescription structure_h2(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 1;
  d.tail_start = a * (3 * k) + (3 * k + 2);
  add_point(d.pieces, 0);
  for (Int i = 1; i <= 3 * k; ++i) {
    add_range(d.pieces, a * i, a * i + i);
    add_range(d.pieces, a * i + (3 * k + 2), a * i + (3 * k + 2) + i - 1);
  }
  return d;
}

StructuralDescription structure_h3(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 1;
  Int const b = 9 * k + 2;
  Int const c = 9 * k + 3;
  d.tail_start = (3 * k + 1) * a;
  for (Int v : {Int{0}, a, b, c, 2 * a, a + b, a + c}) add_point(d.pieces, v);
  for (Int i = 1; i <= k; ++i) {
    Int const base = 3 * i * a;
    Pieces A, B, C, F;
    add_point(A, base);
    add_range(B, base + 1, base + 3 * i);
    add_range(C, base + 3 * k + 1, base + 3 * k + 2 + 3 * (i - 1));
    add_range(F, base + b, base + c + 3 * i);
    Pieces const D = shifted(A, a);
    Pieces const E = shifted(B, a);
    for (Pieces const* p : std::initializer_list<Pieces const*>{&A, &B, &C, &D, &E, &F}) append(d.pieces, *p);
    append(d.pieces, shifted(D, a));  // G
    append(d.pieces, shifted(E, a));  // I
    append(d.pieces, shifted(F, a));  // J
  }
  return d;
}

StructuralDescription structure_h4(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 1;
  Int const t = (3 * k) / 2;
  Int const eps = k % 2;
  d.tail_start = (2 * t + eps + 1) * a;
  add_point(d.pieces, 0);
  for (Int i = 1; i <= t; ++i) add_step2(d.pieces, i * a, i * a + 4 * i);
  for (Int i = t + 1; i <= 2 * t + eps; ++i) {
    add_range(d.pieces, i * a, i * a + 2 * (2 * (i - t - 1) - eps));
    add_step2(d.pieces, i * a + 2 * (2 * (i - t - 1) - eps + 1), i * a + 2 * (2 * t + eps));
  }
  return d;
}

// The C and D blocks of H5 share one shape, anchored at (2i)a and (2i+1)a.
void h5_upper_block(Pieces& out, Int base, Int end, Int k, Int i) {
  add_step2(out, base + 1, base + 1 + 2 * (6 * k - 3 * i - 4));
  add_range(out, base + 1 + 2 * (6 * k - 3 * i - 3), base + 3 + 2 * (6 * k - 3 * i - 3));
  add_range(out, base + 5 + 2 * (6 * k - 3 * i - 3), end);
}

StructuralDescription structure_h5(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 1;
  d.tail_start = (4 * k - 1) * a + 5;
  add_point(d.pieces, 0);
  for (Int i = 0; i <= k - 2; ++i) {
    for (Int j : {2 * i + 2, 2 * i + 3}) {  // A_i then B_i
      add_point(d.pieces, (j - 1) * a);
      add_point(d.pieces, j * a - 6 * (i + 1));
      add_point(d.pieces, j * a - 6 * (i + 1) + 4);
      add_step2(d.pieces, j * a - 6 * i, j * a - 2);
    }
  }
  // A_{k-1}
  add_point(d.pieces, (2 * k - 1) * a);
  add_point(d.pieces, 2 * k * a - 6 * k);
  add_point(d.pieces, 2 * k * a - 6 * k + 4);
  add_step2(d.pieces, 2 * k * a - 6 * k + 6, 2 * k * a - 2);
  // B_{k-1}
  Int const m = (2 * k + 1) * a;
  add_point(d.pieces, 2 * k * a);
  add_point(d.pieces, m - 6 * k);
  add_point(d.pieces, m - 6 * k + 4);
  add_step2(d.pieces, m - 6 * k + 6, m - 8);
  add_range(d.pieces, m - 6, m - 4);
  add_range(d.pieces, m - 2, m);
  // D_k
  add_step2(d.pieces, m + 1, m + 1 + 6 * k - 8);
  add_range(d.pieces, (2 * k + 2) * a - 6, (2 * k + 2) * a - 4);
  add_range(d.pieces, (2 * k + 2) * a - 2, (2 * k + 2) * a);
  for (Int i = k + 1; i <= 2 * k - 1; ++i) {
    h5_upper_block(d.pieces, 2 * i * a, (2 * i + 1) * a, k, i);            // C_i
    h5_upper_block(d.pieces, (2 * i + 1) * a, (2 * i + 2) * a, k, i);      // D_i
  }
  return d;
}

// A_i = {(2i+1)a} u [(2i+2)a - (i+1)n, (2i+2)a - 2], B_i = A_i + a.
StructuralDescription structure_nfamily(Int n, Int k) {
  StructuralDescription d;
  Int const a = n * k + 1;
  d.tail_start = 2 * k * a;
  add_point(d.pieces, 0);
  for (Int i = 0; i <= k - 1; ++i) {
    Pieces A;
    add_point(A, (2 * i + 1) * a);
    add_range(A, (2 * i + 2) * a - (i + 1) * n, (2 * i + 2) * a - 2);
    append(d.pieces, A);
    Pieces B;
    add_point(B, (2 * i + 2) * a);
    add_range(B, (2 * i + 3) * a - (i + 1) * n, (2 * i + 3) * a - 2);
    append(d.pieces, B);
  }
  return d;
}

StructuralDescription structure_h7(Int k) {
  StructuralDescription d;
  Int const a = 3 * k + 2;
  Int const t = (3 * k) / 2;
  d.tail_start = (t + 1) * a;
  for (Int i = 0; i <= t; ++i) add_range(d.pieces, i * a, i * a + 2 * i);
  return d;
}

StructuralDescription structure_h8(Int k) {
  StructuralDescription d;
  Int const a = 12 * k + 2;
  Int const half = a / 2;
  d.tail_start = (6 * k + 1) * a + half;
  std::vector<Pieces> A(static_cast<std::size_t>(3 * k + 1));
  add_point(A[0], 0);
  append(d.pieces, A[0]);
  for (Int i = 1; i <= 3 * k; ++i) {
    add_step2(A[i], i * a, i * a + 2 * i);
    append(d.pieces, A[i]);
    append(d.pieces, shifted(A[i - 1], a + half));  // B_i
  }
  std::vector<Pieces> D(static_cast<std::size_t>(6 * k + 1));
  for (Int i = 3 * k + 1; i <= 6 * k; ++i) {
    add_range(D[i], i * a + half, i * a + half + 2 * (i - 3 * k));
    add_step2(D[i], i * a + half + 2 * (i - 3 * k + 1), i * a + half + 6 * k);
    append(d.pieces, D[i]);
  }
  add_step2(d.pieces, (3 * k + 1) * a, (3 * k + 1) * a + 6 * k);  // C_{3k+1}
  add_step2(d.pieces, (3 * k + 2) * a, (3 * k + 2) * a + 6 * k);  // C_{3k+2}
  for (Int i = 3 * k + 3; i <= 6 * k + 1; ++i) {
    append(d.pieces, shifted(D[i - 2], a + half));  // C_i
  }
  return d;
}

StructuralDescription structure_h9(Int k) {
  StructuralDescription d;
  Int const a = 3 * k + 2;
  d.tail_start = 2 * k * a + 4;
  for (Int i = 0; i <= 2 * k + 1; ++i) {
    Int const low = i * a - 3 * (i / 2);
    add_point(d.pieces, low);
    add_range(d.pieces, low + 2, i * a);
  }
  return d;
}

StructuralDescription structure_h10(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 3;
  Int const t = k - 1;
  d.tail_start = (2 + 4 * k) * a - 2 * (2 * k + 1);
  add_point(d.pieces, 0);
  for (Int i = 0; i <= t; ++i) {
    Int const ca = (1 + 2 * i) * a - 2 * i;
    Int const cb = (2 + 2 * i) * a - 2 * (i + 1);
    add_step2(d.pieces, ca, ca + (6 * i + 2));
    add_step2(d.pieces, cb, cb + (6 * i + 6));
  }
  for (Int i = t + 1; i <= 2 * k; ++i) {
    Int const cc = (1 + 2 * i) * a - 2 * i;
    add_range(d.pieces, cc, cc + 6 * (i - t - 1) - 2);
    add_step2(d.pieces, cc + 6 * (i - t - 1), cc + 6 * k);
    Int const cd = (2 + 2 * i) * a - 2 * (i + 1);
    add_range(d.pieces, cd, cd + 6 * (i - t - 1) + 2);
    add_step2(d.pieces, cd + 6 * (i - t - 1) + 4, cd + (6 * k + 2));
  }
  return d;
}

StructuralDescription structure_h11(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 4;
  Int const t = (a - 2) / 2;
  Int const c = a + a / 2;
  d.tail_start = (t + 1) * a;
  Pieces previous;
  add_point(previous, 0);
  append(d.pieces, previous);
  for (Int i = 1; i <= t; ++i) {
    Pieces A;
    add_range(A, i * a, i * a + i);
    append(d.pieces, A);
    append(d.pieces, shifted(previous, c));  // B_i
    previous = std::move(A);
  }
  return d;
}

StructuralDescription structure_h12(Int k) {
  StructuralDescription d;
  Int const a = 12 * k + 4;
  Int const half = a / 2;
  d.tail_start = (6 * k + 1) * a + 3;
  add_point(d.pieces, 0);
  for (Int i = 1; i <= 3 * k; ++i) {
    add_step2(d.pieces, i * a - 6 * (i / 3), i * a);
    add_step2(d.pieces, i * a + half - 3 - 6 * ((i - 1) / 3), i * a + half - 1);
  }
  for (Int j : {Int{1}, Int{2}}) {
    Int const m = (3 * k + j) * a;
    add_step2(d.pieces, m - 6 * k, m - 4);
    add_range(d.pieces, m - 2, m);
  }
  for (Int j = 3; j <= 3 * k + 1; ++j) {
    Int const m = (3 * k + j) * a;
    add_step2(d.pieces, m - (6 * k + 2), m - 4 - 6 * ((j - 1) / 3));
    add_range(d.pieces, m - 2 - 6 * ((j - 1) / 3), m);
  }
  for (Int j = 1; j <= 3 * k + 1; ++j) {
    Int const m = (3 * k + j) * a + half;
    add_step2(d.pieces, m + 1 - (6 * k + 2), m - 1 - 6 * ((j + 1) / 3));
    add_range(d.pieces, m + 1 - 6 * ((j + 1) / 3), m - 1);
  }
  return d;
}

StructuralDescription structure_h13(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 5;
  Int const b = a + (a - 3) / 2;
  d.tail_start = 2 * a + 2 * k * b;
  add_point(d.pieces, 0);
  for (Int i = 0; i <= k; ++i) {
    Pieces A;
    add_range(A, a, a + 3 * i);
    add_range(A, b, b + 1 + 3 * i);
    add_range(A, 2 * a, 2 * a + 3 * i);
    append(d.pieces, shifted(A, 2 * i * b));
    Pieces B;
    add_range(B, a, a + 1 + 3 * i);
    add_range(B, b, b + 3 + 3 * i);
    add_range(B, 2 * a, 2 * a + 1 + 3 * i);
    append(d.pieces, shifted(B, (2 * i + 1) * b));
  }
  return d;
}

StructuralDescription structure_h14(Int k) {
  StructuralDescription d;
  Int const a = 6 * k + 5;
  d.tail_start = (4 * k + 1) * a + 3;
  for (Int i = 0; i <= 4 * k + 2; ++i) {
    add_step2(d.pieces, i * a - 6 * (i / 2), i * a - 4);
    add_point(d.pieces, i * a);
  }
  return d;
}

StructuralDescription structure_h15(Int k) {
  StructuralDescription d;
  Int const a = 12 * k + 8;
  Int const half = a / 2;
  d.tail_start = (6 * k + 4) * a + half + 3;
  add_point(d.pieces, 0);
  for (Int i = 1; i <= 6 * k + 4; ++i) {
    add_step2(d.pieces, i * a, i * a + 2 * i);
    add_step2(d.pieces, i * a + half + 3, i * a + half + 3 + 2 * (i - 1));
  }
  return d;
}

StructuralDescription structure_h16(Int k) {
  StructuralDescription d;
  Int const a = 12 * k + 8;
  Int const half = a / 2;
  Int const b = a + half + 1;
  Int const c = a + half + 3;
  d.tail_start = (6 * k + 4) * a + half + 1;
  Pieces previous;
  add_point(previous, 0);
  append(d.pieces, previous);
  for (Int i = 1; i <= 3 * k + 2; ++i) {
    Pieces A;
    add_step2(A, i * a, i * a + 6 * (i / 3));
    append(d.pieces, A);
    append(d.pieces, shifted(previous, b));  // B_i = A_{i-1} + {b, c}
    append(d.pieces, shifted(previous, c));
    previous = std::move(A);
  }
  for (Int j = 0; j <= 3 * k + 1; ++j) {
    Int const m = (3 * k + 3 + j) * a;
    add_range(d.pieces, m, m + 6 * ((j + 1) / 3));
    add_step2(d.pieces, m + 6 * ((j + 1) / 3) + 2, m + half);
    add_range(d.pieces, m + half + 1, m + half + 3 + 6 * (j / 3));
    add_step2(d.pieces, m + half + 5 + 6 * (j / 3), (3 * k + 4 + j) * a - 1);
  }
  return d;
}

// Parametric membership forms, evaluated literally. Parameters are named
// after the roles they play in each form; r is bounded by q, and `extra`
// ranges over {0, 1} where present. Each form is nondecreasing in every
// parameter, which bounds the search.
struct ParametricForm {
  bool has_extra;
  std::function<Int(Int a, Int q, Int s, Int extra, Int r)> eval;
};

std::optional<ParametricForm> parametric_form(FamilyId id) {
  if (id.kind() != FamilyId::Kind::H) return std::nullopt;
  switch (id.index()) {
    case 5:  // (p + 2q) a + 4r - 6q
      return ParametricForm{false, [](Int a, Int q, Int p, Int, Int r) {
                              return (p + 2 * q) * a + 4 * r - 6 * q;
                            }};
    case 8:  // q a + 2r + s (a + a/2)
      return ParametricForm{false, [](Int a, Int q, Int s, Int, Int r) {
                              return q * a + 2 * r + s * (a + a / 2);
                            }};
    case 9:  // (s + 2q) a - 3q + 2r
      return ParametricForm{false, [](Int a, Int q, Int s, Int, Int r) {
                              return (s + 2 * q) * a - 3 * q + 2 * r;
                            }};
    case 10:  // (q + 2u) a + 2r - 2u
      return ParametricForm{false, [](Int a, Int q, Int u, Int, Int r) {
                              return (q + 2 * u) * a + 2 * r - 2 * u;
                            }};
    case 11:  // (q + u) a + u (a/2) + r
      return ParametricForm{false, [](Int a, Int q, Int u, Int, Int r) {
                              return (q + u) * a + u * (a / 2) + r;
                            }};
    case 12:  // (s + q) a + q (a/2) - 3q + 2r
      return ParametricForm{false, [](Int a, Int q, Int s, Int, Int r) {
                              return (s + q) * a + q * (a / 2) - 3 * q + 2 * r;
                            }};
    case 14:  // (s + 2q) a - 6q + 2r
      return ParametricForm{false, [](Int a, Int q, Int s, Int, Int r) {
                              return (s + 2 * q) * a - 6 * q + 2 * r;
                            }};
    case 15:  // (q + 3v + e) a + e (a/2) + 6v + 3e + 2r
      return ParametricForm{true, [](Int a, Int q, Int v, Int e, Int r) {
                              return (q + 3 * v + e) * a + e * (a / 2) + 6 * v + 3 * e + 2 * r;
                            }};
    case 16:  // (s + q) a + q (a/2) + q + 2r
      return ParametricForm{false, [](Int a, Int q, Int s, Int, Int r) {
                              return (s + q) * a + q * (a / 2) + q + 2 * r;
                            }};
    default:
      return std::nullopt;
  }
}

}  // namespace

FamilyId FamilyId::h(int index) {
  if (index < 1 || index > 16) {
    throw std::invalid_argument("family index must be in 1..16");
  }
  return FamilyId(Kind::H, index);
}

FamilyId FamilyId::nfamily(int block_size) {
  if (block_size < 3) {
    throw std::invalid_argument("generic family needs block size n >= 3");
  }
  if (block_size > (1 << 16)) {
    throw std::invalid_argument("generic family block size too large");
  }
  return FamilyId(Kind::NFamily, block_size);
}

FamilyId FamilyId::parse(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'H' || text[0] == 'h' || text[0] == 'N' || text[0] == 'n')) {
    int value = 0;
    auto const* first = text.data() + 1;
    auto const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last) {
      return (text[0] == 'H' || text[0] == 'h') ? h(value) : nfamily(value);
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected H1..H16 or N<n>)");
}

Int FamilyId::min_k() const { return (kind_ == Kind::H && index_ == 5) ? 2 : 1; }

std::string FamilyId::to_string() const {
  return (kind_ == Kind::H ? "H" : "N") + std::to_string(index_);
}

std::vector<FamilyId> all_h_families() {
  std::vector<FamilyId> out;
  for (int i = 1; i <= 16; ++i) out.push_back(FamilyId::h(i));
  return out;
}

GeneratorSet family_generators(FamilyId id, Int k) {
  check_domain(id, k);
  if (id.kind() == FamilyId::Kind::NFamily) {
    Int const n = id.index();
    Int const a = n * k + 1;
    std::vector<Int> gens{a};
    for (Int x = 2 * a - n; x <= 2 * a - 2; ++x) gens.push_back(x);
    return GeneratorSet(std::move(gens));
  }
  std::vector<Int> gens;
  for (auto const& form : kGeneratorForms[static_cast<std::size_t>(id.index() - 1)]) {
    gens.push_back(form.coef * k + form.offset);
  }
  return GeneratorSet(std::move(gens));
}

FamilyInstance family_instance(FamilyId id, Int k) {
  return FamilyInstance{id, k, family_generators(id, k)};
}

StructuralDescription family_structure(FamilyId id, Int k) {
  check_domain(id, k);
  if (id.kind() == FamilyId::Kind::NFamily) return structure_nfamily(id.index(), k);
  switch (id.index()) {
    case 1: return structure_h1(k);
    case 2: return structure_h2(k);
    case 3: return structure_h3(k);
    case 4: return structure_h4(k);
    case 5: return structure_h5(k);
    case 6: return structure_nfamily(3, k);
    case 7: return structure_h7(k);
    case 8: return structure_h8(k);
    case 9: return structure_h9(k);
    case 10: return structure_h10(k);
    case 11: return structure_h11(k);
    case 12: return structure_h12(k);
    case 13: return structure_h13(k);
    case 14: return structure_h14(k);
    case 15: return structure_h15(k);
    case 16: return structure_h16(k);
  }
  throw std::logic_error("unreachable family index");
}

std::vector<Int> materialize(StructuralDescription const& description, Int bound) {
  if (bound < 0) return {};
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  for (auto const& piece : description.pieces) {
    for (Int x = std::max<Int>(piece.lo, 0); x <= std::min(piece.hi, bound); ++x) {
      if ((x - piece.lo) % piece.step == 0) member[static_cast<std::size_t>(x)] = true;
    }
  }
  for (Int x = std::max<Int>(description.tail_start, 0); x <= bound; ++x) {
    member[static_cast<std::size_t>(x)] = true;
  }
  std::vector<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (member[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

StructureCheck verify_structure(FamilyId id, Int k) {
  GeneratorSet const gens = family_generators(id, k);
  StructuralDescription const desc = family_structure(id, k);
  Semigroup const semigroup = make_semigroup(gens);

  StructureCheck check;
  check.bound = desc.tail_start + 2 * gens.largest();
  std::vector<Int> const described = materialize(desc, check.bound);
  std::vector<Int> const actual = elements_up_to(semigroup, check.bound);

  std::vector<Int> diff;
  std::set_symmetric_difference(described.begin(), described.end(), actual.begin(), actual.end(),
                                std::back_inserter(diff));
  check.ok = diff.empty();
  if (!diff.empty()) {
    check.first_difference = diff.front();
    check.difference_in_semigroup = semigroup.contains(diff.front());
  }
  return check;
}

bool has_parametric_form(FamilyId id) { return parametric_form(id).has_value(); }

std::vector<Int> parametric_members(FamilyId id, Int k, Int bound) {
  auto const form = parametric_form(id);
  if (!form) {
    throw std::invalid_argument(id.to_string() + " has no parametric membership form");
  }
  Int const a = family_generators(id, k).smallest();
  if (bound < 0) return {};
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  Int const extra_max = form->has_extra ? 1 : 0;
  auto const& f = form->eval;
  for (Int q = 0; f(a, q, 0, 0, 0) <= bound; ++q) {
    for (Int s = 0; f(a, q, s, 0, 0) <= bound; ++s) {
      for (Int e = 0; e <= extra_max; ++e) {
        for (Int r = 0; r <= q; ++r) {
          Int const x = f(a, q, s, e, r);
          if (x > bound) break;
          member[static_cast<std::size_t>(x)] = true;
        }
      }
    }
  }
  std::vector<Int> out;
  for (Int x = 0; x <= bound; ++x) {
    if (member[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

FamilyMatch match_family(GeneratorSet const& gens) {
  FamilyMatch result;
  if (gens.size() != 3) return result;
  for (FamilyId id : all_h_families()) {
    auto const& first = kGeneratorForms[static_cast<std::size_t>(id.index() - 1)][0];
    Int const shifted_first = gens.smallest() - first.offset;
    if (shifted_first % first.coef != 0) continue;
    Int const k = shifted_first / first.coef;
    if (k < id.min_k() || k > kMaxFamilyK) continue;
    if (family_generators(id, k) == gens) result.matches.emplace_back(id, k);
  }
  return result;
}

}  // namespace persemi
