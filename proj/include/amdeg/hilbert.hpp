#pragma once

#include <cstdint>

#include "resolution.hpp"
#include "series.hpp"

namespace amdeg {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Euler characteristic of the resolution: sum_i (-1)^i sum_a λ^a over (1-λ)^n.
inline HilbertSeries hilbert_from_resolution(const FreeResolution& res) {
  IntPoly num;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int a : res.modules[i].degrees) num = num + IntPoly::monomial(a, i % 2 ? -1 : 1);
  return {num, static_cast<int>(res.ring->num_vars())};
}

struct NumericInvariants {
  int dim = 0;         // projective dimension d of X
  int codim = 0;       // c = n - 1 - d
  std::int64_t degree = 0;
  int depth = 0;       // of A = S/I
  int codepth = 0;     // q = dim A - depth A
  int regularity = 0;  // of A
  int projective_dim = 0;

  friend bool operator==(const NumericInvariants&, const NumericInvariants&) = default;
};

inline NumericInvariants numeric_invariants(const HilbertSeries& series, const BettiDiagram& betti, std::size_t n) {
  HilbertSeries red = series.reduced();
  if (red.numerator().is_zero()) throw RangeError("invariants of the unit ideal are undefined");
  if (betti.empty()) throw RangeError("invariants of the zero ideal are undefined");
  if (red.den_exp() < 1) throw RangeError("ideal defines the empty variety");
  NumericInvariants inv;
  inv.dim = red.den_exp() - 1;
  inv.codim = static_cast<int>(n) - 1 - inv.dim;
  inv.degree = red.numerator().at_one();
  inv.projective_dim = betti.max_col();
  inv.depth = static_cast<int>(n) - inv.projective_dim;
  inv.codepth = inv.dim + 1 - inv.depth;
  inv.regularity = betti.max_row();
  return inv;
}

/// (1 + (c+1)λ - λ(1-λ)^{q+1}) / (1-λ)^{d+1}
inline HilbertSeries hilbert_amd_predicted(int c, int d, int q) {
  if (c < 1 || d < 1 || q < 0 || q > d)
    throw RangeError("need c >= 1, d >= 1 and 0 <= q <= d (got c=" + std::to_string(c) + ", d=" + std::to_string(d) +
                     ", q=" + std::to_string(q) + ")");
  IntPoly num = IntPoly{1, c + 1} - IntPoly::one_minus_lambda_pow(q + 1).shifted(1);
  return {num, d + 1};
}

/// binomial(c+1, 2) - q - 1
inline std::int64_t quadric_count_predicted(int c, int q) {
  if (c < 1 || q < 0) throw RangeError("need c >= 1 and q >= 0");
  std::int64_t r = binomial(c + 1, 2) - q - 1;
  if (r < 0) throw RangeError("inconsistent (c, q): negative quadric count");
  return r;
}

}  // namespace amdeg
