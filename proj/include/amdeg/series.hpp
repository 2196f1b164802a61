#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace amdeg {

/// Integer polynomial in one variable, coefficient k at index k.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static IntPoly monomial(int degree, std::int64_t coef = 1) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coef;
    return IntPoly(std::move(c));
  }
  /// (1 - λ)^e
  static IntPoly one_minus_lambda_pow(int e) {
    IntPoly r{1};
    for (int i = 0; i < e; ++i) r = r * IntPoly{1, -1};
    return r;
  }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto v : c_) s += v;
    return s;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + b * IntPoly{-1}; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  /// Multiplication by λ^k.
  IntPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
  }
  /// Exact division by (1 - λ); requires value 0 at λ = 1.
  IntPoly divided_by_one_minus_lambda() const {
    if (at_one() != 0) throw Error("polynomial is not divisible by (1 - lambda)");
    std::vector<std::int64_t> q;
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run += c_[i];
      q.push_back(run);
    }
    return IntPoly(std::move(q));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      std::int64_t v = c_[i];
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (i == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a);
        s += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    return s;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// numerator / (1 - λ)^den_exp.
class HilbertSeries {
 public:
  HilbertSeries(IntPoly numerator, int den_exp) : num_(std::move(numerator)), den_(den_exp) {}

  const IntPoly& numerator() const { return num_; }
  int den_exp() const { return den_; }

  /// Divides out the full power of (1 - λ) from the numerator.
  HilbertSeries reduced() const {
    IntPoly g = num_;
    int e = den_;
    while (e > 0 && !g.is_zero() && g.at_one() == 0) {
      g = g.divided_by_one_minus_lambda();
      --e;
    }
    return {g, e};
  }

  /// dim_K A_k for k = 0..upto.
  std::vector<std::int64_t> coefficients(int upto) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(upto) + 1, 0);
    for (int k = 0; k <= upto; ++k) c[static_cast<std::size_t>(k)] = num_[static_cast<std::size_t>(k)];
    for (int e = 0; e < den_; ++e)
      for (int k = 1; k <= upto; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - 1)];
    return c;
  }

  /// Equal as rational functions.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries ra = a.reduced(), rb = b.reduced();
    return ra.num_ == rb.num_ && ra.den_ == rb.den_;
  }

  std::string to_string() const { return "(" + num_.to_string() + ") / (1 - t)^" + std::to_string(den_); }

 private:
  IntPoly num_;
  int den_;
};

enum class PivotRule { most_frequent, least_frequent };

namespace detail {

inline bool is_pure_power(const Monomial& m, std::size_t n) {
  int support = 0;
  for (std::size_t i = 0; i < n; ++i) support += m[i] != 0;
  return support <= 1;
}

inline IntPoly monomial_numerator(std::vector<Monomial> gens, std::size_t n, PivotRule rule) {
  if (gens.empty()) return IntPoly{1};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = r * (IntPoly{1} - IntPoly::monomial(g.degree()));
    return r;
  }
  std::vector<int> freq(n, 0);
  for (const auto& g : gens) {
    if (is_pure_power(g, n)) continue;
    for (std::size_t i = 0; i < n; ++i) freq[i] += g[i] != 0;
  }
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!freq[i]) continue;
    if (pivot == n) pivot = i;
    else if (rule == PivotRule::most_frequent ? freq[i] > freq[pivot] : freq[i] < freq[pivot]) pivot = i;
  }
  const Monomial x = Monomial::variable(pivot);
  // 0 -> S/(M:x)(-1) -> S/M -> S/(M+x) -> 0
  std::vector<Monomial> plus{x};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (!g[pivot]) plus.push_back(g);
    colon.push_back(g[pivot] ? g / x : g);
  }
  return monomial_numerator(MonomialIdeal::minimalize(std::move(plus)), n, rule) +
         monomial_numerator(MonomialIdeal::minimalize(std::move(colon)), n, rule).shifted(1);
}

}  // namespace detail

/// Hilbert series of S/M by recursive splitting on a pivot variable.
inline HilbertSeries hilbert_series_monomial(const MonomialIdeal& m, PivotRule rule = PivotRule::most_frequent) {
  return {detail::monomial_numerator(m.generators(), m.num_vars(), rule), static_cast<int>(m.num_vars())};
}

/// Hilbert series of S/I via the leading-term ideal of the degrevlex basis.
inline HilbertSeries hilbert_series(const Ideal& ideal) {
  return hilbert_series_monomial(leading_term_ideal(ideal, TermOrder::degrevlex()));
}

}  // namespace amdeg
