#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace amdeg {

struct Term {
  Coeff coef;
  Monomial mon;
};

/// Sparse polynomial over the ring's prime field. Terms are strictly
/// decreasing in the ring's term order and carry nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const PrimeField& f = p.ring_->field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    for (const auto& t : terms) {
      for (std::size_t i = p.ring_->num_vars(); i < kMaxVars; ++i)
        if (t.mon[i] != 0) throw RangeError("monomial uses a variable outside the ring");
      auto [it, inserted] = acc.try_emplace(t.mon, t.coef);
      if (!inserted) it->second = f.add(it->second, t.coef);
    }
    for (const auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({c, m});
    p.sort_terms();
    return p;
  }
  /// Trusts that `terms` are already canonical (sorted, nonzero, distinct).
  static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(Ring ring, Coeff c) {
    Polynomial p(std::move(ring));
    c %= p.ring_->modulus();
    if (c) p.terms_.push_back({c, Monomial{}});
    return p;
  }
  static Polynomial variable(Ring ring, std::size_t i) {
    if (i >= ring->num_vars()) throw RangeError("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({1, Monomial::variable(i)});
    return p;
  }
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1) {
    Polynomial p(std::move(ring));
    if (c % p.ring_->modulus()) p.terms_.push_back({c % p.ring_->modulus(), m});
    return p;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

  const Monomial& leading_monomial() const { return terms_.front().mon; }
  Coeff leading_coefficient() const { return terms_.front().coef; }

  /// Total degree if homogeneous (the zero polynomial counts as homogeneous
  /// of any degree and reports nullopt here), nullopt otherwise.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.front().mon.degree();
    for (const auto& t : terms_)
      if (t.mon.degree() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = ring_->field().neg(t.coef);
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.axpy(1, Monomial{}, b); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.axpy(a.ring_->field().neg(1), Monomial{}, b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const PrimeField& f = a.ring_->field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, inserted] = acc.try_emplace(s.mon * t.mon, f.mul(s.coef, t.coef));
        if (!inserted) it->second = f.add(it->second, f.mul(s.coef, t.coef));
      }
    Polynomial r(a.ring_);
    r.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c) r.terms_.push_back({c, m});
    r.sort_terms();
    return r;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  Polynomial scaled(Coeff c) const {
    c %= ring_->modulus();
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m, Coeff c = 1) const {
    c %= ring_->modulus();
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(t.coef, c), t.mon * m});
    return r;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coefficient()));
  }

  /// Returns *this + c * m * g, merging in a single pass.
  Polynomial axpy(Coeff c, const Monomial& m, const Polynomial& g) const {
    check_same(*this, g);
    const PrimeField& f = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mon * m;
      int cmp = i == terms_.size() ? -1 : ring_->compare(terms_[i].mon, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Coeff v = f.mul(c, g.terms_[j++].coef);
        if (v) r.terms_.push_back({v, gm});
      } else {
        Coeff v = f.add(terms_[i].coef, f.mul(c, g.terms_[j].coef));
        if (v) r.terms_.push_back({v, gm});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    const PrimeField& f = ring_->field();
    Coeff sum = 0;
    for (const auto& t : terms_) {
      Coeff v = t.coef;
      for (std::size_t i = 0; i < ring_->num_vars(); ++i)
        if (t.mon[i]) v = f.mul(v, f.pow(point.at(i) % ring_->modulus(), t.mon[i]));
      sum = f.add(sum, v);
    }
    return sum;
  }

  /// Same polynomial re-expressed in another ring with the same variables and
  /// prime (typically a different term order).
  Polynomial in_ring(const Ring& target) const {
    if (target->num_vars() != ring_->num_vars() || target->modulus() != ring_->modulus())
      throw ContextMismatch();
    Polynomial r(target);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mon == b.terms_[i].mon)) return false;
    return true;
  }

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw ContextMismatch();
  }

 private:
  void sort_terms() {
    const RingContext& r = *ring_;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return r.greater(a.mon, b.mon); });
  }

  Ring ring_;
  std::vector<Term> terms_;
};

/// Invertible n x n matrix over GF(p) acting by x_i -> sum_j m[i][j] x_j.
class LinearChange {
 public:
  LinearChange(std::vector<std::vector<Coeff>> matrix, std::uint32_t modulus) : m_(std::move(matrix)), p_(modulus) {
    const std::size_t n = m_.size();
    for (auto& row : m_) {
      if (row.size() != n) throw RangeError("linear change must be square");
      for (auto& v : row) v %= p_;
    }
    if (rank() != n) throw RangeError("linear change is singular");
  }

  static LinearChange identity(std::size_t n, std::uint32_t modulus) {
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return LinearChange(std::move(m), modulus);
  }

  std::size_t size() const { return m_.size(); }
  const std::vector<std::vector<Coeff>>& matrix() const { return m_; }

 private:
  std::size_t rank() const {
    PrimeField f(p_);
    auto a = m_;
    const std::size_t n = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
      std::size_t piv = r;
      while (piv < n && a[piv][c] == 0) ++piv;
      if (piv == n) continue;
      std::swap(a[piv], a[r]);
      Coeff inv = f.inv(a[r][c]);
      for (std::size_t i = r + 1; i < n; ++i) {
        if (!a[i][c]) continue;
        Coeff fac = f.mul(a[i][c], inv);
        for (std::size_t k = c; k < n; ++k) a[i][k] = f.sub(a[i][k], f.mul(fac, a[r][k]));
      }
      ++r;
    }
    return r;
  }

  std::vector<std::vector<Coeff>> m_;
  std::uint32_t p_;
};

/// Substitution x_i -> sum_j T[i][j] x_j.
inline Polynomial apply_linear_change(const Polynomial& f, const LinearChange& t) {
  const Ring& ring = f.ring();
  const std::size_t n = ring->num_vars();
  if (t.size() != n) throw ContextMismatch();
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> lin;
    for (std::size_t j = 0; j < n; ++j)
      if (t.matrix()[i][j] % ring->modulus()) lin.push_back({t.matrix()[i][j] % ring->modulus(), Monomial::variable(j)});
    powers[i].push_back(Polynomial::constant(ring, 1));
    powers[i].push_back(Polynomial::from_terms(ring, std::move(lin)));
  }
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  Polynomial out(ring);
  for (const auto& term : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, term.coef);
    for (std::size_t i = 0; i < n; ++i)
      if (term.mon[i]) prod = prod * power(i, term.mon[i]);
    out += prod;
  }
  return out;
}

/// Image of f under x_i -> x_i for i < k and x_i -> 0 for i >= k, as a
/// polynomial in `target` (a ring with k variables).
inline Polynomial truncate_variables(const Polynomial& f, const Ring& target) {
  const std::size_t k = target->num_vars();
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    bool ok = true;
    for (std::size_t i = k; i < f.ring()->num_vars(); ++i)
      if (t.mon[i]) ok = false;
    if (ok) kept.push_back(t);
  }
  return Polynomial::from_terms(target, std::move(kept));
}

}  // namespace amdeg
