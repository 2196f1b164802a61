#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "field.hpp"

namespace amdeg {

/// Largest supported number of variables. Exponent vectors are stored densely.
inline constexpr std::size_t kMaxVars = 16;

class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(const std::vector<int>& e) {
    if (e.size() > kMaxVars) throw RangeError("too many variables in monomial");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    return m;
  }
  static Monomial variable(std::size_t i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }

  void set(std::size_t i, int e) {
    if (e < 0 || e > 255) throw RangeError("exponent out of range");
    degree_ = static_cast<std::uint16_t>(degree_ - exp_[i] + e);
    exp_[i] = static_cast<std::uint8_t>(e);
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] && other.exp_[i]) return false;
    return true;
  }
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      int e = a.exp_[i] + b.exp_[i];
      if (e > 255) throw RangeError("exponent overflow");
      m.exp_[i] = static_cast<std::uint8_t>(e);
    }
    m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return m;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    int d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      d += m.exp_[i];
    }
    m.degree_ = static_cast<std::uint16_t>(d);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  /// Arbitrary total order used for containers; not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  std::size_t hash() const {
    std::uint64_t w[2];
    std::memcpy(w, exp_.data(), sizeof(w));
    return std::hash<std::uint64_t>{}(w[0] * 0x9E3779B97F4A7C15ULL ^ (w[1] + 0x632BE59BD9B4E019ULL));
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

static_assert(kMaxVars * sizeof(std::uint8_t) == 2 * sizeof(std::uint64_t));

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// degrevlex, or a block order that eliminates the last `block` variables:
/// degrevlex on the eliminated block first, then degrevlex on the rest.
struct TermOrder {
  enum class Kind { degrevlex, block };
  Kind kind = Kind::degrevlex;
  int block = 0;

  static TermOrder degrevlex() { return {}; }
  static TermOrder eliminate_last(int t) { return {Kind::block, t}; }

  std::string name() const {
    return kind == Kind::degrevlex ? "degrevlex" : "block(" + std::to_string(block) + ")";
  }

  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;
};

namespace detail {

// degrevlex restricted to variables [lo, hi).
inline int compare_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Returns >0 if a > b, <0 if a < b, 0 if equal, in ring with n variables.
inline int compare(const TermOrder& order, const Monomial& a, const Monomial& b, std::size_t n) {
  if (order.kind == TermOrder::Kind::degrevlex || order.block == 0) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  const std::size_t split = n - static_cast<std::size_t>(order.block);
  if (int c = detail::compare_grevlex_range(a, b, split, n)) return c;
  return detail::compare_grevlex_range(a, b, 0, split);
}

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Polynomial ring GF(p)[x_0..x_{n-1}] together with a term order.
class RingContext {
 public:
  RingContext(std::size_t num_vars, std::uint32_t modulus, TermOrder order, std::vector<std::string> names)
      : n_(num_vars), field_(modulus), order_(order), names_(std::move(names)) {
    if (n_ == 0 || n_ > kMaxVars)
      throw RangeError("number of variables must be in 1.." + std::to_string(kMaxVars));
    if (names_.empty())
      for (std::size_t i = 0; i < n_; ++i) names_.push_back("x" + std::to_string(i));
    if (names_.size() != n_) throw RangeError("variable name list has wrong length");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw RangeError("duplicate variable names");
    if (order_.kind == TermOrder::Kind::block && (order_.block < 0 || static_cast<std::size_t>(order_.block) >= n_))
      throw RangeError("block size out of range");
  }

  std::size_t num_vars() const { return n_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  const TermOrder& order() const { return order_; }
  const std::vector<std::string>& var_names() const { return names_; }

  int compare(const Monomial& a, const Monomial& b) const { return amdeg::compare(order_, a, b, n_); }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  std::size_t n_;
  PrimeField field_;
  TermOrder order_;
  std::vector<std::string> names_;
};

inline Ring make_ring(std::size_t num_vars, std::uint32_t modulus = kDefaultPrime,
                      TermOrder order = TermOrder::degrevlex(), std::vector<std::string> names = {}) {
  return std::make_shared<const RingContext>(num_vars, modulus, order, std::move(names));
}

inline Ring with_order(const Ring& r, TermOrder order) {
  if (r->order() == order) return r;
  return make_ring(r->num_vars(), r->modulus(), order, r->var_names());
}

/// Ring on the first k variables of r (same prime, degrevlex).
inline Ring leading_subring(const Ring& r, std::size_t k) {
  std::vector<std::string> names(r->var_names().begin(), r->var_names().begin() + static_cast<long>(k));
  return make_ring(k, r->modulus(), TermOrder::degrevlex(), std::move(names));
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

/// All monomials of total degree d in n variables, in decreasing degrevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  const TermOrder o = TermOrder::degrevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return compare(o, a, b, n) > 0; });
  return out;
}

}  // namespace amdeg
