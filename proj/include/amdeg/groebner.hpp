#pragma once

#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

namespace amdeg {

/// Fully reduces f modulo G (every term, not only the leading one).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) Polynomial::check_same(f, g);
  const PrimeField& field = f.ring()->field();
  std::vector<Term> remainder;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term lead = rest.terms().front();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.mon)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Coeff c = field.neg(field.mul(lead.coef, field.inv(divisor->leading_coefficient())));
      rest = rest.axpy(c, lead.mon / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(lead);
      std::vector<Term> tail(rest.terms().begin() + 1, rest.terms().end());
      rest = Polynomial::from_sorted_terms(rest.ring(), std::move(tail));
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder));
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger's algorithm with degree-by-degree pair selection and the
/// Gebauer-Moeller update (coprime and chain criteria). Inputs must be
/// homogeneous polynomials in `ring`.
class Buchberger {
 public:
  explicit Buchberger(Ring ring) : ring_(std::move(ring)) {}

  /// `complete`, when given, is consulted after each finished degree once all
  /// inputs are consumed; returning true stops the computation early (the
  /// caller certifies completeness, e.g. by a Hilbert series comparison).
  std::vector<Polynomial> run(std::vector<Polynomial> input,
                              const std::function<bool(const std::vector<Polynomial>&)>& complete = {}) {
    std::vector<Polynomial> pending;
    for (auto& f : input) {
      if (f.is_zero()) continue;
      if (f.is_constant()) return {Polynomial::constant(ring_, 1)};
      pending.push_back(f.monic());
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    std::size_t next_input = 0;
    while (next_input < pending.size() || !pairs_.empty()) {
      int d = std::numeric_limits<int>::max();
      if (next_input < pending.size()) d = pending[next_input].degree();
      for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());

      std::vector<CriticalPair> now;
      std::vector<CriticalPair> later;
      for (auto& p : pairs_) (p.lcm.degree() == d ? now : later).push_back(p);
      pairs_ = std::move(later);
      std::sort(now.begin(), now.end(),
                [&](const CriticalPair& a, const CriticalPair& b) { return ring_->compare(a.lcm, b.lcm) < 0; });

      for (const auto& p : now) {
        Polynomial s = spoly(basis_[p.i], basis_[p.j], p.lcm);
        add(normal_form(s, basis_));
      }
      while (next_input < pending.size() && pending[next_input].degree() == d)
        add(normal_form(pending[next_input++], basis_));
      if (complete && next_input == pending.size() && !pairs_.empty() && complete(basis_)) break;
    }
    return reduce();
  }

 private:
  Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& lcm) const {
    Polynomial a = f.times_monomial(lcm / f.leading_monomial());
    return a.axpy(ring_->field().neg(1), lcm / g.leading_monomial(), g);
  }

  void add(const Polynomial& h_raw) {
    if (h_raw.is_zero()) return;
    Polynomial h = h_raw.monic();
    const std::size_t hi = basis_.size();
    const Monomial& lh = h.leading_monomial();
    basis_.push_back(h);
    active_.push_back(true);

    // Gebauer-Moeller: new pairs (h, g).
    std::vector<CriticalPair> c;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) c.push_back({g, hi, Monomial::lcm(basis_[g].leading_monomial(), lh)});
    std::vector<CriticalPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& p = c[k];
      bool coprime = basis_[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t m = k + 1; m < c.size() && !dominated; ++m)
          if (c[m].lcm.divides(p.lcm)) dominated = true;
        for (std::size_t m = 0; m < d.size() && !dominated; ++m)
          if (d[m].lcm.divides(p.lcm)) dominated = true;
      }
      if (coprime || !dominated) d.push_back(p);
    }
    std::vector<CriticalPair> kept;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(Monomial::lcm(basis_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(Monomial::lcm(basis_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (const auto& p : d)
      if (!basis_[p.i].leading_monomial().coprime(lh)) kept.push_back(p);
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  std::vector<Polynomial> reduce() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& a = basis_[j].leading_monomial();
        const Monomial& b = basis_[i].leading_monomial();
        if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      out.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

  Ring ring_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Homogeneous ideal. An ideal with no nonzero generators is the zero ideal
/// and is flagged as such. Gröbner bases are cached per term order.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw ContextMismatch();
      if (!g.is_homogeneous()) throw RangeError("ideal generators must be homogeneous: " + to_string(g));
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal parse(const Ring& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
    return Ideal(ring, std::move(ps));
  }

  const Ring& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_->num_vars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Gröbner basis, polynomials living in the ring with `order`.
  const std::vector<Polynomial>& groebner_basis(TermOrder order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
    Ring target = with_order(ring_, order);
    std::vector<Polynomial> input;
    for (const auto& g : gens_) input.push_back(g.in_ring(target));
    auto gb = detail::Buchberger(target).run(std::move(input));
    return cache_->bases.emplace(order, std::move(gb)).first->second;
  }
  const std::vector<Polynomial>& groebner_basis() const { return groebner_basis(ring_->order()); }

  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::vector<Polynomial>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Polynomial>& buchberger(const Ideal& ideal, TermOrder order) {
  return ideal.groebner_basis(order);
}

/// I ∩ K[x_0..x_{n-t-1}], returned in the ring of the first n-t variables.
inline Ideal eliminate(const Ideal& ideal, int t) {
  const std::size_t n = ideal.num_vars();
  if (t < 1 || static_cast<std::size_t>(t) >= n) throw RangeError("elimination count out of range");
  const std::size_t keep = n - static_cast<std::size_t>(t);
  Ring sub = leading_subring(ideal.ring(), keep);
  std::vector<Polynomial> out;
  for (const auto& g : ideal.groebner_basis(TermOrder::eliminate_last(t))) {
    bool uses_eliminated = false;
    for (const auto& term : g.terms())
      for (std::size_t i = keep; i < n; ++i)
        if (term.mon[i]) uses_eliminated = true;
    if (!uses_eliminated) out.push_back(truncate_variables(g, sub));
  }
  return Ideal(sub, std::move(out));
}

/// Monomial ideal given by an antichain of generators under divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : n_(num_vars), gens_(minimalize(std::move(gens))) {}

  std::size_t num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
      bool redundant = false;
      for (const auto& h : out)
        if (h.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(g);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal leading_term_ideal(const Ideal& ideal, TermOrder order) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis(order)) leads.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.num_vars(), std::move(leads));
}
inline MonomialIdeal leading_term_ideal(const Ideal& ideal) { return leading_term_ideal(ideal, ideal.ring()->order()); }

inline bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw ContextMismatch();
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(f, ideal.groebner_basis()).is_zero();
}

/// Monomials of one degree with a reverse index, for Macaulay-matrix style
/// linear algebra.
struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;

  DegreeBasis() = default;
  DegreeBasis(std::size_t n, int d) : degree(d), monomials(monomials_of_degree(n, d)) {
    index.reserve(monomials.size());
    for (std::uint32_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }
  std::size_t size() const { return monomials.size(); }

  /// Coordinates of m*f, which must be homogeneous of degree `degree`.
  SparseVector vector_of(const Polynomial& f, const Monomial& m = {}) const {
    std::vector<std::pair<std::uint32_t, Coeff>> e;
    e.reserve(f.size());
    for (const auto& t : f.terms()) e.emplace_back(index.at(t.mon * m), t.coef);
    std::sort(e.begin(), e.end());
    SparseVector v;
    for (auto& [i, c] : e) v.push(i, c);
    return v;
  }
};

/// Lazily built DegreeBasis objects for one number of variables.
class DegreeBases {
 public:
  explicit DegreeBases(std::size_t n) : n_(n) {}
  const DegreeBasis& operator[](int d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, DegreeBasis(n_, d)).first;
    return it->second;
  }
  std::size_t num_vars() const { return n_; }

 private:
  std::size_t n_;
  std::map<int, DegreeBasis> cache_;
};

struct MinimalGenerators {
  std::vector<std::pair<int, int>> degree_counts;  // (degree, count), increasing degree
  std::vector<Polynomial> generators;
};

/// In each generator degree d, picks a basis of I_d modulo S_1 * I_{d-1}.
inline MinimalGenerators minimal_generators(const Ideal& ideal) {
  MinimalGenerators out;
  std::vector<Polynomial> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  if (!gens.empty() && gens.front().is_constant()) {
    out.generators.push_back(Polynomial::constant(ideal.ring(), 1));
    out.degree_counts.push_back({0, 1});
    return out;
  }
  DegreeBases bases(ideal.num_vars());
  std::size_t k = 0;
  while (k < gens.size()) {
    const int d = gens[k].degree();
    const DegreeBasis& basis = bases[d];
    Echelon echelon(basis.size(), ideal.ring()->field());
    for (const auto& g : out.generators) {
      const DegreeBasis& shifts = bases[d - g.degree()];
      for (const auto& m : shifts.monomials) echelon.insert(basis.vector_of(g, m));
    }
    int count = 0;
    for (; k < gens.size() && gens[k].degree() == d; ++k) {
      if (echelon.insert(basis.vector_of(gens[k]))) {
        out.generators.push_back(gens[k]);
        ++count;
      }
    }
    if (count) out.degree_counts.push_back({d, count});
  }
  return out;
}

/// The ideal generated by a minimal generating subset of the given generators.
inline Ideal minimalized(const Ideal& ideal) { return Ideal(ideal.ring(), minimal_generators(ideal).generators); }

}  // namespace amdeg
