#pragma once

#include <map>
#include <vector>

#include "resolution.hpp"

namespace amdeg {

namespace detail {

// Graded pieces of A = S/I spanned by degrevlex standard monomials, with
// multiplication by each variable as sparse matrices.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(const Ideal& ideal)
      : ring_(with_order(ideal.ring(), TermOrder::degrevlex())),
        n_(ideal.num_vars()),
        gb_(ideal.groebner_basis(TermOrder::degrevlex())),
        leads_(leading_term_ideal(ideal, TermOrder::degrevlex())) {}

  std::size_t dim(int d) { return piece(d).monomials.size(); }

  // Coordinates in A_{d+1} of x_k times the b-th basis monomial of A_d.
  const SparseVector& times_variable(int d, std::size_t b, std::size_t k) {
    Piece& p = piece(d);
    if (p.mult.empty()) {
      Piece& next = piece(d + 1);
      p.mult.resize(p.monomials.size() * n_);
      for (std::size_t i = 0; i < p.monomials.size(); ++i)
        for (std::size_t v = 0; v < n_; ++v) {
          Polynomial nf = normal_form(Polynomial::monomial(ring_, p.monomials[i] * Monomial::variable(v)), gb_);
          std::vector<std::pair<std::uint32_t, Coeff>> e;
          for (const auto& t : nf.terms()) e.emplace_back(next.index.at(t.mon), t.coef);
          std::sort(e.begin(), e.end());
          SparseVector& out = p.mult[i * n_ + v];
          for (auto& [j, c] : e) out.push(j, c);
        }
    }
    return p.mult[b * n_ + k];
  }

 private:
  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    std::vector<SparseVector> mult;
  };

  Piece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    Piece p;
    if (d >= 0)
      for (const auto& m : monomials_of_degree(n_, d))
        if (!leads_.contains(m)) {
          p.index.emplace(m, static_cast<std::uint32_t>(p.monomials.size()));
          p.monomials.push_back(m);
        }
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  Ring ring_;
  std::size_t n_;
  std::vector<Polynomial> gb_;
  MonomialIdeal leads_;
  std::map<int, Piece> pieces_;
};

}  // namespace detail

/// Graded Betti numbers of S/I from the homology of the Koszul complex
/// K(x_0..x_{n-1}) ⊗ S/I:  beta_{i,i+j} = dim H_i(K ⊗ A)_{i+j}, computed for
/// 1 <= i <= max_col and 0 <= j <= max_row.
inline BettiDiagram betti_via_koszul(const Ideal& ideal, int max_col, int max_row) {
  const std::size_t n = ideal.num_vars();
  const PrimeField& field = ideal.ring()->field();
  detail::QuotientAlgebra algebra(ideal);
  max_col = std::min<int>(max_col, static_cast<int>(n));

  // Subsets of {0..n-1} by size, with position of each mask inside its size class.
  std::vector<std::vector<std::uint32_t>> subsets(n + 1);
  std::vector<std::uint32_t> position(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto& cls = subsets[static_cast<std::size_t>(__builtin_popcount(mask))];
    position[mask] = static_cast<std::uint32_t>(cls.size());
    cls.push_back(mask);
  }

  // Rank of ∂ : ∧^i ⊗ A_j -> ∧^{i-1} ⊗ A_{j+1}.
  std::map<std::pair<int, int>, std::size_t> ranks;
  auto boundary_rank = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > static_cast<int>(n) || j < 0) return 0;
    auto key = std::make_pair(i, j);
    if (auto it = ranks.find(key); it != ranks.end()) return it->second;
    const std::size_t src_dim = algebra.dim(j);
    const std::size_t tgt_dim = algebra.dim(j + 1);
    std::vector<SparseVector> cols;
    for (std::uint32_t mask : subsets[static_cast<std::size_t>(i)])
      for (std::size_t b = 0; b < src_dim; ++b) {
        std::vector<std::pair<std::uint32_t, Coeff>> e;
        int sign_pos = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if (!(mask >> t & 1u)) continue;
          const std::uint32_t face = mask & ~(1u << t);
          const std::size_t offset = position[face] * tgt_dim;
          const SparseVector& prod = algebra.times_variable(j, b, t);
          for (std::size_t k = 0; k < prod.size(); ++k) {
            Coeff v = prod.val[k];
            if (sign_pos % 2) v = field.neg(v);
            e.emplace_back(static_cast<std::uint32_t>(offset + prod.idx[k]), v);
          }
          ++sign_pos;
        }
        std::sort(e.begin(), e.end());
        SparseVector col;
        for (auto& [idx, v] : e) col.push(idx, v);
        cols.push_back(std::move(col));
      }
    std::size_t r = rank(cols, subsets[static_cast<std::size_t>(i - 1)].size() * tgt_dim, field);
    ranks.emplace(key, r);
    return r;
  };

  BettiDiagram out;
  for (int i = 1; i <= max_col; ++i)
    for (int j = 0; j <= max_row; ++j) {
      const long chains = static_cast<long>(subsets[static_cast<std::size_t>(i)].size() * algebra.dim(j));
      const long beta = chains - static_cast<long>(boundary_rank(i, j)) - static_cast<long>(boundary_rank(i + 1, j - 1));
      out.set(i, j, beta);
    }
  return out;
}

}  // namespace amdeg
