#pragma once

#include <random>
#include <vector>

#include <ostream>

#include "amdeg/resolution.hpp"

namespace amdeg {

// Readable failure output for diagrams.
inline void PrintTo(const BettiDiagram& b, std::ostream* os) { *os << "\n" << b.to_table(); }

}  // namespace amdeg

namespace amdeg::fixtures {

// Random homogeneous polynomial of degree d with up to `terms` terms.
inline Polynomial random_form(const Ring& ring, int d, std::size_t terms, std::mt19937_64& rng) {
  auto mons = monomials_of_degree(ring->num_vars(), d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<Coeff> coef(1, ring->modulus() - 1);
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k) t.push_back({coef(rng), mons[pick(rng)]});
  return Polynomial::from_terms(ring, std::move(t));
}

inline std::vector<Coeff> random_point(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> coef(0, p - 1);
  std::vector<Coeff> v(n);
  for (auto& c : v) c = coef(rng);
  return v;
}

}  // namespace amdeg::fixtures
