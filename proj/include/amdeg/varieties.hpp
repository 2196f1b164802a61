#pragma once

#include <cctype>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"
#include "parser.hpp"
#include "series.hpp"

namespace amdeg {

class PointOnVariety : public Error {
 public:
  PointOnVariety() : Error("point on variety: every generator vanishes at the projection center") {}
};

namespace detail {

inline std::vector<std::string> split_list(std::string_view body, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : body) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline long parse_integer(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in " + context);
  }
  if (used != s.size()) throw ParseError("bad integer '" + s + "' in " + context);
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Rational normal scroll type S(a_1, ..., a_k), a_1 >= ... >= a_k >= 1.
struct ScrollType {
  std::vector<int> parts;

  explicit ScrollType(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw RangeError("scroll type needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw RangeError("scroll parts must be >= 1 (zero parts give cones)");
      if (i && parts[i] > parts[i - 1]) throw RangeError("scroll parts must be non-increasing");
    }
  }

  static ScrollType parse(std::string_view text) {
    text = detail::trim(text);
    if (text.size() < 3 || text.front() != 'S' || text[1] != '(' || text.back() != ')')
      throw ParseError("expected S(a1,...,ak), got '" + std::string(text) + "'");
    std::string_view body = text.substr(2, text.size() - 3);
    if (detail::trim(body).empty()) throw ParseError("empty scroll type");
    std::vector<int> p;
    for (const auto& s : detail::split_list(body, ',')) {
      long v = detail::parse_integer(s, "scroll type");
      if (v < 1 || v > static_cast<long>(kMaxVars)) throw ParseError("scroll part out of range: " + s);
      p.push_back(static_cast<int>(v));
    }
    try {
      return ScrollType(std::move(p));
    } catch (const RangeError& e) {
      throw ParseError(e.what());
    }
  }

  int k() const { return static_cast<int>(parts.size()); }
  int degree() const {
    int s = 0;
    for (int a : parts) s += a;
    return s;
  }
  /// s = k - 1 + sum a_i; the scroll lives in P^s.
  int ambient_dim() const { return k() - 1 + degree(); }
  int num_vars() const { return ambient_dim() + 1; }

  /// Display names x_{i,j} (1-based block i, 0-based j) in flattened order.
  std::vector<std::string> display_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < k(); ++i)
      for (int j = 0; j <= parts[static_cast<std::size_t>(i)]; ++j)
        out.push_back("x_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}");
    return out;
  }

  std::string to_string() const {
    std::string s = "S(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }
  friend bool operator==(const ScrollType&, const ScrollType&) = default;
};

/// Point of P^{n-1} over GF(p), scaled so its last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(std::vector<Coeff> coords, std::uint32_t modulus) : coords_(std::move(coords)) {
    PrimeField f(modulus);
    for (auto& c : coords_) c %= modulus;
    std::size_t last = coords_.size();
    for (std::size_t i = coords_.size(); i-- > 0;)
      if (coords_[i]) {
        last = i;
        break;
      }
    if (last == coords_.size()) throw RangeError("projective point has all coordinates zero");
    const Coeff inv = f.inv(coords_[last]);
    for (auto& c : coords_) c = f.mul(c, inv);
  }

  static ProjectivePoint parse(std::string_view text, std::uint32_t modulus) {
    text = detail::trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw ParseError("expected (c0:c1:...:cn), got '" + std::string(text) + "'");
    PrimeField f(modulus);
    std::vector<Coeff> c;
    for (const auto& s : detail::split_list(text.substr(1, text.size() - 2), ':'))
      c.push_back(f.reduce(detail::parse_integer(s, "point")));
    try {
      return ProjectivePoint(std::move(c), modulus);
    } catch (const RangeError& e) {
      throw ParseError(e.what());
    }
  }

  std::size_t size() const { return coords_.size(); }
  const std::vector<Coeff>& coords() const { return coords_; }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ":" : "") + std::to_string(coords_[i]);
    return s + ")";
  }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Coeff> coords_;
};

namespace detail {

inline Polynomial minor2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  return a * d - b * c;
}

}  // namespace detail

/// 2x2 minors of the scroll's 2 x (sum a_i) matrix.
inline Ideal scroll_ideal(const ScrollType& t, std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(static_cast<std::size_t>(t.num_vars()), modulus);
  std::vector<Polynomial> top, bottom;
  std::size_t base = 0;
  for (int a : t.parts) {
    for (int j = 0; j < a; ++j) {
      top.push_back(Polynomial::variable(ring, base + static_cast<std::size_t>(j)));
      bottom.push_back(Polynomial::variable(ring, base + static_cast<std::size_t>(j) + 1));
    }
    base += static_cast<std::size_t>(a) + 1;
  }
  std::vector<Polynomial> minors;
  for (std::size_t p = 0; p < top.size(); ++p)
    for (std::size_t q = p + 1; q < top.size(); ++q) minors.push_back(detail::minor2(top[p], top[q], bottom[p], bottom[q]));
  return Ideal(ring, std::move(minors));
}

namespace detail {

// Symmetric matrix [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].
inline std::vector<std::vector<Polynomial>> veronese_matrix(const Ring& ring) {
  auto y = [&](std::size_t i) { return Polynomial::variable(ring, i); };
  return {{y(0), y(1), y(2)}, {y(1), y(3), y(4)}, {y(2), y(4), y(5)}};
}

}  // namespace detail

/// Veronese surface in P^5: the six distinct 2x2 minors of the symmetric 3x3 matrix.
inline Ideal veronese_ideal(std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(6, modulus);
  auto m = detail::veronese_matrix(ring);
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<Polynomial> minors;
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < 3; ++c) {
      auto [r1, r2] = pairs[r];
      auto [c1, c2] = pairs[c];
      minors.push_back(detail::minor2(m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)],
                                      m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)],
                                      m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)],
                                      m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)]));
    }
  return Ideal(ring, std::move(minors));
}

/// Determinant of the symmetric matrix; its zero set is the secant variety.
inline Polynomial veronese_secant_det(std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(6, modulus);
  auto m = detail::veronese_matrix(ring);
  return m[0][0] * detail::minor2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * detail::minor2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * detail::minor2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

/// P^2 x P^2 in P^8: 2x2 minors of the generic 3x3 matrix (x_{3i+j}).
inline Ideal segre_p2xp2(std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(9, modulus);
  auto z = [&](std::size_t i, std::size_t j) { return Polynomial::variable(ring, 3 * i + j); };
  std::vector<Polynomial> minors;
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2)
      for (std::size_t c1 = 0; c1 < 3; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 3; ++c2)
          minors.push_back(detail::minor2(z(r1, c1), z(r1, c2), z(r2, c1), z(r2, c2)));
  return Ideal(ring, std::move(minors));
}

/// P^1 x P^1 x P^1 in P^7, x_{4a+2b+c} <-> s_a t_b u_c: the quadrics in the
/// kernel of the monomial parametrization.
inline Ideal segre_p1p1p1(std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(8, modulus);
  const auto quadrics = monomials_of_degree(8, 2);
  // Image of x_i x_j is s^.. t^.. u^.., encoded by the exponent of s_1, t_1, u_1 (each 0..2).
  std::vector<SparseVector> cols;
  for (const auto& m : quadrics) {
    int s = 0, t = 0, u = 0;
    for (std::size_t v = 0; v < 8; ++v) {
      s += m[v] * static_cast<int>(v >> 2 & 1);
      t += m[v] * static_cast<int>(v >> 1 & 1);
      u += m[v] * static_cast<int>(v & 1);
    }
    SparseVector col;
    col.push(static_cast<std::uint32_t>(9 * s + 3 * t + u), 1);
    cols.push_back(std::move(col));
  }
  std::vector<Polynomial> gens;
  for (const auto& k : kernel(cols, 27, ring->field())) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < k.size(); ++e) terms.push_back({k.val[e], quadrics[k.idx[e]]});
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

/// The five 4x4 Pfaffians of the generic skew 5x5 matrix; x_{ab} (a < b) in lex order.
inline Ideal pfaffian_5x5_generic(std::uint32_t modulus = kDefaultPrime) {
  Ring ring = make_ring(10, modulus);
  int index[5][5] = {};
  std::size_t next = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) index[a][b] = static_cast<int>(next++);
  auto x = [&](int a, int b) { return Polynomial::variable(ring, static_cast<std::size_t>(index[a][b])); };
  std::vector<Polynomial> gens;
  for (int omit = 0; omit < 5; ++omit) {
    std::vector<int> r;
    for (int i = 0; i < 5; ++i)
      if (i != omit) r.push_back(i);
    gens.push_back(x(r[0], r[1]) * x(r[2], r[3]) - x(r[0], r[2]) * x(r[1], r[3]) + x(r[0], r[3]) * x(r[1], r[2]));
  }
  return Ideal(ring, std::move(gens));
}

/// How the projection center is completed to a basis: the center replaces
/// the standard basis vector at its first (or last) nonzero coordinate.
enum class BasisCompletion { first_nonzero, last_nonzero };

/// Linear change whose last column is P and whose other columns are the
/// standard basis vectors except the one at the chosen pivot.
inline LinearChange center_to_last_coordinate(const ProjectivePoint& p, std::uint32_t modulus,
                                              BasisCompletion completion = BasisCompletion::first_nonzero) {
  const std::size_t n = p.size();
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (p.coords()[i] && (pivot == n || completion == BasisCompletion::last_nonzero)) pivot = i;
  std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, 0));
  std::size_t col = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (k != pivot) m[k][col++] = 1;
  for (std::size_t i = 0; i < n; ++i) m[i][n - 1] = p.coords()[i];
  return LinearChange(std::move(m), modulus);
}

/// Ideal of the projection of V(I) from P, in the first n-1 variables.
inline Ideal project_from_point(const Ideal& ideal, const ProjectivePoint& p,
                                BasisCompletion completion = BasisCompletion::first_nonzero) {
  const std::size_t n = ideal.num_vars();
  if (p.size() != n)
    throw ContextMismatch("point has " + std::to_string(p.size()) + " coordinates, ring has " + std::to_string(n) +
                          " variables");
  if (n < 2) throw RangeError("cannot project from P^0");
  bool off = false;
  for (const auto& g : ideal.generators())
    if (g.evaluate(p.coords())) off = true;
  if (!off) throw PointOnVariety();
  const LinearChange t = center_to_last_coordinate(p, ideal.ring()->modulus(), completion);
  std::vector<Polynomial> pulled;
  for (const auto& g : ideal.generators()) pulled.push_back(apply_linear_change(g, t));
  return eliminate(Ideal(ideal.ring(), std::move(pulled)), 1);
}

/// Seeded random invertible n x n matrix over GF(p).
inline LinearChange random_linear_change(std::size_t n, std::uint32_t modulus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coeff> coef(0, modulus - 1);
  while (true) {
    std::vector<std::vector<Coeff>> a(n, std::vector<Coeff>(n));
    for (auto& row : a)
      for (auto& v : row) v = coef(rng);
    try {
      return LinearChange(std::move(a), modulus);
    } catch (const RangeError&) {
    }
  }
}

/// Intersection with `count` seeded random hyperplanes: a random change of
/// coordinates followed by setting the last `count` variables to zero.
inline Ideal generic_linear_section(const Ideal& ideal, int count, std::uint64_t seed) {
  if (count < 0) throw RangeError("section count must be non-negative");
  if (count == 0) return ideal;
  const int dim_a = hilbert_series(ideal).reduced().den_exp();
  if (count >= dim_a)
    throw RangeError("section count " + std::to_string(count) + " must be below dim A = " + std::to_string(dim_a));
  const std::size_t n = ideal.num_vars();
  const LinearChange t = random_linear_change(n, ideal.ring()->modulus(), seed);
  Ring sub = leading_subring(ideal.ring(), n - static_cast<std::size_t>(count));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(truncate_variables(apply_linear_change(g, t), sub));
  return Ideal(sub, std::move(gens));
}

struct ScrollTypeRow {
  ScrollType type;
  int r_plus_1;
  int dim_x;
};

/// Scroll types S(a_1..a_k) with sum a_i = c + 2, whose projections are the
/// candidates in codimension c; ordered by k, then lexicographically descending.
inline std::vector<ScrollTypeRow> enumerate_scroll_types(int c) {
  if (c < 1) throw RangeError("codimension must be >= 1");
  std::vector<ScrollTypeRow> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      const int k = static_cast<int>(cur.size());
      out.push_back({ScrollType(cur), k + c + 1, k});
      return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
      cur.push_back(a);
      rec(remaining - a, a);
      cur.pop_back();
    }
  };
  rec(c + 2, c + 2);
  std::stable_sort(out.begin(), out.end(), [](const ScrollTypeRow& a, const ScrollTypeRow& b) { return a.dim_x < b.dim_x; });
  return out;
}

}  // namespace amdeg
