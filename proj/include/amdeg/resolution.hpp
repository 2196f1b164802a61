#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"
#include "series.hpp"

namespace amdeg {

/// Direct sum of twists S(-a); `degrees` lists the a's.
struct GradedFreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Homogeneous map source -> target, stored column by column.
class GradedMap {
 public:
  GradedMap(Ring ring, GradedFreeModule source, GradedFreeModule target, std::vector<std::vector<Polynomial>> columns)
      : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
    if (cols_.size() != source_.rank()) throw RangeError("map has wrong number of columns");
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].size() != target_.rank()) throw RangeError("map has wrong number of rows");
      for (std::size_t r = 0; r < target_.rank(); ++r) {
        const Polynomial& e = cols_[c][r];
        if (!same_ring(e.ring(), ring_)) throw ContextMismatch();
        if (e.is_zero()) continue;
        auto d = e.homogeneous_degree();
        if (!d || *d != source_.degrees[c] - target_.degrees[r])
          throw RangeError("inconsistent degree bookkeeping at entry (" + std::to_string(r) + ", " +
                           std::to_string(c) + ")");
      }
    }
  }

  /// 1 x m map S(-d_1) + ... + S(-d_m) -> S given by the polynomials.
  static GradedMap row(const Ring& ring, const std::vector<Polynomial>& polys) {
    GradedFreeModule src;
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& p : polys) {
      auto d = p.homogeneous_degree();
      if (!d) throw RangeError("generators must be nonzero and homogeneous");
      src.degrees.push_back(*d);
      cols.push_back({p});
    }
    return GradedMap(ring, std::move(src), GradedFreeModule{{0}}, std::move(cols));
  }

  const Ring& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const Polynomial& entry(std::size_t r, std::size_t c) const { return cols_[c][r]; }
  const std::vector<Polynomial>& column(std::size_t c) const { return cols_[c]; }

  bool has_unit_entry() const {
    for (const auto& col : cols_)
      for (const auto& e : col)
        if (!e.is_zero() && e.is_constant()) return true;
    return false;
  }
  bool is_zero() const {
    for (const auto& col : cols_)
      for (const auto& e : col)
        if (!e.is_zero()) return false;
    return true;
  }

 private:
  friend class Minimizer;
  Ring ring_;
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial>> cols_;
};

/// a ∘ b, for b: F -> G and a: G -> H.
inline GradedMap compose(const GradedMap& a, const GradedMap& b) {
  if (!(a.source() == b.target())) throw RangeError("maps are not composable");
  std::vector<std::vector<Polynomial>> cols(b.cols(), std::vector<Polynomial>(a.rows(), Polynomial(a.ring())));
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      if (b.entry(k, c).is_zero()) continue;
      for (std::size_t r = 0; r < a.rows(); ++r)
        if (!a.entry(r, k).is_zero()) cols[c][r] += a.entry(r, k) * b.entry(k, c);
    }
  return GradedMap(a.ring(), b.source(), a.target(), std::move(cols));
}

namespace detail {

// Coordinates of the graded pieces (F)_D of a free module.
struct GradedPiece {
  std::vector<std::size_t> offsets;        // per generator
  std::vector<const DegreeBasis*> bases;   // per generator, null if D < degree
  std::size_t dim = 0;

  GradedPiece(const GradedFreeModule& m, int D, DegreeBases& cache) {
    for (int a : m.degrees) {
      offsets.push_back(dim);
      if (D >= a) {
        bases.push_back(&cache[D - a]);
        dim += bases.back()->size();
      } else {
        bases.push_back(nullptr);
      }
    }
  }

  // Coordinates of m * v, where v is a vector of polynomials (one per generator).
  SparseVector coords(const std::vector<Polynomial>& v, const Monomial& m) const {
    std::vector<std::pair<std::uint32_t, Coeff>> e;
    for (std::size_t g = 0; g < v.size(); ++g) {
      if (v[g].is_zero()) continue;
      for (const auto& t : v[g].terms())
        e.emplace_back(static_cast<std::uint32_t>(offsets[g] + bases[g]->index.at(t.mon * m)), t.coef);
    }
    std::sort(e.begin(), e.end());
    SparseVector out;
    for (auto& [i, c] : e) out.push(i, c);
    return out;
  }

  std::size_t generator_of(std::size_t index) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), index);
    std::size_t g = static_cast<std::size_t>(it - offsets.begin()) - 1;
    while (!bases[g] || index - offsets[g] >= bases[g]->size()) --g;
    return g;
  }
};

}  // namespace detail

/// Minimal generators, in degrees <= max_degree, of the kernel of `m`,
/// returned as a map into m's source.
inline GradedMap syzygies(const GradedMap& m, int max_degree) {
  const Ring& ring = m.ring();
  const PrimeField& field = ring->field();
  DegreeBases cache(ring->num_vars());
  GradedFreeModule out_module;
  std::vector<std::vector<Polynomial>> out_cols;
  if (m.cols() == 0) return GradedMap(ring, {}, m.source(), {});

  const int min_degree = *std::min_element(m.source().degrees.begin(), m.source().degrees.end());
  for (int D = min_degree; D <= max_degree; ++D) {
    detail::GradedPiece src(m.source(), D, cache);
    detail::GradedPiece tgt(m.target(), D, cache);
    if (src.dim == 0) continue;

    std::vector<SparseVector> columns;
    columns.reserve(src.dim);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!src.bases[c]) continue;
      for (const auto& mono : src.bases[c]->monomials) columns.push_back(tgt.coords(m.column(c), mono));
    }
    std::vector<SparseVector> ker = kernel(columns, tgt.dim, field);
    if (ker.empty()) continue;

    Echelon known(src.dim, field);
    for (std::size_t g = 0; g < out_cols.size(); ++g) {
      const DegreeBasis& shifts = cache[D - out_module.degrees[g]];
      for (const auto& mono : shifts.monomials) known.insert(src.coords(out_cols[g], mono));
    }
    for (const auto& k : ker) {
      if (!known.insert(k)) continue;
      std::vector<std::vector<Term>> terms(m.cols());
      for (std::size_t e = 0; e < k.size(); ++e) {
        std::size_t g = src.generator_of(k.idx[e]);
        terms[g].push_back({k.val[e], src.bases[g]->monomials[k.idx[e] - src.offsets[g]]});
      }
      std::vector<Polynomial> col;
      for (auto& t : terms) col.push_back(Polynomial::from_terms(ring, std::move(t)));
      out_cols.push_back(std::move(col));
      out_module.degrees.push_back(D);
    }
  }
  return GradedMap(ring, std::move(out_module), m.source(), std::move(out_cols));
}

/// F_0 <- F_1 <- ... <- F_len with maps[i-1] = d_i : F_i -> F_{i-1}.
struct FreeResolution {
  Ring ring;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMap> maps;
  bool minimal = false;

  std::size_t length() const { return maps.size(); }
  bool has_unit_entries() const {
    return std::any_of(maps.begin(), maps.end(), [](const GradedMap& d) { return d.has_unit_entry(); });
  }
};

/// Castelnuovo-Mumford regularity of S/I, read off the reduced degrevlex basis
/// of I in seeded random coordinates (generic initial ideal). The basis is
/// computed only until its leading terms reproduce the Hilbert series of S/I.
inline int regularity_estimate(const Ideal& ideal, std::uint64_t seed = 0) {
  if (ideal.is_zero()) return 0;
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->num_vars();
  const HilbertSeries target = hilbert_series(ideal);
  std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
  std::uniform_int_distribution<Coeff> coef(0, ring->modulus() - 1);
  std::optional<LinearChange> change;
  while (!change) {
    std::vector<std::vector<Coeff>> a(n, std::vector<Coeff>(n));
    for (auto& row : a)
      for (auto& v : row) v = coef(rng);
    try {
      change.emplace(std::move(a), ring->modulus());
    } catch (const RangeError&) {
    }
  }
  Ring grevlex = with_order(ring, TermOrder::degrevlex());
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(apply_linear_change(g.in_ring(grevlex), *change));
  auto complete = [&](const std::vector<Polynomial>& basis) {
    std::vector<Monomial> leads;
    for (const auto& b : basis) leads.push_back(b.leading_monomial());
    return hilbert_series_monomial(MonomialIdeal(n, std::move(leads))) == target;
  };
  auto gin = detail::Buchberger(grevlex).run(std::move(moved), complete);
  int top = 0;
  for (const auto& g : gin) top = std::max(top, g.degree());
  return std::max(0, top - 1);
}

struct ResolutionOptions {
  /// Refuse to compute when the regularity of S/I exceeds this bound.
  int degree_cap = 8;
  std::uint64_t seed = 0;
  /// Known regularity of S/I; estimated when negative.
  int regularity = -1;
};

/// Free resolution of S/I built from I's generators as given (which may be
/// redundant), each later step taking minimal generators of the kernel.
inline FreeResolution free_resolution(const Ideal& ideal, const ResolutionOptions& opts = {}) {
  FreeResolution res;
  res.ring = ideal.ring();
  res.modules.push_back(GradedFreeModule{{0}});
  if (ideal.is_zero()) {
    res.minimal = true;
    return res;
  }
  const int reg = opts.regularity >= 0 ? opts.regularity : regularity_estimate(ideal, opts.seed);
  if (reg > opts.degree_cap)
    throw RangeError("regularity " + std::to_string(reg) + " exceeds degree cap " + std::to_string(opts.degree_cap));
  GradedMap d1 = GradedMap::row(ideal.ring(), ideal.generators());
  int top_generator = 0;
  for (int a : d1.source().degrees) top_generator = std::max(top_generator, a);
  res.modules.push_back(d1.source());
  res.maps.push_back(std::move(d1));
  const std::size_t n = ideal.num_vars();
  for (std::size_t i = 2;; ++i) {
    int bound = static_cast<int>(i) + reg;
    if (i == 2) bound = std::max(bound, top_generator);
    GradedMap next = syzygies(res.maps.back(), bound);
    if (next.cols() == 0) break;
    if (i > n + 1) throw Error("resolution longer than the number of variables");
    res.modules.push_back(next.source());
    res.maps.push_back(std::move(next));
  }
  res.minimal = !res.has_unit_entries();
  return res;
}

/// d_{i-1} ∘ d_i = 0 for every consecutive pair.
inline bool composes_to_zero(const FreeResolution& res) {
  for (std::size_t k = 1; k < res.maps.size(); ++k)
    if (!compose(res.maps[k - 1], res.maps[k]).is_zero()) return false;
  return true;
}

namespace detail {

inline std::size_t graded_rank(const GradedMap& m, int D, DegreeBases& cache) {
  GradedPiece src(m.source(), D, cache), tgt(m.target(), D, cache);
  std::vector<SparseVector> columns;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!src.bases[c]) continue;
    for (const auto& mono : src.bases[c]->monomials) columns.push_back(tgt.coords(m.column(c), mono));
  }
  return rank(columns, tgt.dim, m.ring()->field());
}

}  // namespace detail

/// Exactness at F_i for i >= 1, degree by degree up to max_degree:
/// dim ker(d_i)_D = rank(d_{i+1})_D.
inline bool is_exact_through(const FreeResolution& res, int max_degree) {
  DegreeBases cache(res.ring->num_vars());
  for (std::size_t i = 1; i < res.modules.size(); ++i)
    for (int D = 0; D <= max_degree; ++D) {
      detail::GradedPiece piece(res.modules[i], D, cache);
      const std::size_t kernel_dim = piece.dim - detail::graded_rank(res.maps[i - 1], D, cache);
      const std::size_t image = i < res.maps.size() ? detail::graded_rank(res.maps[i], D, cache) : 0;
      if (kernel_dim != image) return false;
    }
  return true;
}

/// Which unit entry is cancelled next: the one of lowest (or highest) twist,
/// ties broken by scan position.
enum class CancellationOrder { lowest_twist, highest_twist };

class Minimizer {
 public:
  /// Cancels unit entries pairwise (a unit at (r, c) of d_i splits off
  /// S(-a) -> S(-a)) until none remain.
  static FreeResolution run(FreeResolution res, CancellationOrder order = CancellationOrder::lowest_twist) {
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
      while (true) {
        auto unit = find_unit(res.maps[i], order);
        if (!unit) break;
        cancel(res, i, unit->first, unit->second);
      }
    }
    while (!res.maps.empty() && res.maps.back().cols() == 0) {
      res.maps.pop_back();
      res.modules.pop_back();
    }
    res.minimal = true;
    return res;
  }

 private:
  static std::optional<std::pair<std::size_t, std::size_t>> find_unit(const GradedMap& d, CancellationOrder order) {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (found) {
        const int best = d.source().degrees[found->second], here = d.source().degrees[c];
        if (order == CancellationOrder::lowest_twist ? here >= best : here < best) continue;
      }
      for (std::size_t r = 0; r < d.rows(); ++r) {
        const Polynomial& e = d.entry(r, c);
        if (!e.is_zero() && e.is_constant()) {
          found = {r, c};
          break;
        }
      }
    }
    return found;
  }

  // maps[k] is d_{k+1}: F_{k+1} -> F_k.
  static void cancel(FreeResolution& res, std::size_t k, std::size_t r, std::size_t c) {
    GradedMap& d = res.maps[k];
    const PrimeField& f = res.ring->field();
    const Coeff uinv = f.inv(d.cols_[c][r].leading_coefficient());
    for (std::size_t kc = 0; kc < d.cols(); ++kc) {
      if (kc == c || d.cols_[kc][r].is_zero()) continue;
      const Polynomial a = d.cols_[kc][r].scaled(uinv);
      for (std::size_t s = 0; s < d.rows(); ++s) {
        if (s == r || d.cols_[c][s].is_zero()) continue;
        d.cols_[kc][s] -= a * d.cols_[c][s];
      }
    }
    d.cols_.erase(d.cols_.begin() + static_cast<long>(c));
    for (auto& col : d.cols_) col.erase(col.begin() + static_cast<long>(r));
    d.source_.degrees.erase(d.source_.degrees.begin() + static_cast<long>(c));
    d.target_.degrees.erase(d.target_.degrees.begin() + static_cast<long>(r));
    res.modules[k + 1] = d.source_;
    res.modules[k] = d.target_;
    if (k + 1 < res.maps.size()) {
      GradedMap& up = res.maps[k + 1];
      for (auto& col : up.cols_) col.erase(col.begin() + static_cast<long>(c));
      up.target_ = d.source_;
    }
    if (k > 0) {
      GradedMap& down = res.maps[k - 1];
      down.cols_.erase(down.cols_.begin() + static_cast<long>(r));
      down.source_ = d.target_;
    }
  }
};

inline FreeResolution minimize(FreeResolution res, CancellationOrder order = CancellationOrder::lowest_twist) {
  return Minimizer::run(std::move(res), order);
}

/// Graded Betti numbers of S/I: entry (i, j) = beta_{i, i+j}, columns i >= 1.
class BettiDiagram {
 public:
  BettiDiagram() = default;

  /// rows[k][i-1] is the entry in row first_row + k, column i.
  static BettiDiagram from_rows(const std::vector<std::vector<long>>& rows, int first_row = 1) {
    BettiDiagram b;
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (std::size_t i = 0; i < rows[k].size(); ++i)
        b.set(static_cast<int>(i) + 1, first_row + static_cast<int>(k), rows[k][i]);
    return b;
  }

  long at(int col, int row) const {
    auto it = entries_.find({col, row});
    return it == entries_.end() ? 0 : it->second;
  }
  /// beta_{i, degree}
  long beta(int i, int degree) const { return at(i, degree - i); }
  void set(int col, int row, long value) {
    if (value < 0) throw RangeError("Betti numbers are non-negative");
    if (value == 0) entries_.erase({col, row});
    else entries_[{col, row}] = value;
  }

  bool empty() const { return entries_.empty(); }
  int max_col() const {
    int m = 0;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
  }
  int min_row() const {
    int m = entries_.empty() ? 0 : entries_.begin()->first.second;
    for (const auto& [k, v] : entries_) m = std::min(m, k.second);
    return m;
  }
  int max_row() const {
    int m = 0;
    for (const auto& [k, v] : entries_) m = std::max(m, k.second);
    return m;
  }
  long column_total(int col) const {
    long s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == col) s += v;
    return s;
  }

  /// Rows first_row()..max_row(), each with max_col() entries.
  int first_row() const { return std::min(1, min_row()); }
  std::vector<std::vector<long>> rows() const {
    std::vector<std::vector<long>> out;
    for (int j = first_row(); j <= max_row(); ++j) {
      std::vector<long> row;
      for (int i = 1; i <= max_col(); ++i) row.push_back(at(i, j));
      out.push_back(std::move(row));
    }
    return out;
  }
  const std::map<std::pair<int, int>, long>& entries() const { return entries_; }

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

  /// Boxed table: columns across the top, rows down the side.
  std::string to_table() const {
    if (empty()) return "(empty Betti diagram)\n";
    const int cols = max_col();
    std::size_t w = 1;
    for (const auto& [k, v] : entries_) w = std::max(w, std::to_string(v).size());
    w = std::max(w, std::to_string(cols).size());
    const std::size_t lw = std::to_string(max_row()).size();
    auto cell = [&](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
    std::string rule = "+" + std::string(lw + 2, '-') + "+" + std::string((w + 1) * static_cast<std::size_t>(cols) + 1, '-') + "+\n";
    std::string out = rule + "| " + std::string(lw, ' ') + " |";
    for (int i = 1; i <= cols; ++i) out += " " + cell(std::to_string(i), w);
    out += " |\n" + rule;
    for (int j = first_row(); j <= max_row(); ++j) {
      out += "| " + cell(std::to_string(j), lw) + " |";
      for (int i = 1; i <= cols; ++i) out += " " + cell(std::to_string(at(i, j)), w);
      out += " |\n";
    }
    return out + rule;
  }

 private:
  std::map<std::pair<int, int>, long> entries_;
};

inline BettiDiagram betti_diagram(const FreeResolution& res) {
  if (!res.minimal || res.has_unit_entries()) throw Error("betti_diagram requires a minimal resolution");
  BettiDiagram b;
  for (std::size_t i = 1; i < res.modules.size(); ++i) {
    const int col = static_cast<int>(i);
    for (int a : res.modules[i].degrees) b.set(col, a - col, b.at(col, a - col) + 1);
  }
  return b;
}

}  // namespace amdeg
