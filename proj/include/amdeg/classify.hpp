#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert.hpp"
#include "resolution.hpp"
#include "series.hpp"

namespace amdeg {

enum class DegreeClass { minimal, almost_minimal, other };

inline std::string to_string(DegreeClass c) {
  switch (c) {
    case DegreeClass::minimal: return "minimal";
    case DegreeClass::almost_minimal: return "almost_minimal";
    default: return "other";
  }
}

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VarietyReport {
  std::size_t num_vars = 0;
  NumericInvariants invariants;
  BettiDiagram betti;
  HilbertSeries series{IntPoly{1}, 0};
  DegreeClass degree_class = DegreeClass::other;
  std::optional<std::string> theorem_case;
  std::vector<CheckResult> checks;
  bool degenerate = false;  // I contains a linear form
  long quadrics = 0;        // minimal quadric generators
  long cubics = 0;          // minimal cubic generators
  bool acm = false;
  bool gorenstein = false;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Per-column bounds on u_i = beta_{i,i+1} and v_i = beta_{i,i+2}, 1 <= i <= c+q.
struct BettiBounds {
  struct Column {
    std::int64_t u_lower, u_upper, v_lower, v_upper;
  };
  int c = 0, q = 0;
  std::vector<Column> columns;  // columns[i-1]

  const Column& at(int i) const { return columns.at(static_cast<std::size_t>(i - 1)); }
  /// Required value of v_i - u_{i+1} for 1 <= i < c.
  std::int64_t difference(int i) const {
    return binomial(c + q + 1, i + 1) - (c + 1) * binomial(c, i + 1) + binomial(c, i + 2);
  }
};

/// Betti bounds for a non-ACM variety of almost minimal degree lying on a
/// minimal-degree variety of one dimension more.
inline BettiBounds lemma32_bounds(int c, int q) {
  if (c < 2 || q < 1) throw RangeError("bounds need c >= 2 and q >= 1");
  BettiBounds b;
  b.c = c;
  b.q = q;
  for (int i = 1; i <= c + q; ++i) {
    BettiBounds::Column col{};
    if (i == 1) {
      col.u_lower = col.u_upper = binomial(c + 1, 2) - q - 1;
    } else if (i < c - q) {
      col.u_lower = i * binomial(c, i + 1);
      col.u_upper = (c + 1) * binomial(c, i) - binomial(c, i + 1);
    } else if (i < c) {
      col.u_lower = col.u_upper = i * binomial(c, i + 1);
    } else {
      col.u_lower = col.u_upper = 0;
    }
    if (i < c - q - 1) {
      col.v_lower = std::max<std::int64_t>(0, binomial(c + q - 1, i + 1) - (i + 2) * binomial(c, i + 1));
      col.v_upper = binomial(c + q + 1, i + 1);
    } else if (i < c) {
      col.v_lower = col.v_upper = binomial(c + q + 1, i + 1) - (i + 2) * binomial(c, i + 1);
    } else {
      col.v_lower = col.v_upper = binomial(c + q + 1, i + 1);
    }
    b.columns.push_back(col);
  }
  return b;
}

namespace detail {

// Generic projection of the Veronese surface: codim 2, no quadrics, seven cubics.
inline bool is_veronese_projection_shape(const VarietyReport& r) {
  return r.invariants.codim == 2 && r.quadrics == 0 && r.cubics == 7;
}

inline std::string range_text(std::int64_t lo, std::int64_t hi) {
  return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

inline std::optional<int> dimension_cap(const std::string& label) {
  if (label == "2.1b" || label == "2.2b" || label == "2.4b-i" || label == "2.4b-ii") return 4;
  if (label == "2.2c" || label == "2.4c") return 5;
  if (label == "2.4d") return 6;
  return std::nullopt;
}

}  // namespace detail

/// Case label for an almost-minimal-degree report in codimension 2, 3 or 4.
inline std::optional<std::string> theorem_case_of(const VarietyReport& r) {
  if (r.degree_class != DegreeClass::almost_minimal) return std::nullopt;
  const int c = r.invariants.codim, q = r.invariants.codepth;
  switch (c) {
    case 2:
      if (q == 0) return "2.1a";
      if (detail::is_veronese_projection_shape(r)) return "2.1c";
      if (q == 1) return "2.1b";
      return "out_of_table";
    case 3:
      if (q == 0) return "2.2a";
      if (q == 1) return "2.2b";
      if (q == 2) return "2.2c";
      return "out_of_table";
    case 4:
      if (q == 0) return "2.4a";
      if (q == 1) {
        if (r.cubics == 1) return "2.4b-i";
        if (r.cubics == 0) return "2.4b-ii";
        return "out_of_table";
      }
      if (q == 2) return "2.4c";
      if (q == 3) return "2.4d";
      return "out_of_table";
    default:
      return std::nullopt;
  }
}

/// Structural checks on an almost-minimal-degree report. Failures are recorded.
inline std::vector<CheckResult> check_report(const VarietyReport& r) {
  std::vector<CheckResult> out;
  if (r.degree_class != DegreeClass::almost_minimal) return out;
  const NumericInvariants& inv = r.invariants;
  const int c = inv.codim, d = inv.dim, q = inv.codepth;

  {
    CheckResult ck{"hilbert_series", true, ""};
    try {
      HilbertSeries predicted = hilbert_amd_predicted(c, d, q);
      ck.passed = predicted == r.series;
      ck.detail = "computed " + r.series.reduced().to_string() + ", predicted " + predicted.reduced().to_string();
    } catch (const RangeError& e) {
      ck.passed = false;
      ck.detail = e.what();
    }
    out.push_back(ck);
  }
  {
    const std::int64_t predicted = binomial(c + 1, 2) - q - 1;
    out.push_back({"quadric_count", r.quadrics == predicted,
                   "computed " + std::to_string(r.quadrics) + ", predicted " + std::to_string(predicted)});
  }
  {
    CheckResult ck{"betti_bounds", true, ""};
    if (q == 0) {
      ck.detail = "not applicable: arithmetically Cohen-Macaulay";
    } else if (detail::is_veronese_projection_shape(r)) {
      ck.detail = "not applicable: projection of the Veronese surface";
    } else if (c < 2) {
      ck.detail = "not applicable: codimension below 2";
    } else {
      const BettiBounds b = lemma32_bounds(c, q);
      std::vector<std::string> bad;
      for (const auto& [key, value] : r.betti.entries()) {
        const int i = key.first, j = key.second;
        if (j != 1 && j != 2) bad.push_back("column " + std::to_string(i) + " has entries in row " + std::to_string(j));
        else if (i > c + q) bad.push_back("column " + std::to_string(i) + " beyond c+q");
      }
      for (int i = 1; i <= c + q; ++i) {
        const auto& col = b.at(i);
        const long u = r.betti.at(i, 1), v = r.betti.at(i, 2);
        if (u < col.u_lower || u > col.u_upper)
          bad.push_back("column " + std::to_string(i) + ": u=" + std::to_string(u) + " not in " +
                        detail::range_text(col.u_lower, col.u_upper));
        if (v < col.v_lower || v > col.v_upper)
          bad.push_back("column " + std::to_string(i) + ": v=" + std::to_string(v) + " not in " +
                        detail::range_text(col.v_lower, col.v_upper));
      }
      for (int i = 1; i < c; ++i) {
        const long diff = r.betti.at(i, 2) - r.betti.at(i + 1, 1);
        if (diff != b.difference(i))
          bad.push_back("column " + std::to_string(i) + ": v-u'=" + std::to_string(diff) + ", expected " +
                        std::to_string(b.difference(i)));
      }
      ck.passed = bad.empty();
      for (const auto& s : bad) ck.detail += (ck.detail.empty() ? "" : "; ") + s;
      if (ck.passed) ck.detail = "columns 1.." + std::to_string(c + q) + " within bounds";
    }
    out.push_back(ck);
  }
  {
    CheckResult ck{"cubic_count", true, "cubics " + std::to_string(r.cubics)};
    if (q == 1 && c >= 4) ck.passed = r.cubics <= 1;
    else ck.detail += " (constraint applies for q = 1, c >= 4)";
    out.push_back(ck);
  }
  out.push_back({"regularity", inv.regularity <= 2, "reg A = " + std::to_string(inv.regularity)});
  {
    CheckResult ck{"large_dimension", true, ""};
    if (d > c + 2 && c >= 3) {
      ck.passed = c == 3 && r.acm && r.gorenstein;
      ck.detail = "dim " + std::to_string(d) + " > c + 2 requires c = 3 and arithmetically Gorenstein";
    } else {
      ck.detail = "dim " + std::to_string(d) + " <= c + 2 or c < 3";
    }
    out.push_back(ck);
  }
  if (r.theorem_case) {
    if (auto cap = detail::dimension_cap(*r.theorem_case))
      out.push_back({"dimension_cap", d <= *cap,
                     "case " + *r.theorem_case + ": dim " + std::to_string(d) + " <= " + std::to_string(*cap)});
    if (*r.theorem_case == "out_of_table")
      out.push_back({"case_dispatch", false, "no case matches c = " + std::to_string(c) + ", q = " + std::to_string(q)});
  }
  return out;
}

struct AnalyzeOptions {
  int degree_cap = 8;
  std::uint64_t seed = 0;
};

/// Resolution, series, invariants, case label and checks for S/I.
inline VarietyReport analyze(const Ideal& ideal, const AnalyzeOptions& opts = {}) {
  if (ideal.is_zero()) throw RangeError("cannot analyze the zero ideal");
  if (ideal.is_unit()) throw RangeError("cannot analyze the unit ideal");
  const Ideal mg = minimalized(ideal);
  VarietyReport r;
  r.num_vars = mg.num_vars();
  r.series = hilbert_series(mg);
  ResolutionOptions ro;
  ro.degree_cap = opts.degree_cap;
  ro.seed = opts.seed;
  r.betti = betti_diagram(minimize(free_resolution(mg, ro)));
  r.invariants = numeric_invariants(r.series, r.betti, r.num_vars);
  r.degenerate = r.betti.at(1, 0) > 0;
  r.quadrics = r.betti.at(1, 1);
  r.cubics = r.betti.at(1, 2);
  r.acm = r.invariants.codepth == 0;
  r.gorenstein = r.acm && r.betti.column_total(r.invariants.projective_dim) == 1;
  const auto& inv = r.invariants;
  if (inv.degree == inv.codim + 1) r.degree_class = DegreeClass::minimal;
  else if (inv.degree == inv.codim + 2) r.degree_class = DegreeClass::almost_minimal;
  r.theorem_case = theorem_case_of(r);
  r.checks = check_report(r);
  return r;
}

}  // namespace amdeg
