#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "varieties.hpp"

namespace amdeg {

struct BuildContext {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
};

/// An ideal together with the choices made while building it.
struct BuiltIdeal {
  Ideal ideal;
  std::vector<std::string> notes;
};

/// Reads the ideal file format: first line "ring n", then one polynomial per
/// line. Blank lines and lines starting with '#' are skipped.
inline Ideal read_ideal(std::istream& in, std::uint32_t prime) {
  std::string line;
  std::optional<Ring> ring;
  std::vector<Polynomial> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!ring) {
      if (s.substr(0, 4) != "ring") throw ParseError("line " + std::to_string(lineno) + ": expected 'ring n'");
      long n = detail::parse_integer(std::string(detail::trim(s.substr(4))), "ring declaration");
      if (n < 1 || n > static_cast<long>(kMaxVars))
        throw ParseError("ring size must be in 1.." + std::to_string(kMaxVars));
      ring = make_ring(static_cast<std::size_t>(n), prime);
      continue;
    }
    try {
      gens.push_back(parse_polynomial(s, *ring));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!ring) throw ParseError("missing 'ring n' line");
  try {
    return Ideal(*ring, std::move(gens));
  } catch (const RangeError& e) {
    throw ParseError(e.what());
  }
}

inline Ideal read_ideal_file(const std::string& path, std::uint32_t prime) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_ideal(in, prime);
}

namespace detail {

// Splits "a, b(c, d), e" at top-level occurrences of sep.
inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.emplace_back(trim(cur));
  return out;
}

// "name(args)" -> args, if s has that shape.
inline std::optional<std::string_view> call_args(std::string_view s, std::string_view name) {
  if (s.size() < name.size() + 2 || s.substr(0, name.size()) != name) return std::nullopt;
  std::string_view rest = trim(s.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return std::nullopt;
  return rest.substr(1, rest.size() - 2);
}

inline ProjectivePoint random_point(std::size_t n, std::uint32_t prime, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  std::uniform_int_distribution<Coeff> coef(0, prime - 1);
  while (true) {
    std::vector<Coeff> c(n);
    bool nonzero = false;
    for (auto& v : c) nonzero |= (v = coef(rng)) != 0;
    if (nonzero) return ProjectivePoint(std::move(c), prime);
  }
}

}  // namespace detail

/// Builds an ideal from an expression:
///   S(a1,...,ak) | veronese | segre22 | segre111 | pfaffian5
///   project(EXPR, (c0:...:cn)) | project(EXPR, random) | project(EXPR, random:SEED)
///   section(EXPR, COUNT) | section(EXPR, COUNT, SEED)
///   ideal(N; f1; f2; ...)
///   a path to an ideal file
inline BuiltIdeal build_ideal(std::string_view text, const BuildContext& ctx) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty expression");
  if (s == "veronese") return {veronese_ideal(ctx.prime), {}};
  if (s == "segre22") return {segre_p2xp2(ctx.prime), {}};
  if (s == "segre111") return {segre_p1p1p1(ctx.prime), {}};
  if (s == "pfaffian5") return {pfaffian_5x5_generic(ctx.prime), {}};
  if (s.substr(0, 2) == "S(") return {scroll_ideal(ScrollType::parse(s), ctx.prime), {}};
  if (auto args = detail::call_args(s, "project")) {
    auto parts = detail::split_top_level(*args, ',');
    if (parts.size() != 2) throw ParseError("project needs (expression, point)");
    BuiltIdeal inner = build_ideal(parts[0], ctx);
    const std::size_t n = inner.ideal.num_vars();
    std::optional<ProjectivePoint> p;
    if (parts[1] == "random" || parts[1].substr(0, 7) == "random:") {
      std::uint64_t seed = ctx.seed;
      if (parts[1] != "random") seed = static_cast<std::uint64_t>(detail::parse_integer(parts[1].substr(7), "random seed"));
      p = detail::random_point(n, ctx.prime, seed);
      inner.notes.push_back("random center (seed " + std::to_string(seed) + ") " + p->to_string());
    } else {
      p = ProjectivePoint::parse(parts[1], ctx.prime);
    }
    if (p->size() != n)
      throw ParseError("point has " + std::to_string(p->size()) + " coordinates, ambient ring has " + std::to_string(n));
    inner.ideal = project_from_point(inner.ideal, *p);
    return inner;
  }
  if (auto args = detail::call_args(s, "section")) {
    auto parts = detail::split_top_level(*args, ',');
    if (parts.size() != 2 && parts.size() != 3) throw ParseError("section needs (expression, count[, seed])");
    BuiltIdeal inner = build_ideal(parts[0], ctx);
    const long count = detail::parse_integer(parts[1], "section count");
    std::uint64_t seed = ctx.seed;
    if (parts.size() == 3) seed = static_cast<std::uint64_t>(detail::parse_integer(parts[2], "section seed"));
    try {
      inner.ideal = generic_linear_section(inner.ideal, static_cast<int>(count), seed);
    } catch (const RangeError& e) {
      throw ParseError(e.what());
    }
    if (count > 0) inner.notes.push_back("linear section by " + std::to_string(count) + (count == 1 ? " form" : " forms") + " (seed " + std::to_string(seed) + ")");
    return inner;
  }
  if (auto args = detail::call_args(s, "ideal")) {
    auto parts = detail::split_top_level(*args, ';');
    long n = detail::parse_integer(parts[0], "ideal ring size");
    if (n < 1 || n > static_cast<long>(kMaxVars)) throw ParseError("ring size must be in 1.." + std::to_string(kMaxVars));
    Ring ring = make_ring(static_cast<std::size_t>(n), ctx.prime);
    std::vector<Polynomial> gens;
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (!parts[i].empty()) gens.push_back(parse_polynomial(parts[i], ring));
    try {
      return {Ideal(ring, std::move(gens)), {}};
    } catch (const RangeError& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream probe{std::string(s)};
  if (probe) return {read_ideal(probe, ctx.prime), {}};
  throw ParseError("unrecognized expression or unreadable file: '" + std::string(s) + "'");
}

}  // namespace amdeg
