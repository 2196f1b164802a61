#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("polynomials belong to different rings") {}
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

class RangeError : public Error {
 public:
  using Error::Error;
};

using Coeff = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in GF(p) for an odd prime p < 2^31. Elements are kept as
/// least non-negative residues.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
      throw RangeError("modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Coeff inv(Coeff a) const {
    if (a == 0) throw Error("division by zero in GF(p)");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace amdeg
