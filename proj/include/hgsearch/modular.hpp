#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hgsearch/poly.hpp"

namespace hgsearch::modp {

/// Arithmetic in Z/pZ for a prime p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_long(long v) const;
  /// Image of a rational whose denominator is a unit mod p; nullopt otherwise.
  std::optional<std::uint64_t> from_rational(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Coefficient vector, lowest power first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f);
std::uint64_t eval(const PrimeField& F, const ModPoly& f, std::uint64_t x);
ModPoly monic(const PrimeField& F, ModPoly f);
ModPoly rem(const PrimeField& F, ModPoly a, const ModPoly& b);
ModPoly gcd(const PrimeField& F, ModPoly a, ModPoly b);
std::optional<ModPoly> reduce(const PrimeField& F, const Poly& f);

/// Determinant of an n x n matrix (row-major) by Gaussian elimination; the
/// input is overwritten.
std::uint64_t determinant(const PrimeField& F, std::vector<std::uint64_t>& m, std::size_t n);

/// Newton interpolation through (points[i], values[i]).
ModPoly interpolate(const PrimeField& F, std::span<const long> points,
                    std::span<const std::uint64_t> values);

/// Deterministic list of large primes just below 2^62, descending.
const std::vector<std::uint64_t>& large_primes(std::size_t count);

/// Rational number a/b with |a|, |b| <= sqrt(m/2) congruent to u mod m.
std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m);

}  // namespace hgsearch::modp
