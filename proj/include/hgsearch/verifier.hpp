#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgsearch/guesser.hpp"
#include "hgsearch/serialize.hpp"

namespace hgsearch {

struct Theorem1Params {
  long r = 1;
  Rational b;
  long n = 0;
};

/// F(-2n, b; -2n+2r-b; x), the perturbed Kummer family.
FamilySpec theorem1_family(long r, const Rational& b);

/// Closed form of F(-2n, b; -2n+2r-b; -1):
///   (1/2)_n (b+1-r)_n / ((b/2+1-r)_n (b/2+1/2-r)_n)
///     * sum_{i<r} 4^i i! C(r+i-1, 2i) / (b-r+1)_i * C(n, i).
/// Throws std::invalid_argument for r < 1 and PoleError when a denominator
/// Pochhammer vanishes.
Rational theorem1_rhs(const Theorem1Params& p);

struct Theorem1Check {
  Theorem1Params params;
  std::string status;  // "pass", "counterexample", "skipped"
  std::string detail;
  std::optional<Rational> lhs, rhs;
};

struct Theorem1Report {
  std::size_t checks = 0;
  std::vector<Theorem1Check> counterexamples;
  std::vector<Theorem1Check> skipped;
  std::vector<Theorem1Check> all;
};

Theorem1Report verify_theorem1(long r_max, const std::vector<Rational>& b_samples, long n_max);

/// F(-2n, -1/2+i; -3n-1/2+j; x).
FamilySpec conjecture1_family(long i, long j);

struct Conjecture1Entry {
  long i = 0, j = 0;
  std::string status;  // "certificate", "NotHypergeometric", "skipped"
  std::optional<RatioCertificate<Rational>> certificate;
  bool reconfirmed = false;
};

struct Conjecture1Report {
  std::vector<Conjecture1Entry> entries;
  std::size_t found() const;
};

Conjecture1Report verify_conjecture1(long i_min, long i_max, long j_min, long j_max, std::size_t d);

/// Hypergeometric-ness (no closed form) of the two variants without a
/// stated right-hand side: F(-2n, b; -2n+2r+1-b; -1) and F(-2n, b+r; -2n-b; -1).
struct VariantEntry {
  std::string name;
  long r = 0;
  Rational b;
  GuessStatus status = GuessStatus::NotHypergeometric;
  std::optional<RatioCertificate<Rational>> certificate;
};

std::vector<VariantEntry> verify_theorem1_variants(long r_max, const std::vector<Rational>& b_samples,
                                                   std::size_t d);

/// (c-b)_n / (c)_n; PoleError when (c)_n = 0.
Rational chu_vandermonde_rhs(long n, const Rational& b, const Rational& c);

Json encode(const Theorem1Check& c);
Json encode(const Conjecture1Entry& e);
Json encode(const VariantEntry& e);

}  // namespace hgsearch
