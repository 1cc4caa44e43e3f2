#pragma once

#include <optional>
#include <string>

#include "hgsearch/poly.hpp"
#include "hgsearch/quadext.hpp"
#include "hgsearch/rational.hpp"

namespace hgsearch {

/// A parameter that is linear in n: slope*n + intercept.
struct LinearSlot {
  Rational slope;
  Rational intercept;

  Rational at(long n) const { return Rational(slope * n + intercept); }
  /// Non-positive integer for every n >= 0.
  bool terminates() const { return is_nonpositive_integer(slope) && is_nonpositive_integer(intercept); }

  friend LinearSlot operator+(const LinearSlot& l, const LinearSlot& r) {
    return {Rational(l.slope + r.slope), Rational(l.intercept + r.intercept)};
  }
  friend LinearSlot operator-(const LinearSlot& l, const LinearSlot& r) {
    return {Rational(l.slope - r.slope), Rational(l.intercept - r.intercept)};
  }
  friend bool operator==(const LinearSlot&, const LinearSlot&) = default;
};

/// The terminating series F(upper1(n), upper2(n); lower(n); x).
///
/// Search form is F(-a n, b n + b0; c n + c0; x) with a >= 1. General slots
/// are allowed for transformation images as long as one upper slot
/// terminates.
struct FamilySpec {
  LinearSlot upper1;
  LinearSlot upper2;
  LinearSlot lower;

  static FamilySpec search_form(long a, long b, const Rational& b0, long c, const Rational& c0);

  bool has_termination_witness() const { return upper1.terminates() || upper2.terminates(); }
  /// The a of F(-a n, ...) when upper1 has that exact shape.
  std::optional<long> search_a() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(const FamilySpec& f);

/// Rising factorial (z)_k = z (z+1) ... (z+k-1); (z)_0 = 1.
Rational pochhammer(const Rational& z, long k);

/// Number of the last term: the smallest -slot(n) over terminating upper
/// slots. Throws std::invalid_argument without a termination witness.
long termination_index(const FamilySpec& family, long n);

/// False when (lower(n))_k vanishes for some k <= termination_index.
bool definedness(const FamilySpec& family, long n);

/// Value of a terminating series; empty when undefined.
template <class T>
using SeriesValue = std::optional<T>;

/// Sum over k of (A)_k (B)_k / (k! (C)_k) x^k with A, B, C the slot values
/// at n, computed by the term recurrence.
template <class T>
SeriesValue<T> eval_terminating(const FamilySpec& family, long n, const T& x) {
  if (!definedness(family, n)) return std::nullopt;
  const long last = termination_index(family, n);
  const Rational A = family.upper1.at(n), B = family.upper2.at(n), C = family.lower.at(n);
  T term(1);
  T sum(1);
  for (long k = 0; k < last; ++k) {
    Rational ratio = (A + k) * (B + k) / ((C + k) * (k + 1));
    if (sgn(ratio) == 0) break;
    term = term * T(ratio);
    term = term * x;
    sum = sum + term;
  }
  return sum;
}

/// The series at n as a polynomial in x, of degree <= termination index.
std::optional<Poly> series_poly_in_x(const FamilySpec& family, long n);

}  // namespace hgsearch
