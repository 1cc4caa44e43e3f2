#pragma once

#include <string>
#include <variant>

#include "hgsearch/poly.hpp"
#include "hgsearch/quadext.hpp"

namespace hgsearch {

struct RatX {
  Rational value;
  friend bool operator==(const RatX&, const RatX&) = default;
};

/// An irrational quadratic x together with its monic minimal polynomial.
struct QuadX {
  QuadExt value;
  Poly minimal_poly;
  friend bool operator==(const QuadX& l, const QuadX& r) { return l.value == r.value; }
};

/// The determinant gcd vanished identically: every x qualifies.
struct AllX {
  friend bool operator==(const AllX&, const AllX&) = default;
};

/// A factor of degree >= 3 whose roots are not extracted.
struct UnresolvedFactor {
  Poly poly;
  friend bool operator==(const UnresolvedFactor&, const UnresolvedFactor&) = default;
};

using CandidateX = std::variant<RatX, QuadX, AllX, UnresolvedFactor>;

/// x^2 - 2a x + (a^2 - b^2 r) for a + b sqrt(r).
Poly minimal_polynomial(const QuadExt& value);

/// Wraps a field element as Rat or Quad depending on its irrational part.
CandidateX make_candidate(const QuadExt& value);
inline CandidateX make_candidate(const Rational& value) { return RatX{value}; }

/// Field element of a Rat or Quad candidate; throws std::invalid_argument otherwise.
QuadExt candidate_value(const CandidateX& x);

bool is_point(const CandidateX& x);

std::string to_string(const CandidateX& x);

}  // namespace hgsearch
