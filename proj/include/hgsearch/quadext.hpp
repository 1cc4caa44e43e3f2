#pragma once

#include <optional>
#include <string>

#include "hgsearch/rational.hpp"

namespace hgsearch {

/// An element a + b*sqrt(radicand) of a quadratic field Q(sqrt(radicand)).
///
/// The radicand is a squarefree integer other than 0 and 1. A value with
/// b == 0 is an embedded rational; such values may carry radicand 0 and adopt
/// the radicand of whatever they are combined with, so generic code can write
/// `T(0)` and `T(1)`. Mixing two different nonzero radicands throws
/// FieldMismatchError.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational value) : a_(std::move(value)) {}  // NOLINT
  QuadExt(Rational a, Rational b, long radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long radicand() const { return radicand_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, radicand_); }
  /// a^2 - b^2 * radicand.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt operator-() const { return QuadExt(-a_, -b_, radicand_); }

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt& l, const QuadExt& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  long join_radicand(const QuadExt& o) const;

  Rational a_;
  Rational b_;
  long radicand_ = 0;
};

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

/// Human-readable form, e.g. "1/2+1/2*sqrt(-3)".
std::string to_string(const QuadExt& q);

/// Parses the command-line form "quad:p/q+s/t*sqrt(r)" (sign may be '-').
QuadExt parse_quad(std::string_view text);

/// sqrt(q) as an element of Q or of Q(sqrt(r)) for the squarefree part r.
QuadExt sqrt_rational(const Rational& q);

/// Square root inside the field of `value`, when one exists there.
std::optional<QuadExt> try_sqrt(const QuadExt& value);

}  // namespace hgsearch
