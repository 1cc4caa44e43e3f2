#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgsearch/quadext.hpp"
#include "hgsearch/rational.hpp"

namespace hgsearch {

/// Dense univariate polynomial over an exact field T, lowest power first.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class BasicPoly {
 public:
  BasicPoly() = default;
  explicit BasicPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  BasicPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static BasicPoly constant(T value) { return BasicPoly(std::vector<T>{std::move(value)}); }
  static BasicPoly monomial(T coef, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = std::move(coef);
    return BasicPoly(std::move(c));
  }
  /// x - root
  static BasicPoly linear_root(const T& root) { return BasicPoly({T(-root), T(1)}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  /// Horner evaluation at a point of a (possibly larger) field U.
  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * x;
      acc = acc + U(c_[i]);
    }
    return acc;
  }

  BasicPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(T(c_[i] * T(static_cast<long>(i))));
    return BasicPoly(std::move(d));
  }

  /// Scaled to leading coefficient 1; zero stays zero.
  BasicPoly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / leading();
    std::vector<T> c(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * inv;
    return BasicPoly(std::move(c));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  BasicPoly operator-() const {
    std::vector<T> c(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return BasicPoly(std::move(c));
  }
  BasicPoly& operator*=(const T& s) {
    for (auto& v : c_) v = v * s;
    trim();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly l, const BasicPoly& r) { return l += r; }
  friend BasicPoly operator-(BasicPoly l, const BasicPoly& r) { return l -= r; }
  friend BasicPoly operator*(BasicPoly l, const T& s) { return l *= s; }
  friend BasicPoly operator*(const BasicPoly& l, const BasicPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<T> c(l.c_.size() + r.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
      if (hgsearch::is_zero(l.c_[i])) continue;
      for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] = c[i + j] + l.c_[i] * r.c_[j];
    }
    return BasicPoly(std::move(c));
  }
  friend bool operator==(const BasicPoly& l, const BasicPoly& r) { return l.c_ == r.c_; }

 private:
  void trim() {
    while (!c_.empty() && hgsearch::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using Poly = BasicPoly<Rational>;
using QPoly = BasicPoly<QuadExt>;

/// Quotient and remainder of num by den (den nonzero).
template <class T>
std::pair<BasicPoly<T>, BasicPoly<T>> divmod(const BasicPoly<T>& num, const BasicPoly<T>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = num.coeffs();
  long dn = den.degree();
  if (num.degree() < dn) return {BasicPoly<T>(), num};
  std::vector<T> quo(static_cast<std::size_t>(num.degree() - dn + 1), T(0));
  T inv = T(1) / den.leading();
  for (long k = num.degree() - dn; k >= 0; --k) {
    T f = rem[static_cast<std::size_t>(k + dn)] * inv;
    if (hgsearch::is_zero(f)) continue;
    quo[static_cast<std::size_t>(k)] = f;
    for (long j = 0; j <= dn; ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = rem[idx] - f * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {BasicPoly<T>(std::move(quo)), BasicPoly<T>(std::move(rem))};
}

/// Monic greatest common divisor by the Euclidean algorithm.
/// gcd(f, 0) = monic(f); gcd(0, 0) = 0.
template <class T>
BasicPoly<T> gcd(BasicPoly<T> f, BasicPoly<T> g) {
  while (!g.is_zero()) {
    BasicPoly<T> r = divmod(f, g).second;
    f = std::move(g);
    g = r.monic();
  }
  return f.monic();
}

/// Exact quotient; throws std::domain_error when den does not divide num.
template <class T>
BasicPoly<T> exact_divide(const BasicPoly<T>& num, const BasicPoly<T>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

/// Squarefree part f / gcd(f, f'), monic.
template <class T>
BasicPoly<T> squarefree_part(const BasicPoly<T>& f) {
  if (f.degree() <= 0) return f.monic();
  return exact_divide(f, gcd(f, f.derivative())).monic();
}

// Rational-coefficient helpers.

/// Greatest common divisor computed modulo several primes, verified by exact
/// trial division. Agrees with gcd(); faster on large dense inputs.
Poly fast_gcd(const Poly& f, const Poly& g);

/// Primitive integer polynomial with positive leading coefficient, same roots.
std::vector<Integer> primitive_integer_form(const Poly& f);

Poly from_integers(const std::vector<Integer>& c);

/// Pretty form in variable `var`, e.g. "n^2+3*n-1/2".
std::string to_string(const Poly& f, const std::string& var = "x");
std::string to_string(const QPoly& f, const std::string& var = "x");

QPoly widen(const Poly& f);

}  // namespace hgsearch
