#include "hgsearch/quadext.hpp"

#include <stdexcept>

#include "hgsearch/errors.hpp"
#include "hgsearch/factor.hpp"

namespace hgsearch {

QuadExt::QuadExt(Rational a, Rational b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  if (radicand_ == 1) {
    a_ += b_;
    b_ = 0;
    radicand_ = 0;
  } else if (radicand_ == 0 && sgn(b_) != 0) {
    throw std::invalid_argument("QuadExt: irrational part without radicand");
  }
}

long QuadExt::join_radicand(const QuadExt& o) const {
  if (radicand_ == 0) return o.radicand_;
  if (o.radicand_ == 0 || o.radicand_ == radicand_) return radicand_;
  if (o.is_rational()) return radicand_;
  if (is_rational()) return o.radicand_;
  throw FieldMismatchError("QuadExt: sqrt(" + std::to_string(radicand_) +
                           ") and sqrt(" + std::to_string(o.radicand_) +
                           ") do not share a field");
}

Rational QuadExt::norm() const {
  return Rational(a_ * a_ - b_ * b_ * radicand_);
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("QuadExt: inverse of zero");
  return QuadExt(Rational(a_ / n), Rational(-b_ / n), radicand_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  radicand_ = join_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  radicand_ = join_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  radicand_ = join_radicand(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + b_ * o.b_ * radicand_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("QuadExt: division by zero");
    radicand_ = join_radicand(o);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const QuadExt& q) {
  if (q.is_rational()) return to_string(q.a());
  std::string out;
  if (sgn(q.a()) != 0) out = to_string(q.a());
  if (sgn(q.b()) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  Rational mag = abs(q.b());
  if (mag != 1) out += to_string(mag) + "*";
  out += "sqrt(" + std::to_string(q.radicand()) + ")";
  return out;
}

QuadExt parse_quad(std::string_view text) {
  constexpr std::string_view prefix = "quad:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw ParseError("quadratic value must start with 'quad:'");
  }
  std::string_view body = text.substr(prefix.size());
  auto star = body.find("*sqrt(");
  if (star == std::string_view::npos || body.back() != ')') {
    throw ParseError("expected quad:p/q+s/t*sqrt(r), got '" +
                     std::string(text) + "'");
  }
  // The sign separating the two parts is the last '+' or '-' before "*sqrt("
  // that is not a leading sign.
  std::size_t sep = std::string_view::npos;
  for (std::size_t i = star; i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      sep = i;
      break;
    }
  }
  if (sep == std::string_view::npos) {
    throw ParseError("missing sign between parts in '" + std::string(text) + "'");
  }
  Rational a = parse_rational(body.substr(0, sep));
  std::string_view coef = body.substr(sep + 1, star - sep - 1);
  Rational b = parse_rational(coef);
  if (body[sep] == '-') b = -b;
  std::string_view rad = body.substr(star + 6, body.size() - star - 7);
  Rational r = parse_rational(rad);
  if (!is_integer(r)) throw ParseError("radicand must be an integer");
  QuadExt s = sqrt_rational(r);
  return QuadExt(a) + QuadExt(b) * s;
}

QuadExt sqrt_rational(const Rational& q) {
  Rational root;
  if (rational_sqrt(q, root)) return QuadExt(root);
  // sqrt(n/d) = sqrt(n*d)/d = s*sqrt(f)/d
  Integer nd = q.get_num() * q.get_den();
  Integer s, f;
  if (!squarefree_decompose(nd, s, f)) {
    throw Error("sqrt_rational: cannot factor " + nd.get_str());
  }
  if (!f.fits_slong_p()) throw Error("sqrt_rational: radicand too large");
  Rational coef(s, q.get_den());
  coef.canonicalize();
  return QuadExt(Rational(0), coef, f.get_si());
}

std::optional<QuadExt> try_sqrt(const QuadExt& value) {
  if (value.is_rational()) {
    Rational root;
    if (rational_sqrt(value.a(), root)) {
      return QuadExt(root);
    }
    if (value.radicand() == 0) return sqrt_rational(value.a());
    // sqrt(a) lies in Q(sqrt(r)) only if a/r is a rational square.
    Rational ratio = value.a() / value.radicand();
    if (rational_sqrt(ratio, root)) {
      return QuadExt(Rational(0), root, value.radicand());
    }
    return std::nullopt;
  }
  // (p + q sqrt r)^2 = A + B sqrt r  =>  p^2 = (A +- sqrt(norm)) / 2.
  Rational disc;
  if (!rational_sqrt(value.norm(), disc)) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational p2 = (value.a() + sign * disc) / 2;
    Rational p;
    if (sgn(p2) == 0 || !rational_sqrt(p2, p)) continue;
    Rational q = value.b() / (2 * p);
    QuadExt cand(p, q, value.radicand());
    if (cand * cand == value) return cand;
  }
  return std::nullopt;
}

}  // namespace hgsearch
