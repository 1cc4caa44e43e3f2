#include "hgsearch/rational.hpp"

#include <cctype>

#include "hgsearch/errors.hpp"

namespace hgsearch {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num, true)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num));
    return q;
  }
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_text(den, false)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  q = Rational(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  Rational result(1);
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                  : static_cast<unsigned long>(exponent);
  mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), e);
  result.canonicalize();
  return result;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
      !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

}  // namespace hgsearch
