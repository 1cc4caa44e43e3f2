#include "hgsearch/hyperseries.hpp"

#include <stdexcept>

namespace hgsearch {

FamilySpec FamilySpec::search_form(long a, long b, const Rational& b0, long c, const Rational& c0) {
  if (a < 1) throw std::invalid_argument("search form needs a >= 1");
  return FamilySpec{LinearSlot{Rational(-a), Rational(0)}, LinearSlot{Rational(b), b0},
                    LinearSlot{Rational(c), c0}};
}

std::optional<long> FamilySpec::search_a() const {
  if (sgn(upper1.intercept) != 0 || !is_integer(upper1.slope) || sgn(upper1.slope) >= 0) {
    return std::nullopt;
  }
  Integer a = -upper1.slope.get_num();
  if (!a.fits_slong_p()) return std::nullopt;
  return a.get_si();
}

namespace {

std::string slot_string(const LinearSlot& s) {
  Poly p({s.intercept, s.slope});
  return to_string(p, "n");
}

}  // namespace

std::string to_string(const FamilySpec& f) {
  return "F(" + slot_string(f.upper1) + ", " + slot_string(f.upper2) + "; " +
         slot_string(f.lower) + ")";
}

Rational pochhammer(const Rational& z, long k) {
  Rational out(1);
  for (long i = 0; i < k; ++i) {
    out *= z + i;
    if (sgn(out) == 0) break;
  }
  return out;
}

long termination_index(const FamilySpec& family, long n) {
  std::optional<long> best;
  for (const LinearSlot* s : {&family.upper1, &family.upper2}) {
    if (!s->terminates()) continue;
    Rational v = s->at(n);
    long idx = -v.get_num().get_si();
    if (!best || idx < *best) best = idx;
  }
  if (!best) throw std::invalid_argument("family has no terminating upper slot: " + to_string(family));
  return *best;
}

bool definedness(const FamilySpec& family, long n) {
  const long last = termination_index(family, n);
  Rational c = family.lower.at(n);
  if (!is_nonpositive_integer(c)) return true;
  return -c.get_num().get_si() >= last;
}

std::optional<Poly> series_poly_in_x(const FamilySpec& family, long n) {
  if (!definedness(family, n)) return std::nullopt;
  const long last = termination_index(family, n);
  const Rational A = family.upper1.at(n), B = family.upper2.at(n), C = family.lower.at(n);
  std::vector<Rational> coeffs{Rational(1)};
  Rational term(1);
  for (long k = 0; k < last; ++k) {
    term *= (A + k) * (B + k) / ((C + k) * (k + 1));
    if (sgn(term) == 0) break;
    coeffs.push_back(term);
  }
  return Poly(std::move(coeffs));
}

}  // namespace hgsearch
