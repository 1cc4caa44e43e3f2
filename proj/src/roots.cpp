#include "hgsearch/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgsearch/factor.hpp"

namespace hgsearch {

Poly minimal_polynomial(const QuadExt& value) {
  return Poly({value.norm(), Rational(-2 * value.a()), Rational(1)});
}

CandidateX make_candidate(const QuadExt& value) {
  if (value.is_rational()) return RatX{value.a()};
  return QuadX{value, minimal_polynomial(value)};
}

QuadExt candidate_value(const CandidateX& x) {
  if (const auto* r = std::get_if<RatX>(&x)) return QuadExt(r->value);
  if (const auto* q = std::get_if<QuadX>(&x)) return q->value;
  throw std::invalid_argument("candidate has no single field value");
}

bool is_point(const CandidateX& x) {
  return std::holds_alternative<RatX>(x) || std::holds_alternative<QuadX>(x);
}

std::string to_string(const CandidateX& x) {
  struct Visitor {
    std::string operator()(const RatX& r) const { return to_string(r.value); }
    std::string operator()(const QuadX& q) const { return to_string(q.value); }
    std::string operator()(const AllX&) const { return "all x"; }
    std::string operator()(const UnresolvedFactor& u) const {
      return "root of " + to_string(u.poly, "x");
    }
  };
  return std::visit(Visitor{}, x);
}

namespace {

// Sign-free evaluation of the homogenized integer polynomial at p/q.
bool vanishes_at(const std::vector<Integer>& c, const Integer& p, const Integer& q) {
  Integer acc = 0, qpow = 1;
  // Horner on sum c_i p^i q^(n-i) from the top: acc = acc*p + c_i*q^(n-i)
  const std::size_t n = c.size() - 1;
  std::vector<Integer> qpows(n + 1);
  qpows[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qpows[i] = qpows[i - 1] * q;
  for (std::size_t i = n + 1; i-- > 0;) acc = acc * p + c[i] * qpows[n - i];
  return acc == 0;
}

Integer eval_int(const std::vector<Integer>& c, long x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

constexpr std::size_t kKroneckerBudget = 4'000'000;

// Finds one irreducible quadratic factor (monic) of a primitive integer
// polynomial without rational roots. Returns false when none exists; sets
// `exhausted` when the budget or factoring gave out.
bool find_quadratic_factor(const Poly& f, Poly& factor, bool& exhausted) {
  std::vector<Integer> h = primitive_integer_form(f);
  Integer h0 = h.front(), h1 = eval_int(h, 1), hm1 = eval_int(h, -1);
  auto lc_divs = positive_divisors(h.back());
  auto c_divs = positive_divisors(h0);
  auto one_divs = positive_divisors(h1);
  if (!lc_divs || !c_divs || !one_divs) {
    exhausted = true;
    return false;
  }
  std::size_t work = 0;
  for (const Integer& alpha : *lc_divs) {
    for (const Integer& gmag : *c_divs) {
      for (int gs : {1, -1}) {
        Integer gamma = gmag * gs;
        for (const Integer& dmag : *one_divs) {
          for (int ds : {1, -1}) {
            if (++work > kKroneckerBudget) {
              exhausted = true;
              return false;
            }
            Integer beta = dmag * ds - alpha - gamma;
            Integer gm1 = alpha - beta + gamma;
            if (gm1 == 0 || !mpz_divisible_p(hm1.get_mpz_t(), gm1.get_mpz_t())) continue;
            Integer disc = beta * beta - 4 * alpha * gamma;
            if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) continue;
            Poly g({Rational(gamma), Rational(beta), Rational(alpha)});
            if (divmod(f, g).second.is_zero()) {
              factor = g.monic();
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

void push_quadratic_roots(const Poly& monic_quad, std::vector<CandidateX>& out) {
  const Rational& p = monic_quad.coeffs()[1];
  const Rational& q = monic_quad.coeffs()[0];
  Rational disc = p * p - 4 * q;
  QuadExt s = sqrt_rational(disc);
  QuadExt half_s = s * QuadExt(Rational(1, 2));
  QuadExt mid(Rational(-p / 2));
  QuadExt first = mid + half_s, second = mid - half_s;
  if (sgn(first.b()) < 0) std::swap(first, second);
  out.push_back(QuadX{first, monic_quad});
  out.push_back(QuadX{second, monic_quad});
}

}  // namespace

bool rational_roots(const Poly& f, std::vector<Rational>& roots, Poly& rest) {
  roots.clear();
  rest = f;
  if (f.degree() <= 0) return true;
  std::vector<Integer> c = primitive_integer_form(f);
  if (c.front() == 0) {
    roots.emplace_back(0);
    std::size_t shift = 0;
    while (c[shift] == 0) ++shift;
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  }
  if (c.size() > 1) {
    auto num_divs = positive_divisors(c.front());
    auto den_divs = positive_divisors(c.back());
    if (!num_divs || !den_divs) return false;
    for (const Integer& q : *den_divs) {
      for (const Integer& p : *num_divs) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int s : {1, -1}) {
          Integer ps = p * s;
          if (vanishes_at(c, ps, q)) {
            Rational r(ps, q);
            r.canonicalize();
            roots.push_back(r);
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const Rational& r : roots) {
    while (true) {
      auto [quo, rem] = divmod(rest, Poly::linear_root(r));
      if (!rem.is_zero()) break;
      rest = quo;
    }
  }
  return true;
}

std::vector<CandidateX> extract_candidates(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("extract_candidates: zero polynomial");
  std::vector<CandidateX> out;
  Poly sf = squarefree_part(f);
  if (sf.degree() <= 0) return out;
  std::vector<Rational> roots;
  Poly rest;
  if (!rational_roots(sf, roots, rest)) {
    out.push_back(UnresolvedFactor{sf});
    return out;
  }
  for (auto& r : roots) out.push_back(RatX{r});
  rest = rest.monic();
  while (rest.degree() >= 3) {
    Poly quad;
    bool exhausted = false;
    if (!find_quadratic_factor(rest, quad, exhausted)) break;
    push_quadratic_roots(quad, out);
    rest = exact_divide(rest, quad).monic();
  }
  if (rest.degree() == 2) {
    push_quadratic_roots(rest, out);
  } else if (rest.degree() >= 3) {
    out.push_back(UnresolvedFactor{rest});
  }
  return out;
}

}  // namespace hgsearch
