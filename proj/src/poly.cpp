#include "hgsearch/poly.hpp"

#include <climits>

#include "hgsearch/modular.hpp"

namespace hgsearch {

namespace {

template <class T>
std::string render(const BasicPoly<T>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const T& c = f.coeffs()[k];
    if (hgsearch::is_zero(c)) continue;
    std::string mag;
    bool negative = false;
    if constexpr (std::is_same_v<T, Rational>) {
      negative = sgn(c) < 0;
      mag = to_string(Rational(abs(c)));
    } else {
      if (c.is_rational()) {
        negative = sgn(c.a()) < 0;
        mag = to_string(Rational(abs(c.a())));
      } else {
        mag = "(" + to_string(c) + ")";
      }
    }
    if (out.empty()) {
      if (negative) out = "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

}  // namespace

std::vector<Integer> primitive_integer_form(const Poly& f) {
  if (f.is_zero()) return {};
  Integer lcm_den = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

Poly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& v : c) q.emplace_back(v);
  return Poly(std::move(q));
}

Poly fast_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return gcd(f, g);
  if (f.degree() == 0 || g.degree() == 0) return Poly::constant(Rational(1));
  const std::vector<Integer> fi = primitive_integer_form(f);
  const std::vector<Integer> gi = primitive_integer_form(g);
  const Poly fp = from_integers(fi);
  const Poly gp = from_integers(gi);

  const auto& primes = modp::large_primes(48);
  long best = LONG_MAX;
  Integer modulus = 1;
  std::vector<Integer> acc;
  auto reduce = [](const modp::PrimeField& F, const std::vector<Integer>& v) {
    modp::ModPoly out(v.size());
    Integer m = F.prime(), r;
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpz_mod(r.get_mpz_t(), v[i].get_mpz_t(), m.get_mpz_t());
      out[i] = r.get_ui();
    }
    modp::trim(out);
    return out;
  };
  for (std::uint64_t p : primes) {
    modp::PrimeField F(p);
    Integer pz = p;
    if (mpz_divisible_p(fi.back().get_mpz_t(), pz.get_mpz_t()) ||
        mpz_divisible_p(gi.back().get_mpz_t(), pz.get_mpz_t())) {
      continue;
    }
    modp::ModPoly h = modp::gcd(F, reduce(F, fi), reduce(F, gi));
    long deg = static_cast<long>(h.size()) - 1;
    if (deg == 0) return Poly::constant(Rational(1));
    if (deg > best) continue;
    if (deg < best) {
      best = deg;
      modulus = pz;
      acc.assign(h.begin(), h.end());
    } else {
      // CRT: x = acc + modulus * ((h - acc) * modulus^{-1} mod p)
      Integer minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        Integer diff = Integer(h[i]) - acc[i];
        Integer t = diff * minv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        acc[i] += modulus * t;
      }
      modulus *= pz;
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(acc.size());
    bool ok = true;
    for (const auto& a : acc) {
      auto q = modp::rational_reconstruct(a, modulus);
      if (!q) {
        ok = false;
        break;
      }
      coeffs.push_back(*q);
    }
    if (!ok) continue;
    Poly cand(std::move(coeffs));
    if (cand.degree() != best) continue;
    if (divmod(fp, cand).second.is_zero() && divmod(gp, cand).second.is_zero()) {
      return cand.monic();
    }
  }
  return gcd(f, g);
}

std::string to_string(const Poly& f, const std::string& var) { return render(f, var); }
std::string to_string(const QPoly& f, const std::string& var) { return render(f, var); }

QPoly widen(const Poly& f) {
  std::vector<QuadExt> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

}  // namespace hgsearch
