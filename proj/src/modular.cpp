#include "hgsearch/modular.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hgsearch::modp {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("modp: inverse of zero");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_long(long v) const {
  long long r = static_cast<long long>(v) % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> PrimeField::from_rational(const Rational& q) const {
  Integer m = p_;
  Integer n, d;
  mpz_mod(n.get_mpz_t(), q.get_num_mpz_t(), m.get_mpz_t());
  mpz_mod(d.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t());
  if (d == 0) return std::nullopt;
  return mul(static_cast<std::uint64_t>(n.get_ui()), inv(static_cast<std::uint64_t>(d.get_ui())));
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t eval(const PrimeField& F, const ModPoly& f, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

ModPoly monic(const PrimeField& F, ModPoly f) {
  trim(f);
  if (f.empty()) return f;
  std::uint64_t inv = F.inv(f.back());
  for (auto& v : f) v = F.mul(v, inv);
  return f;
}

ModPoly rem(const PrimeField& F, ModPoly a, const ModPoly& b) {
  trim(a);
  std::size_t db = b.size() - 1;
  std::uint64_t inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t f = F.mul(a.back(), inv);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(f, b[j]));
    trim(a);
  }
  return a;
}

ModPoly gcd(const PrimeField& F, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, std::move(a));
}

std::optional<ModPoly> reduce(const PrimeField& F, const Poly& f) {
  ModPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto v = F.from_rational(c);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  trim(out);
  return out;
}

std::uint64_t determinant(const PrimeField& F, std::vector<std::uint64_t>& m, std::size_t n) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      det = F.neg(det);
    }
    std::uint64_t pv = m[col * n + col];
    det = F.mul(det, pv);
    std::uint64_t inv = F.inv(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      std::uint64_t f = F.mul(m[r * n + col], inv);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        m[r * n + j] = F.sub(m[r * n + j], F.mul(f, m[col * n + j]));
      }
    }
  }
  return det;
}

ModPoly interpolate(const PrimeField& F, std::span<const long> points,
                    std::span<const std::uint64_t> values) {
  std::size_t n = points.size();
  long span = 0;
  for (long p : points) span = std::max(span, p < 0 ? -p : p);
  // Inverses of every possible point difference, indexed by difference + 2*span.
  std::vector<std::uint64_t> inv_diff(static_cast<std::size_t>(4 * span + 1), 0);
  for (long d = -2 * span; d <= 2 * span; ++d) {
    if (d != 0) inv_diff[static_cast<std::size_t>(d + 2 * span)] = F.inv(F.from_long(d));
  }
  std::vector<std::uint64_t> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      long diff = points[i] - points[i - level];
      if (diff == 0) throw std::invalid_argument("modp::interpolate: repeated point");
      dd[i] = F.mul(F.sub(dd[i], dd[i - 1]), inv_diff[static_cast<std::size_t>(diff + 2 * span)]);
    }
  }
  // Horner-style expansion of the Newton form.
  ModPoly poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    ModPoly next(poly.size() + 1, 0);
    std::uint64_t negp = F.neg(F.from_long(points[k]));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], poly[j]);
      next[j] = F.add(next[j], F.mul(poly[j], negp));
    }
    next[0] = F.add(next[0], dd[k]);
    poly = std::move(next);
  }
  trim(poly);
  return poly;
}

const std::vector<std::uint64_t>& large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mu);
  Integer cand = primes.empty() ? Integer(1) << 62 : Integer(primes.back());
  while (primes.size() < count) {
    cand -= 1;
    if (mpz_probab_prime_p(cand.get_mpz_t(), 40) > 0) primes.push_back(cand.get_ui());
  }
  return primes;
}

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1, t0 = 0, t1 = 1;
  mpz_mod(r1.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace hgsearch::modp
