#include "hgsearch/factor.hpp"

#include <algorithm>
#include <map>

namespace hgsearch {

namespace {

constexpr unsigned long kTrialLimit = 20000;
constexpr unsigned long kRhoIterations = 2'000'000;

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Pollard-Brent; returns a nontrivial factor or 0 on budget exhaustion.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer c = seed, y = 2, x, q = 1, g = 1, ys, t;
  unsigned long r = 1, m = 128, spent = 0;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        t = abs(x - y);
        q = q * t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      spent += lim;
      if (spent > kRhoIterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      t = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

bool split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    ++out[n];
    return true;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> sub;
    if (!split(root, sub)) return false;
    for (auto& [p, e] : sub) out[p] += 2 * e;
    return true;
  }
  for (unsigned long seed = 1; seed < 8; ++seed) {
    Integer f = pollard_brent(n, seed);
    if (f != 0 && f != 1 && f != n) {
      Integer rest = n / f;
      return split(f, out) && split(rest, out);
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(
    const Integer& n) {
  if (n == 0) return std::nullopt;
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[Integer(p)];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (!split(m, found)) return std::nullopt;
  return std::vector<std::pair<Integer, unsigned>>(found.begin(), found.end());
}

std::optional<std::vector<Integer>> positive_divisors(const Integer& n,
                                                      std::size_t limit) {
  auto factors = factor_integer(n);
  if (!factors) return std::nullopt;
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : *factors) {
    std::size_t base = divs.size();
    if (base * (e + 1) > limit) return std::nullopt;
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool squarefree_decompose(const Integer& n, Integer& square, Integer& free) {
  if (n == 0) {
    square = 0;
    free = 0;
    return true;
  }
  auto factors = factor_integer(n);
  if (!factors) return false;
  square = 1;
  free = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : *factors) {
    for (unsigned k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) free *= p;
  }
  return true;
}

}  // namespace hgsearch
