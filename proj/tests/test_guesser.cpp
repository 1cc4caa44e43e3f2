#include <doctest.h>

#include <random>

#include "hgsearch/guesser.hpp"
#include "oracles.hpp"

using namespace hgsearch;

namespace {

FamilySpec fam(long a, long b, Rational b0, long c, Rational c0) { return FamilySpec::search_form(a, b, b0, c, c0); }

FamilySpec chu_family() { return FamilySpec{{Rational(-1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(0), Rational(5)}}; }

GuessConfig config(std::size_t d) {
  GuessConfig c;
  c.degree_bound = d;
  return c;
}

std::vector<SeriesValue<Rational>> defined(const std::vector<Rational>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("fit_ratio examples") {
  std::vector<Rational> chu;
  for (long n = 0; n < 12; ++n) chu.push_back(*eval_terminating(chu_family(), n, Rational(1)));
  CHECK(chu[1] == Rational(3, 5));
  CHECK(chu[2] == Rational(2, 5));
  CHECK(chu[3] == Rational(2, 7));
  auto values = defined(chu);
  auto fit = fit_ratio<Rational>(values, config(1));
  REQUIRE(fit.status == FitStatus::Found);
  CHECK(fit.certificates[0].p == Poly{Rational(3), Rational(1)});
  CHECK(fit.certificates[0].q == Poly{Rational(5), Rational(1)});

  auto ones = defined(std::vector<Rational>(10, Rational(1)));
  GuessConfig c0 = config(0);
  fit = fit_ratio<Rational>(ones, c0);
  REQUIRE(fit.status == FitStatus::Found);
  CHECK(fit.certificates[0].p == Poly{Rational(1)});
  CHECK(fit.certificates[0].q == Poly{Rational(1)});

  std::vector<Rational> fast;
  for (long n = 0; n < 12; ++n) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(n * n));
    fast.push_back(Rational(v));
  }
  auto fv = defined(fast);
  CHECK(fit_ratio<Rational>(fv, config(1)).status == FitStatus::NoFit);
}

TEST_CASE("fit_ratio reports too few pairs as degenerate") {
  std::vector<SeriesValue<Rational>> sparse(config(2).samples() + 1);
  for (std::size_t i = 0; i < sparse.size(); i += 2) sparse[i] = Rational(1);
  CHECK(fit_ratio<Rational>(sparse, config(2)).status == FitStatus::Degenerate);
  auto short_input = defined(std::vector<Rational>(4, Rational(1)));
  CHECK_THROWS_AS(fit_ratio<Rational>(short_input, config(2)), std::invalid_argument);
}

TEST_CASE("confirm examples") {
  GuessConfig cfg = config(1);
  auto g = guess(chu_family(), Rational(1), cfg);
  REQUIRE(g.certificate);
  CHECK(confirm(*g.certificate, chu_family(), Rational(1), 8, 0));
  RatioCertificate<Rational> wrong{Poly{Rational(3), Rational(1)}, Poly{Rational(4), Rational(1)}, 0};
  CHECK_FALSE(confirm(wrong, chu_family(), Rational(1), 8, 0));
}

TEST_CASE("guess examples") {
  auto g = guess(chu_family(), Rational(1), config(1));
  REQUIRE(g.status == GuessStatus::Hypergeometric);
  CHECK(to_string(widen(*g.certificate)) == "(n+3)/(n+5)");
  CHECK(guess(FamilySpec{{Rational(-1), Rational(0)}, {Rational(0), Rational(1, 3)}, {Rational(0), Rational(1, 5)}},
              Rational(2), config(6))
            .status == GuessStatus::NotHypergeometric);
  auto c = guess(fam(2, 0, Rational(-1, 2), -3, Rational(-1, 2)), Rational(-3), config(6));
  CHECK(c.status == GuessStatus::Hypergeometric);
  REQUIRE(c.values.size() > 1);
  CHECK(c.values[1] == Rational(8, 5));
}

TEST_CASE("guess over a quadratic field") {
  QuadExt w(Rational(1, 2), Rational(1, 2), -3);
  auto g = guess(fam(1, -3, Rational(-1), -2, Rational(0)), w, config(10));
  REQUIRE(g.status == GuessStatus::Hypergeometric);
  CHECK(confirm(*g.certificate, fam(1, -3, Rational(-1), -2, Rational(0)), w, 12, g.certificate->start_index));
}

TEST_CASE("round-trip: generated ratios are re-fitted exactly") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 60) {
    const std::size_t d = 1 + rng() % 5;
    std::vector<Rational> proots, qroots;
    for (std::size_t i = 0; i < d; ++i) {
      proots.push_back(oracle::random_rational(rng, 9, 4));
      qroots.push_back(oracle::random_rational(rng, 9, 4) + Rational(1, 13));
    }
    Poly p = Poly::constant(oracle::random_rational(rng, 5, 3) + Rational(1, 17)), q = Poly::constant(Rational(1));
    for (std::size_t i = 0; i < d; ++i) {
      p = p * Poly::linear_root(proots[i]);
      q = q * Poly::linear_root(qroots[i]);
    }
    if (gcd(p, q).degree() > 0) continue;
    GuessConfig cfg = config(d);
    std::vector<SeriesValue<Rational>> u{Rational(1)};
    bool ok = true;
    for (long n = 0; n < static_cast<long>(cfg.samples() + 4); ++n) {
      Rational pn = p.eval(Rational(n)), qn = q.eval(Rational(n));
      if (sgn(pn) == 0 || sgn(qn) == 0) ok = false;
      if (!ok) break;
      u.push_back(Rational(*u.back() * pn / qn));
    }
    if (!ok) continue;
    auto fit = fit_ratio<Rational>(u, cfg);
    REQUIRE(fit.status == FitStatus::Found);
    CHECK(fit.certificates[0].p == p * (Rational(1) / q.leading()));
    CHECK(fit.certificates[0].q == q.monic());
    ++checked;
  }
}

TEST_CASE("scaling the sequence leaves the certificate unchanged") {
  std::vector<Rational> chu;
  for (long n = 0; n < 12; ++n) chu.push_back(*eval_terminating(chu_family(), n, Rational(1)));
  std::vector<Rational> scaled;
  for (const auto& v : chu) scaled.push_back(v * Rational(-7, 3));
  auto a = defined(chu), b = defined(scaled);
  CHECK(fit_ratio<Rational>(a, config(1)).certificates[0] == fit_ratio<Rational>(b, config(1)).certificates[0]);
}

TEST_CASE("success at degree d persists at higher degree") {
  auto base = guess(chu_family(), Rational(1), config(1));
  REQUIRE(base.certificate);
  for (std::size_t d = 2; d <= 5; ++d) {
    auto g = guess(chu_family(), Rational(1), config(d));
    REQUIRE(g.certificate);
    CHECK(g.certificate->p == base.certificate->p);
    CHECK(g.certificate->q == base.certificate->q);
  }
}

TEST_CASE("certificates hold on the full sampled range") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    FamilySpec f = fam(1 + rng() % 2, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3));
    auto g = guess(f, Rational(1), config(3));
    if (!g.certificate) continue;
    for (std::size_t n = g.certificate->start_index; n + 1 < g.values.size(); ++n) {
      if (!g.values[n] || !g.values[n + 1]) continue;
      const Rational N(static_cast<long>(n));
      INFO(to_string(f), " n=", n, " cert=", to_string(widen(*g.certificate)), " start=", g.certificate->start_index);
      CHECK(*g.values[n + 1] * g.certificate->q.eval(N) == *g.values[n] * g.certificate->p.eval(N));
    }
  }
}
