#include <doctest.h>

#include <random>

#include "hgsearch/hyperseries.hpp"
#include "hgsearch/verifier.hpp"
#include "oracles.hpp"

using namespace hgsearch;

namespace {

FamilySpec fam(long a, long b, Rational b0, long c, Rational c0) { return FamilySpec::search_form(a, b, b0, c, c0); }

FamilySpec constant_family(long a, const Rational& B, const Rational& C) {
  return FamilySpec{{Rational(-a), Rational(0)}, {Rational(0), B}, {Rational(0), C}};
}

}  // namespace

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(17, 3), 0) == 1);
  CHECK(pochhammer(Rational(-3), 5) == 0);
}

TEST_CASE("definedness examples") {
  for (long n = 0; n < 10; ++n) CHECK(definedness(constant_family(1, Rational(2), Rational(5)), n));
  CHECK_FALSE(definedness(constant_family(1, Rational(2), Rational(-1)), 2));
  CHECK(definedness(fam(1, -3, Rational(-1), -2, Rational(0)), 3));
}

TEST_CASE("eval_terminating examples") {
  FamilySpec f = fam(2, 0, Rational(1, 3), 0, Rational(-1, 3));
  CHECK(eval_terminating(f, 1, Rational(-1)) == Rational(-3));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    FamilySpec g = fam(1 + rng() % 3, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 5, 4),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 5, 4) + Rational(1, 7));
    CHECK(eval_terminating(g, 0, oracle::random_rational(rng, 5, 5)) == Rational(1));
  }
  FamilySpec conj = fam(2, 0, Rational(-1, 2), -3, Rational(-1, 2));
  CHECK(eval_terminating(conj, 1, Rational(-3)) == Rational(8, 5));
  CHECK_FALSE(eval_terminating(constant_family(1, Rational(2), Rational(-1)), 2, Rational(3)).has_value());
}

TEST_CASE("series_poly_in_x examples") {
  CHECK(*series_poly_in_x(constant_family(1, Rational(2), Rational(5)), 1) == Poly{Rational(1), Rational(-2, 5)});
  CHECK(*series_poly_in_x(fam(1, -3, Rational(-1), -2, Rational(0)), 0) == Poly{Rational(1)});
  CHECK(*series_poly_in_x(constant_family(1, Rational(-4), Rational(-2)), 1) == Poly{Rational(1), Rational(-2)});
}

TEST_CASE("eval_terminating matches term-by-term summation") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    FamilySpec f = fam(1 + rng() % 3, static_cast<long>(rng() % 7) - 3, oracle::random_rational(rng, 6, 4),
                       static_cast<long>(rng() % 7) - 3, oracle::random_rational(rng, 6, 4));
    Rational x = oracle::random_rational(rng, 7, 5);
    QuadExt xq(oracle::random_rational(rng, 3, 3), oracle::random_rational(rng, 3, 3), -7);
    for (long n = 0; n <= 8; ++n) {
      auto v = eval_terminating(f, n, x);
      auto vq = eval_terminating(f, n, xq);
      if (!v) continue;
      Rational direct;
      QuadExt directq;
      const long N = termination_index(f, n);
      REQUIRE(oracle::direct_sum(f.upper1.at(n), f.upper2.at(n), f.lower.at(n), N, x, direct));
      REQUIRE(oracle::direct_sum(f.upper1.at(n), f.upper2.at(n), f.lower.at(n), N, xq, directq));
      CHECK(*v == direct);
      CHECK(*vq == directq);
    }
  }
}

TEST_CASE("series_poly_in_x agrees with eval_terminating") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    FamilySpec f = fam(1 + rng() % 2, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3));
    Rational x = oracle::random_rational(rng, 6, 4);
    for (long n = 0; n <= 12; ++n) {
      auto p = series_poly_in_x(f, n);
      auto v = eval_terminating(f, n, x);
      REQUIRE(p.has_value() == v.has_value());
      if (p) CHECK(p->eval(x) == *v);
    }
  }
}

TEST_CASE("upper2 = lower gives (1-x)^(a n)") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    long a = 1 + rng() % 3;
    Rational c0 = oracle::random_rational(rng, 5, 3) + Rational(1, 11);
    long c = static_cast<long>(rng() % 5) - 2;
    FamilySpec f = fam(a, c, c0, c, c0);
    Rational x = oracle::random_rational(rng, 5, 4);
    for (long n = 0; n <= 10; ++n) {
      auto v = eval_terminating(f, n, x);
      if (v) CHECK(*v == rational_pow(Rational(1 - x), a * n));
    }
  }
}

TEST_CASE("swapping the upper slots keeps the value") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    FamilySpec f = fam(1 + rng() % 3, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 3));
    FamilySpec g{f.upper2, f.upper1, f.lower};
    Rational x = oracle::random_rational(rng, 5, 4);
    for (long n = 0; n <= 8; ++n) {
      auto v = eval_terminating(f, n, x);
      auto w = eval_terminating(g, n, x);
      if (v && w) CHECK(*v == *w);
    }
  }
}

TEST_CASE("x = 1 agrees with Chu-Vandermonde") {
  std::mt19937_64 rng(6);
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    Rational b = oracle::random_rational(rng, 9, 7), c = oracle::random_rational(rng, 9, 7);
    FamilySpec f = constant_family(1, b, c);
    for (long n = 0; n <= 15; ++n) {
      if (sgn(pochhammer(c, n)) == 0) continue;
      auto v = eval_terminating(f, n, Rational(1));
      REQUIRE(v);
      CHECK(*v == chu_vandermonde_rhs(n, b, c));
      ++compared;
    }
  }
  CHECK(compared > 500);
}
