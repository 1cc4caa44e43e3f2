#include <doctest.h>

#include <algorithm>
#include <random>

#include "hgsearch/errors.hpp"
#include "hgsearch/polymatrix.hpp"
#include "hgsearch/xsolver.hpp"
#include "oracles.hpp"

using namespace hgsearch;

namespace {

FamilySpec fam(long a, long b, Rational b0, long c, Rational c0) { return FamilySpec::search_form(a, b, b0, c, c0); }

FamilySpec chu_family() { return FamilySpec{{Rational(-1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(0), Rational(5)}}; }

bool has_point(const SolveResult& r, const QuadExt& x) {
  return std::any_of(r.candidates.begin(), r.candidates.end(), [&](const SolvedCandidate& c) {
    return is_point(c.x) && candidate_value(c.x) == x;
  });
}

std::vector<QuadExt> confirmed_points(const SolveResult& r) {
  std::vector<QuadExt> out;
  for (const auto& c : r.candidates) {
    if (is_point(c.x) && c.certificate) out.push_back(candidate_value(c.x));
  }
  return out;
}

}  // namespace

TEST_CASE("build_fit_matrix_x examples") {
  std::vector<long> rows{0, 1};
  PolyMatrix m = build_fit_matrix_x(chu_family(), 0, rows);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  Poly u1{Rational(1), Rational(-2, 5)};
  CHECK(m(0, 0) == Poly{Rational(1)});
  CHECK(m(0, 1) == -u1);
  CHECK(m(1, 0) == u1);
  CHECK(m(1, 1) == -*series_poly_in_x(chu_family(), 2));

  std::vector<long> one{0};
  PolyMatrix single = build_fit_matrix_x(chu_family(), 0, one);
  REQUIRE(single.rows() == 1);
  CHECK(single(0, 0) == Poly{Rational(1)});
  CHECK(single(0, 1) == -u1);

  FamilySpec undefined_at_2{{Rational(-1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(0), Rational(-1)}};
  std::vector<long> bad{1};
  CHECK_THROWS_AS(build_fit_matrix_x(undefined_at_2, 0, bad), UndefinedRowError);
}

TEST_CASE("solve_x on the omega family") {
  SolveResult r = solve_x(fam(1, -3, Rational(-1), -2, Rational(0)), 10);
  CHECK_FALSE(r.all_x);
  QuadExt plus(Rational(1, 2), Rational(1, 2), -3), minus(Rational(1, 2), Rational(-1, 2), -3);
  CHECK(has_point(r, plus));
  CHECK(has_point(r, minus));
  for (const auto& c : r.candidates) {
    if (!is_point(c.x)) continue;
    REQUIRE(c.certificate);
    CHECK(confirm(*c.certificate, fam(1, -3, Rational(-1), -2, Rational(0)), candidate_value(c.x), 12,
                  c.certificate->start_index));
  }
}

TEST_CASE("solve_x finds x = 1 for Chu-Vandermonde") {
  SolveResult r = solve_x(chu_family(), 2);
  CHECK(has_point(r, QuadExt(1)));
  for (const auto& c : r.candidates) {
    if (is_point(c.x)) CHECK_FALSE(candidate_value(c.x).is_zero());
  }
}

TEST_CASE("upper2 = lower is hypergeometric for every x") {
  SolveResult r = solve_x(fam(2, 1, Rational(1, 3), 1, Rational(1, 3)), 2);
  CHECK(r.all_x);
}

TEST_CASE("modular and exact gcds agree") {
  std::mt19937_64 rng(51);
  int compared = 0;
  for (int t = 0; t < 12; ++t) {
    FamilySpec f = fam(1 + rng() % 2, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 2),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 4, 2));
    SolveOptions exact, modular;
    modular.method = SolveMethod::Modular;
    exact.parallel = false;
    SolveResult a, b;
    try {
      a = solve_x(f, 2, exact);
      b = solve_x(f, 2, modular);
    } catch (const UndefinedRowError&) {
      continue;
    }
    CHECK(a.all_x == b.all_x);
    CHECK(a.gcd == b.gcd);
    CHECK(confirmed_points(a) == confirmed_points(b));
    ++compared;
  }
  CHECK(compared > 5);
}

TEST_CASE("every x where guess succeeds is found by solve_x") {
  std::vector<Rational> sweep;
  for (long p = -6; p <= 6; ++p)
    for (long q : {1, 2, 3, 4, 5}) {
      Rational v = fraction(p, q);
      if (sgn(v) != 0 && std::find(sweep.begin(), sweep.end(), v) == sweep.end()) sweep.push_back(v);
    }
  sweep.resize(std::min<std::size_t>(sweep.size(), 40));
  REQUIRE(sweep.size() == 40);
  std::mt19937_64 rng(52);
  const std::size_t d = 2;
  GuessConfig gc;
  gc.degree_bound = d;
  int families = 0, hits = 0;
  while (families < 6) {
    FamilySpec f = fam(1, static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 3, 2),
                       static_cast<long>(rng() % 5) - 2, oracle::random_rational(rng, 3, 2));
    SolveResult r;
    try {
      r = solve_x(f, d);
    } catch (const UndefinedRowError&) {
      continue;
    }
    if (r.window_start != 0 || r.all_x) continue;
    ++families;
    for (const Rational& x : sweep) {
      if (guess(f, x, gc).status != GuessStatus::Hypergeometric) continue;
      INFO(to_string(f), " x=", to_string(x));
      CHECK(sgn(r.gcd.eval(x)) == 0);
      ++hits;
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("a later second window gives the same confirmed candidates") {
  for (const FamilySpec& f : {fam(1, -3, Rational(-1), -2, Rational(0)), chu_family(),
                              fam(2, 0, Rational(1, 3), -2, Rational(5, 3))}) {
    SolveOptions shifted;
    shifted.second_window_offset = 2;
    auto a = confirmed_points(solve_x(f, 6));
    auto b = confirmed_points(solve_x(f, 6, shifted));
    CHECK(a == b);
  }
}
