#include <doctest.h>

#include <random>

#include "hgsearch/errors.hpp"
#include "hgsearch/verifier.hpp"
#include "oracles.hpp"

using namespace hgsearch;

TEST_CASE("theorem1_rhs anchors") {
  CHECK(theorem1_rhs({1, Rational(1, 3), 1}) == Rational(-3));
  CHECK(theorem1_rhs({2, Rational(1, 3), 1}) == Rational(3, 2));
  for (long r = 1; r <= 5; ++r) CHECK(theorem1_rhs({r, Rational(2, 5), 0}) == Rational(1));
  CHECK_THROWS_AS(theorem1_rhs({0, Rational(1, 3), 2}), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_rhs({2, Rational(1), 1}), PoleError);
}

TEST_CASE("theorem1_rhs at r = 1 is the bare prefactor") {
  for (const Rational& b : {Rational(1, 3), Rational(2, 5), Rational(7, 3), Rational(-5, 2)}) {
    for (long n = 0; n <= 8; ++n) {
      Rational expected = oracle::poch(Rational(1, 2), n) * oracle::poch(b, n) /
                          (oracle::poch(b / 2, n) * oracle::poch(b / 2 - Rational(1, 2), n));
      CHECK(theorem1_rhs({1, b, n}) == expected);
    }
  }
}

TEST_CASE("theorem1_rhs matches term-by-term summation of the left side") {
  for (long r = 1; r <= 4; ++r)
    for (const Rational& b : {Rational(1, 3), Rational(-5, 2), Rational(3, 7)})
      for (long n = 0; n <= 10; ++n) {
        Rational lhs;
        const Rational C = Rational(-2 * n + 2 * r) - b;
        REQUIRE(oracle::direct_sum(Rational(-2 * n), b, C, 2 * n, Rational(-1), lhs));
        CHECK(theorem1_rhs({r, b, n}) == lhs);
      }
}

TEST_CASE("verify_theorem1 examples") {
  auto small = verify_theorem1(2, {Rational(1, 3)}, 1);
  CHECK(small.checks == 4);
  CHECK(small.counterexamples.empty());
  CHECK(small.skipped.empty());

  auto wide = verify_theorem1(1, {Rational(1, 3), Rational(2, 5)}, 10);
  CHECK(wide.counterexamples.empty());
  CHECK(wide.checks == 22);

  auto pole = verify_theorem1(2, {Rational(1)}, 1);
  bool skipped_r2 = false;
  for (const auto& s : pole.skipped) skipped_r2 |= s.params.r == 2 && s.params.n == 1;
  CHECK(skipped_r2);
}

TEST_CASE("chu_vandermonde_rhs examples") {
  CHECK(chu_vandermonde_rhs(1, Rational(2), Rational(5)) == Rational(3, 5));
  for (long n = 1; n <= 5; ++n) CHECK(chu_vandermonde_rhs(n, Rational(3, 4), Rational(3, 4)) == 0);
  CHECK(chu_vandermonde_rhs(2, Rational(1, 2), Rational(3)) == Rational(35, 48));
  CHECK_THROWS_AS(chu_vandermonde_rhs(3, Rational(1), Rational(-1)), PoleError);
}

TEST_CASE("conjecture1 examples") {
  FamilySpec f = conjecture1_family(0, 0);
  CHECK(*eval_terminating(f, 0, Rational(-3)) == 1);
  CHECK(*eval_terminating(f, 1, Rational(-3)) == Rational(8, 5));
  auto report = verify_conjecture1(0, 0, 0, 0, 6);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].status == "certificate");
  CHECK(report.found() == 1);
}

TEST_CASE("conjecture1 certificates re-confirm") {
  auto report = verify_conjecture1(-1, 1, -1, 1, 6);
  CHECK(report.entries.size() == 9);
  for (const auto& e : report.entries) {
    if (!e.certificate) continue;
    CHECK(e.reconfirmed);
    CHECK(confirm(*e.certificate, conjecture1_family(e.i, e.j), Rational(-3), 20, e.certificate->start_index));
  }
}

TEST_CASE("theorem1 variants are hypergeometric") {
  auto entries = verify_theorem1_variants(2, {Rational(1, 3), Rational(2, 5)}, 6);
  CHECK(entries.size() == 12);
  for (const auto& e : entries) {
    INFO(e.name, " r=", e.r, " b=", to_string(e.b));
    CHECK(e.status == GuessStatus::Hypergeometric);
  }
}
