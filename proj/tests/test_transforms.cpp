#include <doctest.h>

#include <random>

#include "hgsearch/errors.hpp"
#include "hgsearch/transforms.hpp"
#include "oracles.hpp"

using namespace hgsearch;

namespace {

FamilySpec fam(long a, long b, Rational b0, long c, Rational c0) { return FamilySpec::search_form(a, b, b0, c, c0); }

FamilySpec chu_family() { return FamilySpec{{Rational(-1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(0), Rational(5)}}; }

FamilySpec random_family(std::mt19937_64& rng) {
  return fam(1 + rng() % 3, static_cast<long>(rng() % 7) - 3, oracle::random_rational(rng, 6, 3),
             static_cast<long>(rng() % 7) - 3, oracle::random_rational(rng, 6, 3));
}

Rational random_x(std::mt19937_64& rng) {
  while (true) {
    Rational x = oracle::random_rational(rng, 6, 4);
    if (sgn(x) != 0 && x != 1) return x;
  }
}

QuadExt power(QuadExt base, long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  QuadExt r(1);
  while (e-- > 0) r = r * base;
  return r;
}

struct IdentityTally {
  int checked = 0;
  int mismatched = 0;
};

void check_image(const FamilyX& fx, const TransformImage& img, long n_max, IdentityTally& tally) {
  for (long n = 0; n <= n_max; ++n) {
    auto lhs = eval_terminating<QuadExt>(fx.family, n, fx.value());
    auto rhs = eval_terminating<QuadExt>(img.fx.family, n, img.fx.value());
    auto pf = img.prefactor.at(n);
    if (!lhs || !rhs || !pf) continue;
    ++tally.checked;
    if (!(*pf * *rhs == *lhs)) {
      ++tally.mismatched;
      FAIL_CHECK(to_string(img.tag), " ", to_string(fx.family), " x=", to_string(fx.x), " n=", n);
    }
  }
}

}  // namespace

TEST_CASE("pfaff examples") {
  FamilyX fx{chu_family(), RatX{Rational(-1)}};
  auto img = pfaff(fx, 1);
  REQUIRE(img);
  CHECK(img->fx.x == CandidateX(RatX{Rational(1, 2)}));
  CHECK(img->fx.family.upper1 == chu_family().upper1);
  CHECK(img->fx.family.upper2 == LinearSlot{Rational(0), Rational(3)});
  CHECK(img->fx.family.lower == chu_family().lower);
  auto back = pfaff(img->fx, 1);
  REQUIRE(back);
  CHECK(back->fx == fx);
  CHECK_THROWS_AS(pfaff(FamilyX{chu_family(), RatX{Rational(1)}}, 1), PoleError);
}

TEST_CASE("euler examples") {
  CHECK_FALSE(euler(FamilyX{chu_family(), RatX{Rational(-1)}}).has_value());
  FamilyX fx{fam(2, 0, Rational(1, 2), -3, Rational(-1, 2)), RatX{Rational(-3)}};
  auto img = euler(fx);
  REQUIRE(img);
  CHECK(img->fx.family.upper1 == LinearSlot{Rational(-1), Rational(-1, 2)});
  CHECK(img->fx.family.upper2 == LinearSlot{Rational(-3), Rational(-1)});
  auto back = euler(img->fx);
  REQUIRE(back);
  CHECK(back->fx == fx);
  // Both images terminate, but truncation makes the image series a different
  // polynomial, so the pairing is rejected.
  CHECK_FALSE(euler(FamilyX{fam(2, 0, Rational(1, 3), -3, Rational(-1)), RatX{Rational(-3)}}).has_value());
}

TEST_CASE("swap_upper examples") {
  FamilyX fx{chu_family(), RatX{Rational(2)}};
  TransformImage s = swap_upper(fx);
  CHECK(s.fx.family.upper1 == LinearSlot{Rational(0), Rational(2)});
  CHECK(s.fx.family.upper2 == LinearSlot{Rational(-1), Rational(0)});
  CHECK(swap_upper(s.fx).fx == fx);
  CHECK(canonical_key(fx) == canonical_key(s.fx));
}

TEST_CASE("quadratic transform examples") {
  FamilySpec half_lower{{Rational(-2), Rational(0)}, {Rational(0), Rational(1, 3)}, {Rational(0), Rational(2, 3)}};
  auto images = quad_transforms(FamilyX{half_lower, RatX{Rational(1, 3)}});
  bool found = false;
  for (const auto& img : images) {
    if (img.fx.x == CandidateX(RatX{Rational(1, 25)})) found = true;
  }
  CHECK(found);
  CHECK(quad_transforms(FamilyX{fam(1, 2, Rational(1, 3), 1, Rational(1, 7)), RatX{Rational(-3)}}).empty());
  auto p = pfaff(FamilyX{chu_family(), RatX{Rational(-3)}}, 1);
  REQUIRE(p);
  CHECK(p->fx.x == CandidateX(RatX{Rational(3, 4)}));
}

TEST_CASE("every generator is a value identity") {
  std::mt19937_64 rng(61);
  IdentityTally tally;
  for (int t = 0; t < 150; ++t) {
    FamilyX fx{random_family(rng), RatX{random_x(rng)}};
    for (const auto& img : neighbours(fx)) check_image(fx, img, 6, tally);
  }
  for (long b0 = -2; b0 <= 2; ++b0)
    for (long c0 = -2; c0 <= 2; ++c0)
      for (const Rational& x : {Rational(-1), Rational(1, 2), Rational(2), Rational(-3), Rational(1, 3)}) {
        FamilyX fx{fam(2, 0, fraction(b0, 2), -2, fraction(c0, 2)), RatX{x}};
        for (const auto& img : neighbours(fx)) check_image(fx, img, 6, tally);
      }
  FamilyX omega{fam(1, -3, Rational(-1), -2, Rational(0)), make_candidate(QuadExt(Rational(1, 2), Rational(1, 2), -3))};
  for (const auto& e : orbit(omega))
    for (const auto& img : neighbours(e)) check_image(e, img, 6, tally);
  CHECK(tally.checked > 2000);
  CHECK(tally.mismatched == 0);
}

TEST_CASE("Pfaff prefactor is (1-x)^(a n)") {
  std::mt19937_64 rng(62);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    FamilySpec f = random_family(rng);
    Rational x = random_x(rng);
    auto img = pfaff(FamilyX{f, RatX{x}}, 1);
    if (!img) continue;
    const long a = *f.search_a();
    for (long n = 0; n <= 8; ++n) {
      auto lhs = eval_terminating(f, n, x);
      auto rhs = eval_terminating<QuadExt>(img->fx.family, n, img->fx.value());
      if (!lhs || !rhs) continue;
      CHECK(power(QuadExt(Rational(1 - x)), a * n) * *rhs == QuadExt(*lhs));
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("generators are involutions") {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 100; ++t) {
    FamilyX fx{random_family(rng), RatX{random_x(rng)}};
    for (int k : {1, 2}) {
      if (auto img = pfaff(fx, k)) {
        auto back = pfaff(img->fx, k);
        REQUIRE(back);
        CHECK(back->fx == fx);
      }
    }
    if (auto img = euler(fx)) {
      auto back = euler(img->fx);
      REQUIRE(back);
      CHECK(back->fx == fx);
    }
    CHECK(swap_upper(swap_upper(fx).fx).fx == fx);
  }
}

TEST_CASE("canonical_key is constant along generators") {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 30; ++t) {
    FamilyX fx{random_family(rng), RatX{random_x(rng)}};
    const std::string key = canonical_key(fx);
    for (const auto& img : neighbours(fx)) CHECK(canonical_key(img.fx) == key);
  }
}

TEST_CASE("unrelated families get distinct keys") {
  FamilyX a{chu_family(), RatX{Rational(1)}};
  FamilyX b{FamilySpec{{Rational(-1), Rational(0)}, {Rational(0), Rational(3)}, {Rational(0), Rational(7)}}, RatX{Rational(1)}};
  CHECK(canonical_key(a) != canonical_key(b));
  for (const auto& e : orbit(a))
    for (const auto& f : orbit(b)) CHECK(serialize_key(e) != serialize_key(f));
}

TEST_CASE("is_chaff examples") {
  CHECK(is_chaff(FamilyX{chu_family(), RatX{Rational(1)}}) == Classification::Gauss);
  FamilySpec kummer{{Rational(-1), Rational(0)}, {Rational(-1), Rational(-1, 2)}, {Rational(0), Rational(3, 2)}};
  CHECK(is_chaff(FamilyX{kummer, RatX{Rational(-1)}}) == Classification::Kummer);
  // Reaches x = 1 through Pfaff and the quarter-argument map.
  CHECK(is_chaff(FamilyX{fam(2, 0, Rational(1, 3), -2, Rational(2, 3)), RatX{Rational(-1)}}) == Classification::Gauss);
  QuadExt w(Rational(1, 2), Rational(1, 2), -3);
  CHECK(is_chaff(FamilyX{fam(1, -3, Rational(-1), -2, Rational(0)), make_candidate(w)}) == Classification::None);
}

TEST_CASE("is_chaff is constant on orbits") {
  std::mt19937_64 rng(65);
  for (int t = 0; t < 25; ++t) {
    FamilyX fx{random_family(rng), RatX{t % 3 == 0 ? Rational(-1) : random_x(rng)}};
    const Classification c = is_chaff(fx);
    for (const auto& img : neighbours(fx)) CHECK(is_chaff(img.fx) == c);
  }
}
