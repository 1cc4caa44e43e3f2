#include "hgsearch/verifier.hpp"

#include <stdexcept>

#include "hgsearch/errors.hpp"

namespace hgsearch {

namespace {

Rational binomial(long top, long k) {
  if (k < 0 || k > top) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational nonzero(const Rational& v, const char* what) {
  if (sgn(v) == 0) throw PoleError(std::string("pole: ") + what + " vanishes");
  return v;
}

}  // namespace

FamilySpec theorem1_family(long r, const Rational& b) {
  return FamilySpec{{Rational(-2), Rational(0)}, {Rational(0), b}, {Rational(-2), Rational(2 * r - b)}};
}

Rational theorem1_rhs(const Theorem1Params& p) {
  if (p.r < 1) throw std::invalid_argument("the perturbed Kummer closed form needs r >= 1");
  const long r = p.r, n = p.n;
  const Rational& b = p.b;
  Rational pre = pochhammer(Rational(1, 2), n) * pochhammer(Rational(b + 1 - r), n);
  pre /= nonzero(pochhammer(Rational(b / 2 + 1 - r), n), "(b/2+1-r)_n");
  pre /= nonzero(pochhammer(Rational(b / 2 + Rational(1, 2) - r), n), "(b/2+1/2-r)_n");
  Rational sum(0);
  Rational four(1);
  for (long i = 0; i < r; ++i) {
    Rational term = four * factorial(i) * binomial(r + i - 1, 2 * i) * binomial(n, i);
    sum += term / nonzero(pochhammer(Rational(b - r + 1), i), "(b-r+1)_i");
    four *= 4;
  }
  return Rational(pre * sum);
}

Theorem1Report verify_theorem1(long r_max, const std::vector<Rational>& b_samples, long n_max) {
  Theorem1Report report;
  for (long r = 1; r <= r_max; ++r) {
    for (const auto& b : b_samples) {
      const FamilySpec family = theorem1_family(r, b);
      for (long n = 0; n <= n_max; ++n) {
        Theorem1Check c{{r, b, n}, "pass", "", std::nullopt, std::nullopt};
        c.lhs = eval_terminating(family, n, Rational(-1));
        try {
          c.rhs = theorem1_rhs(c.params);
        } catch (const PoleError& e) {
          c.detail = e.what();
        }
        if (!c.lhs || !c.rhs) {
          c.status = "skipped";
          if (!c.lhs) c.detail = "left-hand side undefined";
          report.skipped.push_back(c);
        } else {
          ++report.checks;
          if (*c.lhs != *c.rhs) {
            c.status = "counterexample";
            report.counterexamples.push_back(c);
          }
        }
        report.all.push_back(std::move(c));
      }
    }
  }
  return report;
}

FamilySpec conjecture1_family(long i, long j) {
  return FamilySpec{{Rational(-2), Rational(0)},
                    {Rational(0), Rational(Rational(-1, 2) + i)},
                    {Rational(-3), Rational(Rational(-1, 2) + j)}};
}

std::size_t Conjecture1Report::found() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.status == "certificate" && e.reconfirmed;
  return k;
}

Conjecture1Report verify_conjecture1(long i_min, long i_max, long j_min, long j_max, std::size_t d) {
  Conjecture1Report report;
  GuessConfig cfg;
  cfg.degree_bound = d;
  const Rational x(-3);
  for (long i = i_min; i <= i_max; ++i) {
    for (long j = j_min; j <= j_max; ++j) {
      const FamilySpec family = conjecture1_family(i, j);
      Conjecture1Entry e{i, j, "NotHypergeometric", std::nullopt, false};
      auto g = guess(family, x, cfg);
      if (g.status == GuessStatus::Hypergeometric) {
        e.status = "certificate";
        e.certificate = g.certificate;
        e.reconfirmed = confirm(*g.certificate, family, x, 2 * cfg.confirm_extra,
                                g.certificate->start_index);
      } else if (g.status != GuessStatus::NotHypergeometric) {
        e.status = "skipped";
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

std::vector<VariantEntry> verify_theorem1_variants(long r_max, const std::vector<Rational>& b_samples,
                                                   std::size_t d) {
  std::vector<VariantEntry> out;
  GuessConfig cfg;
  cfg.degree_bound = d;
  for (long r = 0; r <= r_max; ++r) {
    for (const auto& b : b_samples) {
      const FamilySpec odd{{Rational(-2), Rational(0)}, {Rational(0), b}, {Rational(-2), Rational(2 * r + 1 - b)}};
      const FamilySpec shifted{{Rational(-2), Rational(0)}, {Rational(0), Rational(b + r)}, {Rational(-2), Rational(-b)}};
      for (const auto& [name, family] : {std::pair{"2r+1", odd}, std::pair{"b+r", shifted}}) {
        auto g = guess(family, Rational(-1), cfg);
        out.push_back(VariantEntry{name, r, b, g.status, g.certificate});
      }
    }
  }
  return out;
}

Rational chu_vandermonde_rhs(long n, const Rational& b, const Rational& c) {
  Rational den = nonzero(pochhammer(c, n), "(c)_n");
  return Rational(pochhammer(Rational(c - b), n) / den);
}

Json encode(const Theorem1Check& c) {
  Json j{{"params", {{"r", c.params.r}, {"b", encode(c.params.b)}, {"n", c.params.n}}}, {"status", c.status}};
  if (c.lhs && c.rhs) j["value_checked"] = encode(*c.lhs);
  if (c.status == "counterexample") j["rhs"] = encode(*c.rhs);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json encode(const Conjecture1Entry& e) {
  Json j{{"params", {{"i", e.i}, {"j", e.j}}}, {"status", e.status}};
  if (e.certificate) {
    j["certificate"] = encode(widen(*e.certificate));
    j["closed_form"] = closed_form_ratio(*e.certificate);
    j["reconfirmed"] = e.reconfirmed;
  }
  return j;
}

Json encode(const VariantEntry& e) {
  Json j{{"params", {{"variant", e.name}, {"r", e.r}, {"b", encode(e.b)}}}, {"status", to_string(e.status)}};
  if (e.certificate) j["certificate"] = encode(widen(*e.certificate));
  return j;
}

}  // namespace hgsearch
