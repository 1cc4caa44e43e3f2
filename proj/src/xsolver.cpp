#include "hgsearch/xsolver.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "hgsearch/errors.hpp"
#include "hgsearch/modular.hpp"
#include "hgsearch/polymatrix.hpp"
#include "hgsearch/roots.hpp"

namespace hgsearch {

namespace {

constexpr std::size_t kMaxPrimes = 24;

std::vector<long> window_rows(long start, std::size_t d) {
  std::vector<long> rows(2 * d + 2);
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = start + static_cast<long>(k);
  return rows;
}

// Series polynomials u_first .. u_last, all defined.
std::vector<Poly> series_range(const FamilySpec& family, long first, long last) {
  std::vector<Poly> out;
  for (long i = first; i <= last; ++i) {
    auto u = series_poly_in_x(family, i);
    if (!u) throw UndefinedRowError("u_" + std::to_string(i) + " is undefined for " + to_string(family));
    out.push_back(std::move(*u));
  }
  return out;
}

std::size_t window_degree_bound(const std::vector<Poly>& u, long first, long start, std::size_t d) {
  std::size_t bound = 0;
  for (long i = start; i < start + static_cast<long>(2 * d + 2); ++i) {
    auto idx = static_cast<std::size_t>(i - first);
    bound += static_cast<std::size_t>(std::max({0L, u[idx].degree(), u[idx + 1].degree()}));
  }
  return bound;
}

enum class ModKind { Gcd, Zero, BadPrime };

struct ModImage {
  ModKind kind = ModKind::BadPrime;
  modp::ModPoly gcd;
};

ModImage gcd_mod_prime(const modp::PrimeField& F, const std::vector<Poly>& u, long first,
                       long start, long offset, std::size_t d) {
  ModImage out;
  std::vector<modp::ModPoly> um;
  um.reserve(u.size());
  for (const auto& p : u) {
    auto r = modp::reduce(F, p);
    if (!r) return out;
    um.push_back(std::move(*r));
  }
  const std::size_t n = 2 * d + 2;
  const long starts[2] = {start, start + offset};
  modp::ModPoly dets[2];
  for (int w = 0; w < 2; ++w) {
    const std::size_t bound = window_degree_bound(u, first, starts[w], d);
    std::vector<long> pts = evaluation_points(bound + 2);
    std::vector<std::uint64_t> vals(pts.size());
    std::vector<std::uint64_t> m(n * n);
    std::vector<std::uint64_t> uval(n + 1);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::uint64_t t = F.from_long(pts[k]);
      for (std::size_t r = 0; r <= n; ++r) {
        uval[r] = modp::eval(F, um[static_cast<std::size_t>(starts[w] - first) + r], t);
      }
      for (std::size_t r = 0; r < n; ++r) {
        const std::uint64_t i = F.from_long(starts[w] + static_cast<long>(r));
        std::uint64_t power = 1;
        for (std::size_t j = 0; j <= d; ++j) {
          m[r * n + j] = F.mul(power, uval[r]);
          m[r * n + d + 1 + j] = F.neg(F.mul(power, uval[r + 1]));
          power = F.mul(power, i);
        }
      }
      vals[k] = modp::determinant(F, m, n);
    }
    modp::ModPoly det = modp::interpolate(
        F, std::span<const long>(pts.data(), bound + 1),
        std::span<const std::uint64_t>(vals.data(), bound + 1));
    if (modp::eval(F, det, F.from_long(pts.back())) != vals.back()) {
      throw DegreeBoundError("modular determinant: degree bound too small");
    }
    dets[w] = std::move(det);
  }
  out.gcd = modp::gcd(F, dets[0], dets[1]);
  out.kind = out.gcd.empty() ? ModKind::Zero : ModKind::Gcd;
  return out;
}

enum class LiftKind { Gcd, Zero, Failed };

struct Lifted {
  LiftKind kind = LiftKind::Failed;
  Poly gcd;
};

Lifted lift_gcd(const FamilySpec& family, std::size_t d, long start, long offset) {
  const long first = start;
  const long last = start + std::max(0L, offset) + static_cast<long>(2 * d + 2);
  const std::vector<Poly> u = series_range(family, first, last);
  const auto& primes = modp::large_primes(kMaxPrimes);

  Lifted out;
  std::size_t zero_votes = 0;
  long best = LONG_MAX;
  Integer modulus = 1;
  std::vector<Integer> acc;
  std::optional<Poly> candidate;
  for (std::uint64_t p : primes) {
    modp::PrimeField F(p);
    ModImage img = gcd_mod_prime(F, u, first, start, offset, d);
    if (img.kind == ModKind::BadPrime) continue;
    if (img.kind == ModKind::Zero) {
      if (++zero_votes >= 2 && best == LONG_MAX) {
        out.kind = LiftKind::Zero;
        return out;
      }
      continue;
    }
    const long deg = static_cast<long>(img.gcd.size()) - 1;
    if (deg > best) continue;
    if (candidate && deg == best) {
      // A stable reconstruction that also matches a fresh prime is accepted.
      auto reduced = modp::reduce(F, *candidate);
      if (reduced && *reduced == img.gcd) {
        out.kind = LiftKind::Gcd;
        out.gcd = *candidate;
        return out;
      }
    }
    if (deg < best) {
      best = deg;
      modulus = p;
      acc.assign(img.gcd.begin(), img.gcd.end());
      candidate.reset();
    } else {
      Integer pz = p, minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        Integer t = (Integer(img.gcd[i]) - acc[i]) * minv;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        acc[i] += modulus * t;
      }
      modulus *= pz;
    }
    std::vector<Rational> coeffs;
    bool ok = true;
    for (const auto& a : acc) {
      auto q = modp::rational_reconstruct(a, modulus);
      if (!q) {
        ok = false;
        break;
      }
      coeffs.push_back(*q);
    }
    if (ok) {
      candidate = Poly(std::move(coeffs));
    } else {
      candidate.reset();
    }
  }
  return out;
}

struct ExactGcd {
  bool zero = false;
  Poly gcd;
};

ExactGcd exact_gcd(const FamilySpec& family, std::size_t d, long start, long offset, bool parallel) {
  const long first = start;
  const long last = start + std::max(0L, offset) + static_cast<long>(2 * d + 2);
  const std::vector<Poly> u = series_range(family, first, last);
  Poly dets[2];
  const long starts[2] = {start, start + offset};
  for (int w = 0; w < 2; ++w) {
    std::vector<long> rows = window_rows(starts[w], d);
    PolyMatrix m = build_fit_matrix_x(family, d, rows);
    const std::size_t bound = window_degree_bound(u, first, starts[w], d);
    dets[w] = parallel ? polymat_det(m, bound) : polymat_det_serial(m, bound);
  }
  ExactGcd out;
  if (dets[0].is_zero() && dets[1].is_zero()) {
    out.zero = true;
    return out;
  }
  out.gcd = fast_gcd(dets[0], dets[1]);
  return out;
}

bool trivially_one(const Certificate& cert) {
  return cert.p == cert.q && cert.start_index == 0;
}

}  // namespace

PolyMatrix build_fit_matrix_x(const FamilySpec& family, std::size_t d, std::span<const long> rows) {
  const std::size_t cols = 2 * d + 2;
  PolyMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long i = rows[r];
    auto ui = series_poly_in_x(family, i);
    auto un = series_poly_in_x(family, i + 1);
    if (!ui || !un) {
      throw UndefinedRowError("fit row " + std::to_string(i) + " needs undefined values of " +
                              to_string(family));
    }
    Rational power(1);
    for (std::size_t j = 0; j <= d; ++j) {
      m(r, j) = *ui * power;
      m(r, d + 1 + j) = -(*un * power);
      power *= i;
    }
  }
  return m;
}

std::optional<long> first_defined_run(const FamilySpec& family, long span, long limit) {
  long run_start = 0;
  for (long n = 0; n < limit + span + 1; ++n) {
    if (!definedness(family, n)) {
      run_start = n + 1;
      if (run_start >= limit) return std::nullopt;
      continue;
    }
    if (n - run_start >= span) return run_start;
  }
  return std::nullopt;
}

std::optional<Poly> modular_determinant_gcd(const FamilySpec& family, std::size_t d, long start,
                                            long offset) {
  Lifted lifted = lift_gcd(family, d, start, offset);
  if (lifted.kind == LiftKind::Zero) return std::nullopt;
  if (lifted.kind == LiftKind::Gcd) return lifted.gcd;
  ExactGcd exact = exact_gcd(family, d, start, offset, true);
  if (exact.zero) return std::nullopt;
  return exact.gcd;
}

SolveResult solve_x(const FamilySpec& family, std::size_t d, const SolveOptions& options) {
  if (!family.has_termination_witness()) {
    throw std::invalid_argument("solve_x: family does not terminate: " + to_string(family));
  }
  const long offset = options.second_window_offset;
  const long span = static_cast<long>(2 * d + 2) + std::max(0L, offset);
  auto start = first_defined_run(family, span, 8 * static_cast<long>(2 * d + 3));
  if (!start) {
    throw UndefinedRowError("no run of " + std::to_string(span + 1) + " defined indices for " +
                            to_string(family));
  }
  SolveResult out;
  out.window_start = *start;
  out.degree_bound = d;

  std::optional<Poly> g;
  if (options.method == SolveMethod::Modular) {
    g = modular_determinant_gcd(family, d, *start, offset);
  } else {
    ExactGcd exact = exact_gcd(family, d, *start, offset, options.parallel);
    if (!exact.zero) g = exact.gcd;
  }
  if (!g) {
    out.all_x = true;
    out.raw.push_back(AllX{});
    return out;
  }
  out.gcd = squarefree_part(*g);
  out.raw = extract_candidates(out.gcd);

  GuessConfig config;
  config.degree_bound = d;
  config.confirm_extra = options.confirm_extra;
  for (const CandidateX& cand : out.raw) {
    if (const auto* r = std::get_if<RatX>(&cand)) {
      if (sgn(r->value) == 0) continue;
      GuessResult<Rational> res = guess(family, r->value, config);
      if (res.status == GuessStatus::Hypergeometric) {
        Certificate cert = widen(*res.certificate);
        if (!trivially_one(cert)) out.candidates.push_back({cand, cert});
      }
    } else if (const auto* q = std::get_if<QuadX>(&cand)) {
      GuessResult<QuadExt> res = guess(family, q->value, config);
      if (res.status == GuessStatus::Hypergeometric && !trivially_one(*res.certificate)) {
        out.candidates.push_back({cand, *res.certificate});
      }
    }
  }
  for (const CandidateX& cand : out.raw) {
    if (std::holds_alternative<UnresolvedFactor>(cand)) out.candidates.push_back({cand, std::nullopt});
  }
  return out;
}

}  // namespace hgsearch
