#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hgsearch/candidate.hpp"
#include "hgsearch/guesser.hpp"
#include "hgsearch/hyperseries.hpp"
#include "hgsearch/matrix.hpp"

namespace hgsearch {

/// Rows i of [i^j u_i(x) | -i^j u_{i+1}(x)], j = 0..d. A nullvector
/// (p_0..p_d, q_0..q_d) encodes P(i) u_i = Q(i) u_{i+1}. Throws
/// UndefinedRowError when a needed u_i is undefined.
PolyMatrix build_fit_matrix_x(const FamilySpec& family, std::size_t d, std::span<const long> rows);

enum class SolveMethod {
  /// Both determinants by exact evaluation/interpolation, exact gcd.
  Exact,
  /// Determinant gcd by multi-modular reconstruction. Candidates are still
  /// confirmed in exact arithmetic.
  Modular,
};

struct SolveOptions {
  SolveMethod method = SolveMethod::Exact;
  std::size_t confirm_extra = 8;
  /// Use the OpenMP determinant kernel (Exact only).
  bool parallel = true;
  /// Offset of the second row window relative to the first.
  long second_window_offset = 1;
};

struct SolvedCandidate {
  CandidateX x;
  /// Present for confirmed Rat and Quad candidates.
  std::optional<Certificate> certificate;
};

struct SolveResult {
  long window_start = 0;
  std::size_t degree_bound = 0;
  bool all_x = false;
  /// Monic squarefree gcd of the two determinants; zero when all_x.
  Poly gcd;
  /// Everything extract_candidates returned, before confirmation.
  std::vector<CandidateX> raw;
  /// Confirmed Rat/Quad candidates followed by unresolved factors.
  std::vector<SolvedCandidate> candidates;
};

/// First s such that u_n is defined for every n in s..s+span; nullopt when
/// none exists below `limit`.
std::optional<long> first_defined_run(const FamilySpec& family, long span, long limit);

/// Every x making the family hypergeometric of ratio degree <= d: gcd of the
/// determinants over row windows {s..s+2d+1} and {s+o..s+o+2d+1}, roots
/// extracted and confirmed with guess(). x = 0 is never reported.
SolveResult solve_x(const FamilySpec& family, std::size_t d, const SolveOptions& options = {});

/// Monic gcd of the two window determinants computed modulo primes and
/// lifted by rational reconstruction; nullopt means both determinants vanish
/// identically. Exposed for cross-checking against the exact route.
std::optional<Poly> modular_determinant_gcd(const FamilySpec& family, std::size_t d, long start,
                                            long offset);

}  // namespace hgsearch
