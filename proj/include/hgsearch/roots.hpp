#pragma once

#include <vector>

#include "hgsearch/candidate.hpp"

namespace hgsearch {

/// Rational roots, irreducible quadratic factors' roots and any leftover
/// factor of degree >= 3 (as UnresolvedFactor) of a nonzero polynomial.
/// Multiplicities are collapsed. Rational roots come first, ascending, then
/// quadratic pairs (positive irrational part first), then the leftover.
std::vector<CandidateX> extract_candidates(const Poly& f);

/// Distinct rational roots of f, ascending, with f divided by their linear
/// factors returned through `rest`. Roots are found from the rational-root
/// theorem on the primitive integer form. Returns false when the constant or
/// leading coefficient cannot be factored.
bool rational_roots(const Poly& f, std::vector<Rational>& roots, Poly& rest);

}  // namespace hgsearch
