#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hgsearch/rational.hpp"

namespace hgsearch {

/// Prime factorization of |n| as (prime, multiplicity) pairs, ascending.
/// Uses trial division and Pollard-Brent rho. Returns nullopt if a cofactor
/// resists factoring within the work budget. n = 0 yields nullopt.
std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(
    const Integer& n);

/// All positive divisors of |n|, ascending; nullopt when factoring fails or
/// the divisor count exceeds `limit`.
std::optional<std::vector<Integer>> positive_divisors(const Integer& n,
                                                      std::size_t limit = 1 << 16);

/// Writes n = square^2 * free with `free` squarefree (sign kept on `free`).
/// Returns false when factoring fails.
bool squarefree_decompose(const Integer& n, Integer& square, Integer& free);

}  // namespace hgsearch
