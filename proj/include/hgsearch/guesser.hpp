#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgsearch/hyperseries.hpp"
#include "hgsearch/matrix.hpp"
#include "hgsearch/poly.hpp"

namespace hgsearch {

struct GuessConfig {
  std::size_t degree_bound = 6;
  /// Number of ratio equations; 0 selects 2d+7.
  std::size_t sample_count = 0;
  std::size_t confirm_extra = 8;

  std::size_t samples() const { return sample_count ? sample_count : 2 * degree_bound + 7; }
  std::size_t min_pairs() const { return 2 * degree_bound + 3; }
  /// Throws std::invalid_argument when samples() < 2d+3.
  void validate() const;
};

/// u_{n+1} / u_n = p(n) / q(n) for n >= start_index, q monic, gcd(p, q) = 1.
template <class T>
struct RatioCertificate {
  BasicPoly<T> p;
  BasicPoly<T> q;
  long start_index = 0;

  friend bool operator==(const RatioCertificate&, const RatioCertificate&) = default;
};

/// Storage form shared by rational and quadratic fits.
using Certificate = RatioCertificate<QuadExt>;

Certificate widen(const RatioCertificate<Rational>& c);
/// "(p)/(q)" in the variable n.
std::string to_string(const Certificate& c);

enum class FitStatus { Found, NoFit, Degenerate };

template <class T>
struct FitResult {
  FitStatus status = FitStatus::NoFit;
  /// Candidates in nullspace-basis order; the first is the reported one.
  std::vector<RatioCertificate<T>> certificates;
  /// One past the last value index used by the fit.
  std::size_t window_end = 0;
  std::size_t nullspace_dim = 0;
};

/// Fits P(i) u_i = Q(i) u_{i+1} over consecutive defined pairs among the first
/// samples() + 1 values, widening the window by d + 3 when the nullspace is
/// not one-dimensional and more values are available.
template <class T>
FitResult<T> fit_ratio(std::span<const SeriesValue<T>> values, const GuessConfig& config);

/// Checks u_{n+1} q(n) = u_n p(n) at `extra` defined indices n >= from,
/// trying at most 4*extra indices.
template <class T>
bool confirm(const RatioCertificate<T>& cert, const FamilySpec& family, const T& x,
             std::size_t extra, long from);

enum class GuessStatus { Hypergeometric, NotHypergeometric, Degenerate, AllZero };

std::string to_string(GuessStatus s);

template <class T>
struct GuessResult {
  GuessStatus status = GuessStatus::NotHypergeometric;
  std::optional<RatioCertificate<T>> certificate;
  std::vector<SeriesValue<T>> values;
};

template <class T>
GuessResult<T> guess(const FamilySpec& family, const T& x, const GuessConfig& config);

/// Rational-coefficient certificate with linear factors pulled out, e.g.
/// "u(n+1)/u(n) = 4*(n+1/2)*(n+1/3)/((n+1/6)*(n+5/6))".
std::string closed_form_ratio(const RatioCertificate<Rational>& cert);

extern template FitResult<Rational> fit_ratio(std::span<const SeriesValue<Rational>>, const GuessConfig&);
extern template FitResult<QuadExt> fit_ratio(std::span<const SeriesValue<QuadExt>>, const GuessConfig&);
extern template bool confirm(const RatioCertificate<Rational>&, const FamilySpec&, const Rational&,
                             std::size_t, long);
extern template bool confirm(const RatioCertificate<QuadExt>&, const FamilySpec&, const QuadExt&,
                             std::size_t, long);
extern template GuessResult<Rational> guess(const FamilySpec&, const Rational&, const GuessConfig&);
extern template GuessResult<QuadExt> guess(const FamilySpec&, const QuadExt&, const GuessConfig&);

}  // namespace hgsearch
