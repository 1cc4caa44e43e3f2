#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgsearch/candidate.hpp"
#include "hgsearch/hyperseries.hpp"

namespace hgsearch {

/// A family together with a point argument (Rat or Quad candidate).
struct FamilyX {
  FamilySpec family;
  CandidateX x;

  QuadExt value() const { return candidate_value(x); }
  friend bool operator==(const FamilyX&, const FamilyX&) = default;
};

enum class TransformTag { Pfaff1, Pfaff2, Euler, SwapUpper, Reverse1, Reverse2, Quad };

std::string to_string(TransformTag tag);

/// base^{exponent(n)} * (top(n))_{length(n)} / (bottom(n))_{length(n)}; the
/// original series equals prefactor * image series. length is zero except
/// for reversal.
struct Prefactor {
  QuadExt base{1};
  LinearSlot exponent{};
  LinearSlot top{}, bottom{}, length{};

  /// Value at n; empty when an exponent or length is not an integer.
  std::optional<QuadExt> at(long n) const;
};

struct TransformImage {
  FamilyX fx;
  TransformTag tag = TransformTag::SwapUpper;
  /// Index into quadratic_catalog() for Quad images, -1 otherwise.
  int quad_index = -1;
  Prefactor prefactor;
};

/// Version string of the transformation list, stored with catalogs.
inline constexpr std::string_view kTransformListVersion =
    "euler-pfaff-swap-reverse+quad[half-lower,quarter-argument]/2";

/// F(A,B;C;x) = (1-x)^{-A} F(A, C-B; C; x/(x-1)) keeping upper slot
/// `which_upper` (1 or 2). Empty unless that slot terminates and C(n) is not
/// a non-positive integer above it (the kept-slot condition). Throws
/// PoleError at x = 1.
std::optional<TransformImage> pfaff(const FamilyX& fx, int which_upper);

/// F(A,B;C;x) = (1-x)^{C-A-B} F(C-A, C-B; C; x). Applicable when one upper
/// slot and the image of the other both meet the kept-slot condition.
std::optional<TransformImage> euler(const FamilyX& fx);

TransformImage swap_upper(const FamilyX& fx);

/// Summation in reverse order, keeping terminating slot A = -N:
///   F(A,B;C;x) = (B)_N/(C)_N (-x)^N F(A, 1-C+A; 1-B+A; 1/x).
/// Empty unless A and both lower slots meet the kept-slot condition.
std::optional<TransformImage> reverse(const FamilyX& fx, int which_upper);

struct QuadraticTransform {
  std::string name;
  std::vector<TransformImage> (*apply)(const FamilyX&);
};

/// Configured quadratic transformations, both directions of each:
///   half-lower:       F(A, B; 2B; x) = (1-x/2)^{-A} F(A/2, A/2+1/2; B+1/2; (x/(2-x))^2)
///   quarter-argument: F(a, b; a+b+1/2; 4x(1-x)) = F(2a, 2b; a+b+1/2; x)
const std::vector<QuadraticTransform>& quadratic_catalog();

/// Images under every applicable configured quadratic transformation.
std::vector<TransformImage> quad_transforms(const FamilyX& fx);

/// All one-step images under pfaff and reverse (both slots), euler,
/// swap_upper and the quadratic list.
std::vector<TransformImage> neighbours(const FamilyX& fx);

struct OrbitBounds {
  std::size_t max_nodes = 200;
  std::size_t max_depth = 6;
};

/// Breadth-first closure, starting element first.
std::vector<FamilyX> orbit(const FamilyX& fx, const OrbitBounds& bounds = {});

/// Deterministic serialization used for keys.
std::string serialize_key(const FamilyX& fx);

/// Lexicographically least serialize_key over the bounded orbit.
std::string canonical_key(const FamilyX& fx, const OrbitBounds& bounds = {});

enum class Classification { None, Gauss, Kummer, GaussHalf, Theorem1, Conjecture1, Strange };

std::string to_string(Classification c);
std::optional<Classification> parse_classification(std::string_view text);
bool is_chaff_class(Classification c);

/// Gauss if some orbit element has x = 1; else Kummer if one is
/// F(A, B; 1+A-B; -1) up to swap; else GaussHalf if one is at x = 1/2 with
/// C = (A+B+1)/2 or A+B = 1; else None.
Classification is_chaff(const FamilyX& fx, const OrbitBounds& bounds = {});

/// Chaff test over an already computed orbit.
Classification chaff_in_orbit(const std::vector<FamilyX>& elements);

}  // namespace hgsearch
