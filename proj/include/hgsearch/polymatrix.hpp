#pragma once

#include <cstddef>

#include "hgsearch/matrix.hpp"

namespace hgsearch {

/// Sum over rows of the largest entry degree: a valid determinant degree bound.
std::size_t row_degree_bound(const PolyMatrix& m);

/// Exact determinant of a square polynomial matrix by evaluation at
/// degree_bound + 1 points of evaluation_points() and interpolation. The
/// interpolant is checked at one further point; a mismatch throws
/// DegreeBoundError. Evaluation points are processed in parallel.
Poly polymat_det(const PolyMatrix& m, std::size_t degree_bound);

/// Single-threaded reference for polymat_det.
Poly polymat_det_serial(const PolyMatrix& m, std::size_t degree_bound);

/// Evaluates every entry at an integer point.
QMatrix evaluate_at(const PolyMatrix& m, long point);

}  // namespace hgsearch
