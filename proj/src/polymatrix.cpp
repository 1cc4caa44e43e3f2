#include "hgsearch/polymatrix.hpp"

#include <algorithm>
#include <string>

#include "hgsearch/errors.hpp"

namespace hgsearch {

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("polymat_det: matrix not square");
}

Poly finish(const PolyMatrix& m, std::size_t degree_bound, const std::vector<long>& pts,
            const std::vector<Rational>& vals) {
  std::span<const long> fit_pts(pts.data(), degree_bound + 1);
  std::span<const Rational> fit_vals(vals.data(), degree_bound + 1);
  Poly det = interpolate(fit_pts, fit_vals);
  Rational check_point(pts.back());
  if (det.eval(check_point) != vals.back()) {
    throw DegreeBoundError("polymat_det: degree bound " + std::to_string(degree_bound) +
                           " is too small for a " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " matrix");
  }
  return det;
}

}  // namespace

std::size_t row_degree_bound(const PolyMatrix& m) {
  std::size_t bound = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    long row_max = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) row_max = std::max(row_max, m(r, c).degree());
    bound += static_cast<std::size_t>(row_max);
  }
  return bound;
}

QMatrix evaluate_at(const PolyMatrix& m, long point) {
  QMatrix out(m.rows(), m.cols());
  Rational x(point);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(x);
  }
  return out;
}

Poly polymat_det_serial(const PolyMatrix& m, std::size_t degree_bound) {
  require_square(m);
  if (m.rows() == 0) return Poly::constant(Rational(1));
  std::vector<long> pts = evaluation_points(degree_bound + 2);
  std::vector<Rational> vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = determinant(evaluate_at(m, pts[i]));
  return finish(m, degree_bound, pts, vals);
}

Poly polymat_det(const PolyMatrix& m, std::size_t degree_bound) {
  require_square(m);
  if (m.rows() == 0) return Poly::constant(Rational(1));
  std::vector<long> pts = evaluation_points(degree_bound + 2);
  std::vector<Rational> vals(pts.size());
  const long count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    auto idx = static_cast<std::size_t>(i);
    vals[idx] = determinant(evaluate_at(m, pts[idx]));
  }
  return finish(m, degree_bound, pts, vals);
}

}  // namespace hgsearch
