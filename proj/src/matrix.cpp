#include "hgsearch/matrix.hpp"

namespace hgsearch {

Integer bareiss_determinant(std::vector<Integer> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[k * n + j]);
      sign = -sign;
    }
    const Integer& pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& target = m[i * n + j];
        target = target * pivot - m[i * n + k] * m[k * n + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Integer det = m[n * n - 1];
  return sign < 0 ? Integer(-det) : det;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  std::vector<Integer> ints(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = m(r, c);
      ints[r * n + c] = v.get_num() * (lcm / v.get_den());
    }
    scale *= lcm;
  }
  Rational det(bareiss_determinant(std::move(ints), n), scale);
  det.canonicalize();
  return det;
}

std::vector<long> evaluation_points(std::size_t count) {
  std::vector<long> pts;
  pts.reserve(count);
  for (long k = 0; pts.size() < count; ++k) {
    if (k == 0) {
      pts.push_back(0);
      continue;
    }
    pts.push_back(k);
    if (pts.size() < count) pts.push_back(-k);
  }
  return pts;
}

Poly interpolate(std::span<const long> points, std::span<const Rational> values) {
  if (points.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = points.size();
  if (n == 0) return {};
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      long diff = points[i] - points[i - level];
      if (diff == 0) throw std::invalid_argument("interpolate: repeated point");
      dd[i] -= dd[i - 1];
      dd[i] /= diff;
    }
  }
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      if (points[k] != 0) next[j] -= acc[j] * points[k];
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  return Poly(std::move(acc));
}

}  // namespace hgsearch
