#include "hgsearch/guesser.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgsearch/roots.hpp"

namespace hgsearch {

void GuessConfig::validate() const {
  if (samples() < min_pairs()) {
    throw std::invalid_argument("sample_count must be at least 2*degree_bound + 3");
  }
}

Certificate widen(const RatioCertificate<Rational>& c) {
  return Certificate{widen(c.p), widen(c.q), c.start_index};
}

std::string to_string(const Certificate& c) {
  return "(" + to_string(c.p, "n") + ")/(" + to_string(c.q, "n") + ")";
}

std::string to_string(GuessStatus s) {
  switch (s) {
    case GuessStatus::Hypergeometric: return "hypergeometric";
    case GuessStatus::NotHypergeometric: return "not-hypergeometric";
    case GuessStatus::Degenerate: return "degenerate";
    case GuessStatus::AllZero: return "all-zero";
  }
  return "unknown";
}

namespace {

template <class T>
std::optional<RatioCertificate<T>> certificate_from(const std::vector<T>& v, std::size_t d,
                                                    long start, std::size_t window_end) {
  BasicPoly<T> p(std::vector<T>(v.begin(), v.begin() + static_cast<long>(d + 1)));
  BasicPoly<T> q(std::vector<T>(v.begin() + static_cast<long>(d + 1), v.end()));
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  BasicPoly<T> g = gcd(p, q);
  // The cancelled factor satisfies its equations trivially; the reduced
  // ratio only holds past its integer roots.
  for (long i = start; i < static_cast<long>(window_end); ++i) {
    if (hgsearch::is_zero(g.eval(T(i)))) start = i + 1;
  }
  p = exact_divide(p, g);
  q = exact_divide(q, g);
  T inv = T(1) / q.leading();
  p *= inv;
  q = q.monic();
  if (p.degree() != q.degree()) return std::nullopt;
  return RatioCertificate<T>{std::move(p), std::move(q), start};
}

template <class T>
struct Window {
  std::size_t usable = 0;
  long start = 0;
  std::vector<std::vector<T>> basis;
};

template <class T>
Window<T> solve_window(std::span<const SeriesValue<T>> values, std::size_t equations, std::size_t d) {
  Window<T> w;
  for (std::size_t i = 0; i <= equations; ++i) {
    if (!values[i]) w.start = static_cast<long>(i) + 1;
  }
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < equations; ++i) {
    if (values[i] && values[i + 1]) rows.push_back(i);
  }
  w.usable = rows.size();
  const std::size_t cols = 2 * d + 2;
  DenseMatrix<T> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t i = rows[r];
    T power(1);
    const T step(static_cast<long>(i));
    for (std::size_t j = 0; j <= d; ++j) {
      m(r, j) = power * *values[i];
      m(r, d + 1 + j) = -(power * *values[i + 1]);
      power = power * step;
    }
  }
  w.basis = nullspace(std::move(m));
  return w;
}

}  // namespace

template <class T>
FitResult<T> fit_ratio(std::span<const SeriesValue<T>> values, const GuessConfig& config) {
  config.validate();
  const std::size_t d = config.degree_bound;
  std::size_t equations = config.samples();
  if (values.size() < equations + 1) {
    throw std::invalid_argument("fit_ratio: need samples() + 1 values");
  }
  FitResult<T> out;
  Window<T> w = solve_window(values, equations, d);
  if (w.usable < config.min_pairs()) {
    out.status = FitStatus::Degenerate;
    return out;
  }
  if (w.basis.size() > 1 && values.size() >= equations + d + 3 + 1) {
    equations += d + 3;
    w = solve_window(values, equations, d);
  }
  out.window_end = equations;
  out.nullspace_dim = w.basis.size();
  for (const auto& v : w.basis) {
    if (auto cert = certificate_from(v, d, w.start, equations)) {
      if (std::find(out.certificates.begin(), out.certificates.end(), *cert) == out.certificates.end()) {
        out.certificates.push_back(std::move(*cert));
      }
    }
  }
  out.status = out.certificates.empty() ? FitStatus::NoFit : FitStatus::Found;
  return out;
}

template <class T>
bool confirm(const RatioCertificate<T>& cert, const FamilySpec& family, const T& x,
             std::size_t extra, long from) {
  std::size_t checked = 0;
  SeriesValue<T> cur = eval_terminating(family, from, x);
  for (long n = from; n < from + 4 * static_cast<long>(extra) && checked < extra; ++n) {
    SeriesValue<T> next = eval_terminating(family, n + 1, x);
    if (cur && next) {
      const T point(static_cast<long>(n));
      if (*next * cert.q.eval(point) != *cur * cert.p.eval(point)) return false;
      ++checked;
    }
    cur = std::move(next);
  }
  return checked >= extra;
}

template <class T>
GuessResult<T> guess(const FamilySpec& family, const T& x, const GuessConfig& config) {
  config.validate();
  GuessResult<T> out;
  const std::size_t count = config.samples() + config.degree_bound + 3 + 1;
  out.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.values.push_back(eval_terminating(family, static_cast<long>(n), x));
  }
  bool any_defined = false, all_zero = true;
  for (std::size_t n = 1; n < count; ++n) {
    if (!out.values[n]) continue;
    any_defined = true;
    if (!hgsearch::is_zero(*out.values[n])) all_zero = false;
  }
  if (any_defined && all_zero) {
    out.status = GuessStatus::AllZero;
    return out;
  }
  FitResult<T> fit = fit_ratio(std::span<const SeriesValue<T>>(out.values), config);
  if (fit.status == FitStatus::Degenerate) {
    out.status = GuessStatus::Degenerate;
    return out;
  }
  for (const auto& cert : fit.certificates) {
    if (confirm(cert, family, x, config.confirm_extra, static_cast<long>(fit.window_end))) {
      out.status = GuessStatus::Hypergeometric;
      out.certificate = cert;
      return out;
    }
  }
  out.status = GuessStatus::NotHypergeometric;
  return out;
}

template FitResult<Rational> fit_ratio(std::span<const SeriesValue<Rational>>, const GuessConfig&);
template FitResult<QuadExt> fit_ratio(std::span<const SeriesValue<QuadExt>>, const GuessConfig&);
template bool confirm(const RatioCertificate<Rational>&, const FamilySpec&, const Rational&,
                      std::size_t, long);
template bool confirm(const RatioCertificate<QuadExt>&, const FamilySpec&, const QuadExt&,
                      std::size_t, long);
template GuessResult<Rational> guess(const FamilySpec&, const Rational&, const GuessConfig&);
template GuessResult<QuadExt> guess(const FamilySpec&, const QuadExt&, const GuessConfig&);

namespace {

struct LinearSplit {
  Rational lead;
  std::vector<std::pair<Rational, int>> roots;  // root, multiplicity
  Poly residual;                                // monic, no rational roots
};

LinearSplit split_linear(const Poly& f) {
  LinearSplit s;
  s.lead = f.leading();
  Poly rest = f.monic();
  std::vector<Rational> roots;
  Poly ignored;
  if (!rational_roots(rest, roots, ignored)) {
    s.residual = rest;
    return s;
  }
  for (const Rational& r : roots) {
    int mult = 0;
    while (true) {
      auto [quo, rem] = divmod(rest, Poly::linear_root(r));
      if (!rem.is_zero()) break;
      rest = quo;
      ++mult;
    }
    s.roots.emplace_back(r, mult);
  }
  s.residual = rest;
  return s;
}

std::string linear_factor(const Rational& root) {
  if (sgn(root) == 0) return "n";
  Rational shift = -root;
  return "(n" + std::string(sgn(shift) > 0 ? "+" : "-") + to_string(Rational(abs(shift))) + ")";
}

std::string product(const LinearSplit& s) {
  std::string out;
  auto append = [&](const std::string& f) { out += (out.empty() ? "" : "*") + f; };
  for (const auto& [root, mult] : s.roots) {
    std::string f = linear_factor(root);
    if (mult > 1) f += "^" + std::to_string(mult);
    append(f);
  }
  if (s.residual.degree() > 0) append("(" + to_string(s.residual, "n") + ")");
  return out.empty() ? "1" : out;
}

}  // namespace

std::string closed_form_ratio(const RatioCertificate<Rational>& cert) {
  LinearSplit num = split_linear(cert.p);
  LinearSplit den = split_linear(cert.q);
  Rational c = num.lead / den.lead;
  std::string top = product(num);
  std::string bottom = product(den);
  std::string out = "u(n+1)/u(n) = ";
  if (c != 1) out += to_string(c) + "*";
  out += top;
  if (bottom != "1") out += "/(" + bottom + ")";
  return out;
}

}  // namespace hgsearch
