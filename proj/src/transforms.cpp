#include "hgsearch/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "hgsearch/errors.hpp"

namespace hgsearch {

namespace {

const LinearSlot kOne{Rational(0), Rational(1)};
const LinearSlot kHalf{Rational(0), Rational(1, 2)};

LinearSlot scale(const LinearSlot& s, const Rational& f) {
  return {Rational(s.slope * f), Rational(s.intercept * f)};
}

bool is_one(const QuadExt& v) { return v == QuadExt(1); }

// A transformation that keeps the terminating slot A is an identity of
// polynomials only while (C)_k != 0 for k <= -A(n), for every n >= 0.
bool sound(const LinearSlot& lower, const LinearSlot& kept) {
  if (!kept.terminates()) return false;
  auto bad_at = [&](long n) {
    Rational c = lower.at(n);
    return is_nonpositive_integer(c) && c > kept.at(n);
  };
  for (long n = 0; n < 64; ++n) {
    if (bad_at(n)) return false;
  }
  if (lower.slope > kept.slope && sgn(lower.slope) == 0) return !is_nonpositive_integer(lower.intercept);
  if (lower.slope > kept.slope && sgn(lower.slope) < 0) {
    const long period = lower.slope.get_den().get_si();
    for (long n = 0; n < period; ++n) {
      if (is_integer(lower.at(n))) return false;
    }
  }
  return true;
}

bool sound_pair(const LinearSlot& lower, const LinearSlot& a, const LinearSlot& b) {
  return sound(lower, a) && sound(lower, b);
}

FamilyX with(const FamilySpec& f, const QuadExt& x) { return FamilyX{f, make_candidate(x)}; }

// F(A, B; 2B; x) -> (1 - x/2)^{-A} F(A/2, A/2+1/2; B+1/2; (x/(2-x))^2), A terminating.
std::vector<TransformImage> half_lower_forward(const FamilyX& fx) {
  std::vector<TransformImage> out;
  const FamilySpec& f = fx.family;
  const QuadExt x = fx.value();
  if (x == QuadExt(2)) return out;
  for (int k = 0; k < 2; ++k) {
    const LinearSlot& a = k == 0 ? f.upper1 : f.upper2;
    const LinearSlot& b = k == 0 ? f.upper2 : f.upper1;
    if (!a.terminates() || !(f.lower == scale(b, Rational(2)))) continue;
    FamilySpec img{scale(a, Rational(1, 2)), scale(a, Rational(1, 2)) + kHalf, b + kHalf};
    if (!img.has_termination_witness()) continue;
    const LinearSlot& kept = img.upper1.terminates() ? img.upper1 : img.upper2;
    if (!sound(f.lower, a) || !sound(img.lower, kept)) continue;
    QuadExt r = x / (QuadExt(2) - x);
    TransformImage t{with(img, r * r), TransformTag::Quad, 0,
                     Prefactor{QuadExt(1) - x / QuadExt(2), scale(a, Rational(-1))}};
    out.push_back(std::move(t));
  }
  return out;
}

// F(P, P+1/2; C; y) -> F(2P, C-1/2; 2C-1; x) with y = (x/(2-x))^2, i.e.
// x = 2s/(1+s), s^2 = y.
std::vector<TransformImage> half_lower_reverse(const FamilyX& fx) {
  std::vector<TransformImage> out;
  const FamilySpec& f = fx.family;
  const QuadExt y = fx.value();
  for (int k = 0; k < 2; ++k) {
    const LinearSlot& p = k == 0 ? f.upper1 : f.upper2;
    const LinearSlot& other = k == 0 ? f.upper2 : f.upper1;
    if (!(other == p + kHalf)) continue;
    FamilySpec img{scale(p, Rational(2)), f.lower - kHalf, scale(f.lower, Rational(2)) - kOne};
    if (!img.upper1.terminates()) continue;
    const LinearSlot& kept = p.terminates() ? p : other;
    if (!sound(img.lower, img.upper1) || !sound(f.lower, kept)) continue;
    std::optional<QuadExt> s = try_sqrt(y);
    if (!s) continue;
    for (const QuadExt& root : {*s, -*s}) {
      QuadExt den = QuadExt(1) + root;
      if (den.is_zero()) continue;
      QuadExt x = QuadExt(2) * root / den;
      if (x.is_zero() || x == QuadExt(2)) continue;
      TransformImage t{with(img, x), TransformTag::Quad, 0,
                       Prefactor{QuadExt(1) - x / QuadExt(2), scale(p, Rational(2))}};
      if (std::none_of(out.begin(), out.end(), [&](const TransformImage& o) { return o.fx == t.fx; })) {
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

// F(a, b; a+b+1/2; z) -> F(2a, 2b; a+b+1/2; x) with 4x(1-x) = z.
std::vector<TransformImage> quarter_forward(const FamilyX& fx) {
  std::vector<TransformImage> out;
  const FamilySpec& f = fx.family;
  if (!(f.lower == f.upper1 + f.upper2 + kHalf)) return out;
  FamilySpec img{scale(f.upper1, Rational(2)), scale(f.upper2, Rational(2)), f.lower};
  if (!sound_pair(f.lower, f.upper1, img.upper1) && !sound_pair(f.lower, f.upper2, img.upper2)) return out;
  std::optional<QuadExt> s = try_sqrt(QuadExt(1) - fx.value());
  if (!s) return out;
  for (const QuadExt& root : {*s, -*s}) {
    QuadExt x = (QuadExt(1) + root) / QuadExt(2);
    if (x.is_zero()) continue;
    TransformImage t{with(img, x), TransformTag::Quad, 1, Prefactor{}};
    if (std::none_of(out.begin(), out.end(), [&](const TransformImage& o) { return o.fx == t.fx; })) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// F(2a, 2b; a+b+1/2; x) -> F(a, b; a+b+1/2; 4x(1-x)).
std::vector<TransformImage> quarter_reverse(const FamilyX& fx) {
  std::vector<TransformImage> out;
  const FamilySpec& f = fx.family;
  if (!(scale(f.lower, Rational(2)) == f.upper1 + f.upper2 + kOne)) return out;
  FamilySpec img{scale(f.upper1, Rational(1, 2)), scale(f.upper2, Rational(1, 2)), f.lower};
  if (!sound_pair(f.lower, f.upper1, img.upper1) && !sound_pair(f.lower, f.upper2, img.upper2)) return out;
  const QuadExt x = fx.value();
  QuadExt z = QuadExt(4) * x * (QuadExt(1) - x);
  if (z.is_zero()) return out;
  out.push_back(TransformImage{with(img, z), TransformTag::Quad, 1, Prefactor{}});
  return out;
}

std::vector<TransformImage> half_lower(const FamilyX& fx) {
  auto a = half_lower_forward(fx);
  auto b = half_lower_reverse(fx);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<TransformImage> quarter_argument(const FamilyX& fx) {
  auto a = quarter_forward(fx);
  auto b = quarter_reverse(fx);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string slot_key(const LinearSlot& s) { return to_string(s.slope) + "," + to_string(s.intercept); }

std::string value_key(const CandidateX& x) {
  if (const auto* r = std::get_if<RatX>(&x)) return to_string(r->value);
  const QuadExt& q = std::get<QuadX>(x).value;
  return to_string(q.a()) + "," + to_string(q.b()) + ",r" + std::to_string(q.radicand());
}

}  // namespace

std::string to_string(TransformTag tag) {
  switch (tag) {
    case TransformTag::Pfaff1: return "pfaff1";
    case TransformTag::Pfaff2: return "pfaff2";
    case TransformTag::Euler: return "euler";
    case TransformTag::SwapUpper: return "swap";
    case TransformTag::Reverse1: return "reverse1";
    case TransformTag::Reverse2: return "reverse2";
    case TransformTag::Quad: return "quad";
  }
  return "?";
}

std::optional<TransformImage> pfaff(const FamilyX& fx, int which_upper) {
  if (which_upper != 1 && which_upper != 2) throw std::invalid_argument("pfaff: which_upper must be 1 or 2");
  const QuadExt x = fx.value();
  if (is_one(x)) throw PoleError("pfaff: x = 1 is a pole of x/(x-1)");
  const FamilySpec& f = fx.family;
  const LinearSlot& kept = which_upper == 1 ? f.upper1 : f.upper2;
  if (!sound(f.lower, kept)) return std::nullopt;
  FamilySpec img = f;
  if (which_upper == 1) {
    img.upper2 = f.lower - f.upper2;
  } else {
    img.upper1 = f.lower - f.upper1;
  }
  QuadExt xp = x / (x - QuadExt(1));
  return TransformImage{with(img, xp), which_upper == 1 ? TransformTag::Pfaff1 : TransformTag::Pfaff2, -1,
                        Prefactor{QuadExt(1) - x, scale(kept, Rational(-1))}};
}

std::optional<TransformImage> euler(const FamilyX& fx) {
  const FamilySpec& f = fx.family;
  FamilySpec img{f.lower - f.upper1, f.lower - f.upper2, f.lower};
  bool ok = sound_pair(f.lower, f.upper1, img.upper2) || sound_pair(f.lower, f.upper2, img.upper1);
  if (!ok) return std::nullopt;
  return TransformImage{FamilyX{img, fx.x}, TransformTag::Euler, -1,
                        Prefactor{QuadExt(1) - fx.value(), f.lower - f.upper1 - f.upper2}};
}

TransformImage swap_upper(const FamilyX& fx) {
  FamilySpec img{fx.family.upper2, fx.family.upper1, fx.family.lower};
  return TransformImage{FamilyX{img, fx.x}, TransformTag::SwapUpper, -1, Prefactor{}};
}

std::optional<TransformImage> reverse(const FamilyX& fx, int which_upper) {
  if (which_upper != 1 && which_upper != 2) throw std::invalid_argument("reverse: which_upper must be 1 or 2");
  const FamilySpec& f = fx.family;
  const LinearSlot& a = which_upper == 1 ? f.upper1 : f.upper2;
  const LinearSlot& b = which_upper == 1 ? f.upper2 : f.upper1;
  const LinearSlot c2 = kOne - f.lower + a;
  const LinearSlot lower = kOne - b + a;
  if (!sound(f.lower, a) || !sound(lower, a)) return std::nullopt;
  FamilySpec img = which_upper == 1 ? FamilySpec{a, c2, lower} : FamilySpec{c2, a, lower};
  const QuadExt x = fx.value();
  Prefactor pre{-x, scale(a, Rational(-1)), b, f.lower, scale(a, Rational(-1))};
  return TransformImage{with(img, x.inverse()), which_upper == 1 ? TransformTag::Reverse1 : TransformTag::Reverse2,
                        -1, pre};
}

std::optional<QuadExt> Prefactor::at(long n) const {
  const Rational e = exponent.at(n), len = length.at(n);
  if (!is_integer(e) || !is_integer(len) || sgn(len) < 0) return std::nullopt;
  long k = e.get_num().get_si();
  QuadExt b = k < 0 ? base.inverse() : base;
  QuadExt v(1);
  for (long i = 0; i < std::labs(k); ++i) v *= b;
  const long m = len.get_num().get_si();
  if (m > 0) v *= QuadExt(pochhammer(top.at(n), m) / pochhammer(bottom.at(n), m));
  return v;
}

const std::vector<QuadraticTransform>& quadratic_catalog() {
  static const std::vector<QuadraticTransform> catalog{
      {"half-lower", &half_lower},
      {"quarter-argument", &quarter_argument},
  };
  return catalog;
}

std::vector<TransformImage> quad_transforms(const FamilyX& fx) {
  std::vector<TransformImage> out;
  const auto& catalog = quadratic_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (auto& img : catalog[i].apply(fx)) {
      img.quad_index = static_cast<int>(i);
      out.push_back(std::move(img));
    }
  }
  return out;
}

std::vector<TransformImage> neighbours(const FamilyX& fx) {
  std::vector<TransformImage> out;
  if (!is_one(fx.value())) {
    for (int k : {1, 2}) {
      if (auto img = pfaff(fx, k)) out.push_back(std::move(*img));
    }
  }
  if (auto img = euler(fx)) out.push_back(std::move(*img));
  out.push_back(swap_upper(fx));
  for (int k : {1, 2}) {
    if (auto img = reverse(fx, k)) out.push_back(std::move(*img));
  }
  for (auto& img : quad_transforms(fx)) out.push_back(std::move(img));
  return out;
}

std::vector<FamilyX> orbit(const FamilyX& fx, const OrbitBounds& bounds) {
  std::vector<FamilyX> nodes{fx};
  std::set<std::string> seen{serialize_key(fx)};
  std::deque<std::pair<std::size_t, std::size_t>> queue{{0, 0}};
  while (!queue.empty() && nodes.size() < bounds.max_nodes) {
    auto [idx, depth] = queue.front();
    queue.pop_front();
    if (depth >= bounds.max_depth) continue;
    for (auto& img : neighbours(nodes[idx])) {
      if (nodes.size() >= bounds.max_nodes) break;
      if (!seen.insert(serialize_key(img.fx)).second) continue;
      nodes.push_back(std::move(img.fx));
      queue.emplace_back(nodes.size() - 1, depth + 1);
    }
  }
  return nodes;
}

std::string serialize_key(const FamilyX& fx) {
  return "[" + slot_key(fx.family.upper1) + ";" + slot_key(fx.family.upper2) + ";" +
         slot_key(fx.family.lower) + "]@" + value_key(fx.x);
}

std::string canonical_key(const FamilyX& fx, const OrbitBounds& bounds) {
  std::string best;
  for (const auto& e : orbit(fx, bounds)) {
    std::string k = serialize_key(e);
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::None: return "None";
    case Classification::Gauss: return "Gauss";
    case Classification::Kummer: return "Kummer";
    case Classification::GaussHalf: return "GaussHalf";
    case Classification::Theorem1: return "Theorem1";
    case Classification::Conjecture1: return "Conjecture1";
    case Classification::Strange: return "Strange";
  }
  return "None";
}

std::optional<Classification> parse_classification(std::string_view text) {
  for (auto c : {Classification::None, Classification::Gauss, Classification::Kummer,
                 Classification::GaussHalf, Classification::Theorem1, Classification::Conjecture1,
                 Classification::Strange}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

bool is_chaff_class(Classification c) {
  return c == Classification::Gauss || c == Classification::Kummer || c == Classification::GaussHalf;
}

Classification chaff_in_orbit(const std::vector<FamilyX>& elements) {
  auto at = [](const FamilyX& e, const Rational& v) { return e.value() == QuadExt(v); };
  for (const auto& e : elements) {
    if (at(e, Rational(1))) return Classification::Gauss;
  }
  for (const auto& e : elements) {
    const FamilySpec& f = e.family;
    if (at(e, Rational(-1)) &&
        (f.lower == kOne + f.upper1 - f.upper2 || f.lower == kOne + f.upper2 - f.upper1)) {
      return Classification::Kummer;
    }
  }
  for (const auto& e : elements) {
    const FamilySpec& f = e.family;
    if (at(e, Rational(1, 2)) &&
        (scale(f.lower, Rational(2)) == f.upper1 + f.upper2 + kOne || f.upper1 + f.upper2 == kOne)) {
      return Classification::GaussHalf;
    }
  }
  return Classification::None;
}

Classification is_chaff(const FamilyX& fx, const OrbitBounds& bounds) {
  return chaff_in_orbit(orbit(fx, bounds));
}

}  // namespace hgsearch
