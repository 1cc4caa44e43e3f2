#include "hgsearch/serialize.hpp"

#include "hgsearch/errors.hpp"

namespace hgsearch {

namespace {

Json encode_slot(const LinearSlot& s) { return Json::array({encode(s.slope), encode(s.intercept)}); }

LinearSlot decode_slot(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("slot must be [slope, intercept]");
  return LinearSlot{decode_rational(j[0]), decode_rational(j[1])};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const QuadExt& q) {
  return Json{{"a", to_string(q.a())}, {"b", to_string(q.b())}, {"radicand", q.radicand()}};
}

Json encode(const Poly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(encode(c));
  return out;
}

Json encode(const QPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) {
    out.push_back(c.is_rational() ? encode(c.a()) : encode(c));
  }
  return out;
}

Json encode(const FamilySpec& f) {
  return Json{{"upper1", encode_slot(f.upper1)}, {"upper2", encode_slot(f.upper2)}, {"lower", encode_slot(f.lower)}};
}

Json encode(const CandidateX& x) {
  struct Visitor {
    Json operator()(const RatX& r) const { return Json{{"kind", "rat"}, {"value", encode(r.value)}}; }
    Json operator()(const QuadX& q) const {
      return Json{{"kind", "quad"}, {"value", encode(q.value)}, {"minimal_poly", encode(q.minimal_poly)}};
    }
    Json operator()(const AllX&) const { return Json{{"kind", "allx"}}; }
    Json operator()(const UnresolvedFactor& u) const { return Json{{"kind", "unresolved"}, {"poly", encode(u.poly)}}; }
  };
  return std::visit(Visitor{}, x);
}

Json encode(const Certificate& c) {
  return Json{{"p", encode(c.p)}, {"q", encode(c.q)}, {"start_index", c.start_index}};
}

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string: " + j.dump());
}

QuadExt decode_quad(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return QuadExt(decode_rational(j));
  Rational a = decode_rational(field(j, "a"));
  Rational b = decode_rational(field(j, "b"));
  const Json& r = field(j, "radicand");
  if (!r.is_number_integer()) throw ParseError("radicand must be an integer");
  return QuadExt(a, b, r.get<long>());
}

Poly decode_poly(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(decode_rational(v));
  return Poly(std::move(c));
}

QPoly decode_qpoly(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array");
  std::vector<QuadExt> c;
  for (const auto& v : j) c.push_back(decode_quad(v));
  return QPoly(std::move(c));
}

FamilySpec decode_family(const Json& j) {
  return FamilySpec{decode_slot(field(j, "upper1")), decode_slot(field(j, "upper2")), decode_slot(field(j, "lower"))};
}

CandidateX decode_candidate(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "rat") return RatX{decode_rational(field(j, "value"))};
  if (kind == "quad") {
    QuadExt v = decode_quad(field(j, "value"));
    return QuadX{v, minimal_polynomial(v)};
  }
  if (kind == "allx") return AllX{};
  if (kind == "unresolved") return UnresolvedFactor{decode_poly(field(j, "poly"))};
  throw ParseError("unknown candidate kind '" + kind + "'");
}

Certificate decode_certificate(const Json& j) {
  return Certificate{decode_qpoly(field(j, "p")), decode_qpoly(field(j, "q")),
                     field(j, "start_index").get<long>()};
}

}  // namespace hgsearch
