#pragma once

#include <json.hpp>

#include "hgsearch/candidate.hpp"
#include "hgsearch/guesser.hpp"
#include "hgsearch/hyperseries.hpp"
#include "hgsearch/poly.hpp"
#include "hgsearch/quadext.hpp"

namespace hgsearch {

using Json = nlohmann::ordered_json;

// Rational -> "p/q" or "p".
Json encode(const Rational& q);
// QuadExt -> {"a": "...", "b": "...", "radicand": r}.
Json encode(const QuadExt& q);
// Poly -> array of rational strings, lowest power first.
Json encode(const Poly& f);
// QPoly -> array; rational coefficients as strings, others as QuadExt objects.
Json encode(const QPoly& f);
// {"upper1": [slope, intercept], "upper2": [...], "lower": [...]}.
Json encode(const FamilySpec& f);
// {"kind": "rat"|"quad"|"allx"|"unresolved", ...}.
Json encode(const CandidateX& x);
// {"p": [...], "q": [...], "start_index": int}.
Json encode(const Certificate& c);

Rational decode_rational(const Json& j);
QuadExt decode_quad(const Json& j);
Poly decode_poly(const Json& j);
QPoly decode_qpoly(const Json& j);
FamilySpec decode_family(const Json& j);
CandidateX decode_candidate(const Json& j);
Certificate decode_certificate(const Json& j);

}  // namespace hgsearch
