#pragma once

// JSON encodings. Rationals are always strings ("num/den" or "num").
//
//   PLMap:      {"interval": ["lo","hi"], "points": [["x","y"], ...]}
//               connecting maps between different intervals add "range".
//   GroupSpec:  {"slopes": [2,3], "interval": ["0","1"]}
//   Character:  {"q": ["q1","q2","q3","q4"], "s": "s", "t": "t"}
//   Lattice:    [[v1,v2,v3,v4], ...] with integers or integer strings

#include "steinlab/classify.hpp"

#include <json.hpp>

namespace steinlab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const LogCoord& x);
Json to_json(const AbVector& v);
Json to_json(const IntervalSet& s);
Json to_json(const PLMap& f);
Json to_json(const GroupSpec& spec);
Json to_json(const Character& chi);
Json to_json(const LatticeSubgroup& lattice);
Json to_json(const FinitenessReport& report);
Json to_json(const HnnCertificate& cert);

// All parsers throw ParseError on malformed structure and DomainError when
// well-formed data violates a domain invariant.
Rational rational_from_json(const Json& j);
PLMap plmap_from_json(const Json& j);
GroupSpec group_spec_from_json(const Json& j);
Character character_from_json(const Json& j);
LatticeSubgroup lattice_from_json(const Json& j);

/// Parses text, converting JSON syntax errors into ParseError.
Json parse(const std::string& text);

}  // namespace steinlab::io
