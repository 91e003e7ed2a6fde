#include "steinlab/io.hpp"

namespace steinlab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    const Rational q = Rational::parse(j.get<std::string>());
    if (!q.is_integer()) throw ParseError("expected an integer, got \"" + q.str() + "\"");
    return q.num();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

std::pair<Rational, Rational> interval_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("interval must be a pair [\"lo\",\"hi\"]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const LogCoord& x) { return x.str(); }

Json to_json(const AbVector& v) { return Json::array({v.m[0], v.m[1], v.m[2], v.m[3]}); }

Json to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& [a, b] : s.intervals()) out.push_back(Json::array({a.str(), b.str()}));
  return out;
}

Json to_json(const PLMap& f) {
  Json out;
  out["interval"] = Json::array({f.lo().str(), f.hi().str()});
  if (!f.is_endomorphism()) out["range"] = Json::array({f.range_lo().str(), f.range_hi().str()});
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back(Json::array({p.x.str(), p.y.str()}));
  out["points"] = std::move(pts);
  return out;
}

Json to_json(const GroupSpec& spec) {
  Json out;
  out["slopes"] = spec.slopes();
  out["interval"] = Json::array({spec.lo().str(), spec.hi().str()});
  return out;
}

Json to_json(const Character& chi) {
  Json out;
  out["q"] = Json::array({chi.q[0].str(), chi.q[1].str(), chi.q[2].str(), chi.q[3].str()});
  out["s"] = chi.s.str();
  out["t"] = chi.t.str();
  return out;
}

Json to_json(const LatticeSubgroup& lattice) {
  Json out = Json::array();
  for (const auto& g : lattice.generators) {
    Json row = Json::array();
    for (const auto& e : g) {
      if (e.fits_slong_p()) {
        row.push_back(e.get_si());
      } else {
        row.push_back(e.get_str());
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const FinitenessReport& report) {
  Json out;
  out["fg"] = report.fg;
  out["fp"] = report.fp;
  out["f_infinity"] = report.f_infinity;
  if (report.obstruction) {
    out["obstruction"] = Json::array({report.obstruction->a.str(), report.obstruction->b.str()});
  } else {
    out["obstruction"] = nullptr;
  }
  return out;
}

Json to_json(const HnnCertificate& cert) {
  Json out;
  out["t"] = to_json(cert.t);
  out["chi_zero"] = cert.chi_zero;
  out["lambda_negative"] = cert.lambda_negative;
  out["base_mapped_in"] = cert.base_mapped_in;
  out["intersection_trivial"] = cert.intersection_trivial;
  out["proper"] = cert.proper;
  out["samples"] = cert.samples;
  out["valid"] = cert.all();
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

PLMap plmap_from_json(const Json& j) {
  const auto [lo, hi] = interval_from_json(field(j, "interval"));
  const Json& pts_json = field(j, "points");
  if (!pts_json.is_array()) throw ParseError("\"points\" must be an array");
  std::vector<Point> pts;
  for (const Json& p : pts_json) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each point must be a pair [\"x\",\"y\"]");
    pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  if (pts.empty() || pts.front().x != lo || pts.back().x != hi) {
    throw DomainError("points do not span the declared interval [" + lo.str() + "," + hi.str() + "]");
  }
  if (auto it = j.find("range"); it != j.end()) {
    const auto [rlo, rhi] = interval_from_json(*it);
    if (pts.front().y != rlo || pts.back().y != rhi) {
      throw DomainError("points do not span the declared range");
    }
    return PLMap::bijection(std::move(pts));
  }
  return PLMap::canonicalize(std::move(pts));
}

GroupSpec group_spec_from_json(const Json& j) {
  const Json& s = field(j, "slopes");
  if (!s.is_array()) throw ParseError("\"slopes\" must be an array of integers");
  std::vector<long> slopes;
  for (const Json& n : s) {
    const BigInt v = integer_from_json(n);
    if (!v.fits_slong_p()) throw DomainError("slope generator too large");
    slopes.push_back(v.get_si());
  }
  const auto [lo, hi] = interval_from_json(field(j, "interval"));
  return GroupSpec(std::move(slopes), lo, hi);
}

Character character_from_json(const Json& j) {
  const Json& q = field(j, "q");
  if (!q.is_array() || q.size() != 4) throw ParseError("\"q\" must hold four rationals");
  Character chi;
  for (std::size_t i = 0; i < 4; ++i) chi.q[i] = rational_from_json(q[i]);
  chi.s = j.contains("s") ? rational_from_json(j["s"]) : Rational(0);
  chi.t = j.contains("t") ? rational_from_json(j["t"]) : Rational(0);
  return chi;
}

LatticeSubgroup lattice_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("lattice generators must be an array of 4-vectors");
  LatticeSubgroup out;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != 4) throw ParseError("each generator must have 4 entries");
    out.generators.push_back({integer_from_json(row[0]), integer_from_json(row[1]),
                              integer_from_json(row[2]), integer_from_json(row[3])});
  }
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace steinlab::io
