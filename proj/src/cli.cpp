#include "steinlab/cli.hpp"

#include "steinlab/builders.hpp"
#include "steinlab/io.hpp"
#include "steinlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace steinlab::cli {

namespace {

using io::Json;

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    buf << in.rdbuf();
  }
  return io::parse(buf.str());
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--") + flag + ": " + e.what());
  }
}

// Breakpoints in Z[1/6] and slopes in <2,3>, for maps between different intervals.
Json bijection_certificate(const PLMap& f, const Rational& from, const Rational& to) {
  const std::vector<long> s23{2, 3};
  bool breaks = true;
  for (const auto& p : f.points()) breaks = breaks && in_break_module(p.x, s23) && in_break_module(p.y, s23);
  bool slopes = true;
  for (const auto& s : f.slopes()) slopes = slopes && in_slope_group(s, s23).has_value();
  Json cert;
  cert["endpoints"] = f.lo() == Rational(0) && f.range_lo() == Rational(0) && f.hi() == from &&
                      f.range_hi() == to;
  cert["breaks_in_module"] = breaks;
  cert["slopes_in_group"] = slopes;
  return cert;
}

struct Options {
  std::vector<std::string> files;
  std::string spec_path;
  std::string x;
  long p = 0, q = 0, a = 0, b = 0;
  std::string r = "1/2";
  std::string cap;
  std::string shrink = "1/2";
  bool right = false;
  std::string from, to;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 20;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"steinlab: exact computations in the Stein group F_{2,3}", "steinlab"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<int()>> handlers;
  auto print = [&](const Json& j) { out << j.dump(2) << "\n"; };

  auto* eval = app.add_subcommand("eval", "Evaluate a map at a rational point");
  eval->add_option("map", o.files, "map JSON")->required()->expected(1);
  eval->add_option("--x", o.x, "point")->required();
  handlers[eval] = [&] {
    const PLMap f = io::plmap_from_json(read_json(o.files[0]));
    out << f.evaluate(parse_rational_flag(o.x, "x")).str() << "\n";
    return kOk;
  };

  auto* comp = app.add_subcommand("compose", "Compose two maps: x -> f(g(x))");
  comp->add_option("maps", o.files, "f.json g.json")->required()->expected(2);
  handlers[comp] = [&] {
    print(io::to_json(compose(io::plmap_from_json(read_json(o.files[0])),
                              io::plmap_from_json(read_json(o.files[1])))));
    return kOk;
  };

  auto* inv = app.add_subcommand("invert", "Invert a map");
  inv->add_option("map", o.files, "map JSON")->required()->expected(1);
  handlers[inv] = [&] {
    print(io::to_json(invert(io::plmap_from_json(read_json(o.files[0])))));
    return kOk;
  };

  auto* member = app.add_subcommand("member", "Test group membership");
  member->add_option("--spec", o.spec_path, "group spec JSON")->required();
  member->add_option("map", o.files, "map JSON")->required()->expected(1);
  handlers[member] = [&] {
    const GroupSpec spec = io::group_spec_from_json(read_json(o.spec_path));
    const PLMap f = io::plmap_from_json(read_json(o.files[0]));
    const Membership m = is_member(f, spec);
    print(Json{{"member", m.member}, {"diagnosis", m.diagnosis}});
    return kOk;
  };

  auto* chars = app.add_subcommand("chars", "Endpoint characters of an element of F_{2,3}[lo,hi]");
  chars->add_option("map", o.files, "map JSON")->required()->expected(1);
  handlers[chars] = [&] {
    const PLMap f = io::plmap_from_json(read_json(o.files[0]));
    const auto [lambda, rho] = lambda_rho(f);
    print(Json{{"chi", io::to_json(chi_endpoints(f))},
               {"lambda", io::to_json(lambda)},
               {"rho", io::to_json(rho)}});
    return kOk;
  };

  auto* abc = app.add_subcommand("ab", "Abelianization coordinates of an element of F_{2,3}");
  abc->add_option("map", o.files, "map JSON")->required()->expected(1);
  handlers[abc] = [&] {
    print(io::to_json(ab(io::plmap_from_json(read_json(o.files[0])))));
    return kOk;
  };

  auto* supp = app.add_subcommand("support", "Support of a map");
  supp->add_option("map", o.files, "map JSON")->required()->expected(1);
  handlers[supp] = [&] {
    print(io::to_json(support(io::plmap_from_json(read_json(o.files[0])))));
    return kOk;
  };

  auto* special = app.add_subcommand("build-special", "Special element with chi values (p,q)");
  special->add_option("--p", o.p)->required();
  special->add_option("--q", o.q)->required();
  special->add_option("--r", o.r, "support lower bound in (0,1)")->capture_default_str();
  special->add_option("--cap", o.cap, "support cap in (r,1) ∩ Z[1/6]");
  special->add_option("--shrink", o.shrink, "descent slope, 1/2 or 1/3")->capture_default_str();
  special->add_flag("--right", o.right, "right-based variant");
  handlers[special] = [&] {
    const Rational r = parse_rational_flag(o.r, "r");
    std::optional<BuilderConfig> cfg;
    if (!o.cap.empty() || o.shrink != "1/2") {
      cfg = BuilderConfig{o.cap.empty() ? default_support_cap(r) : parse_rational_flag(o.cap, "cap"),
                          parse_rational_flag(o.shrink, "shrink")};
    }
    const PLMap f = o.right ? special_element_right(o.p, o.q, r, cfg) : special_element(o.p, o.q, r, cfg);
    print(Json{{"map", io::to_json(f)},
               {"certificate", verify::special_element_certificate(f, o.p, o.q, r, o.right)}});
    return kOk;
  };

  auto* stable = app.add_subcommand("build-stable", "Stable letter for a chi_0^2 + b chi_0^3");
  stable->add_option("--a", o.a)->required();
  stable->add_option("--b", o.b)->required();
  handlers[stable] = [&] {
    const PLMap t = stable_letter(o.a, o.b);
    print(Json{{"map", io::to_json(t)}, {"certificate", verify::stable_letter_certificate(t, o.a, o.b)}});
    return kOk;
  };

  auto* conj = app.add_subcommand("build-conjugator", "Map of [-1,1] carrying [0,1] onto [1/2,1]");
  handlers[conj] = [&] {
    print(Json{{"map", io::to_json(conjugator_half())}});
    return kOk;
  };

  auto* conn = app.add_subcommand("connect", "PL homeomorphism [0,from] -> [0,to] in F_{2,3} style");
  conn->add_option("--from", o.from)->required();
  conn->add_option("--to", o.to)->required();
  handlers[conn] = [&] {
    const Rational from = parse_rational_flag(o.from, "from");
    const Rational to = parse_rational_flag(o.to, "to");
    const PLMap f = connect(from, to);
    print(Json{{"map", io::to_json(f)}, {"certificate", bijection_certificate(f, from, to)}});
    return kOk;
  };

  auto* cchar = app.add_subcommand("classify-char", "Sigma tier of a character");
  cchar->add_option("character", o.files, "character JSON")->required()->expected(1);
  handlers[cchar] = [&] {
    out << to_string(classify_character(io::character_from_json(read_json(o.files[0])))) << "\n";
    return kOk;
  };

  auto* cnorm = app.add_subcommand(
      "classify-normal", "Finiteness of a normal subgroup from lattice generators or {\"maps\": [...]}");
  cnorm->add_option("generators", o.files, "generators JSON")->required()->expected(1);
  handlers[cnorm] = [&] {
    const Json j = read_json(o.files[0]);
    FinitenessReport report;
    if (j.is_object() && j.contains("maps")) {
      std::vector<PLMap> maps;
      for (const Json& m : j["maps"]) maps.push_back(io::plmap_from_json(m));
      report = normal_closure_classification(maps);
    } else {
      report = normal_subgroup_finiteness(io::lattice_from_json(j));
    }
    print(io::to_json(report));
    return kOk;
  };

  auto* kreport = app.add_subcommand("kernel-report", "Tier, discreteness and kernel finiteness");
  kreport->add_option("character", o.files, "character JSON")->required()->expected(1);
  handlers[kreport] = [&] {
    const Character chi = io::character_from_json(read_json(o.files[0]));
    const SigmaTier tier = classify_character(chi);
    const auto gen = is_discrete(chi);
    print(Json{{"character", chi.str()},
               {"tier", to_string(tier)},
               {"discrete_generator", gen ? Json(gen->str()) : Json(nullptr)},
               {"kernel_lattice", io::to_json(kernel_lattice(chi))},
               {"kernel_finiteness", io::to_json(kernel_finiteness(chi))}});
    return kOk;
  };

  auto* ver = app.add_subcommand("verify", "Run certificate suites");
  ver->add_option("suite", o.suite, "basis|lemma32|lemma24|lemma41|all")
      ->required()
      ->check(CLI::IsMember({"basis", "lemma32", "lemma24", "lemma41", "all"}));
  ver->add_option("--seed", o.seed)->capture_default_str();
  ver->add_option("--samples", o.samples)->capture_default_str();
  handlers[ver] = [&] {
    const verify::SuiteResult result = verify::run_suite(o.suite, o.seed, o.samples);
    print(result.report);
    return result.ok ? kOk : kDomainError;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return handler();
    } catch (const ParseError& e) {
      err << "error: malformed input: " << e.what() << "\n";
      return kInputError;
    } catch (const nlohmann::json::exception& e) {
      err << "error: malformed input: " << e.what() << "\n";
      return kInputError;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kDomainError;
    }
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace steinlab::cli
