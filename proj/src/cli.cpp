#include "endcohom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "endcohom/errors.hpp"
#include "endcohom/json_io.hpp"
#include "endcohom/properties.hpp"

namespace endcohom::cli {

namespace {

using json_io::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A source is inline JSON, "-" for stdin, or a file path.
json read_json(const std::string& source, std::istream& in) {
  std::string body;
  if (source == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[' || source.front() == '"')) {
    body = source;
  } else {
    std::ifstream file(source);
    if (!file) throw IoError("cannot read " + source);
    std::ostringstream ss;
    ss << file.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Int> parse_primes(const std::string& list) {
  std::vector<Int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_int(item));
  }
  return out;
}

json coefficient_list(const PowerSeries& s, unsigned long horizon) {
  json out = json::array();
  for (const auto& c : s.coefficients(horizon)) out.push_back(json_io::int_to_json(c));
  return out;
}

// Options shared by the commands; unused ones stay at their defaults.
struct Options {
  std::string preset;
  unsigned m = 4;
  std::string input = "-";
  std::string alpha;
  std::string height;
  std::string a;
  std::string b;
  std::string int_value;
  std::string primes;
  unsigned long kmax = kDefaultKMax;
  unsigned long horizon = 10;
  std::uint64_t seed = 1;
  unsigned trials = 100;
};

PowerSeries alpha_from(const Options& o, std::istream& in) {
  if (!o.alpha.empty()) return json_io::series_from_json(read_json(o.alpha, in));
  if (!o.height.empty()) return realize_height(json_io::height_from_json(read_json(o.height, in))).representative();
  throw UsageError("--alpha or --height is required");
}

Preset preset_from(const Options& o, std::istream& in) {
  const PowerSeries alpha = alpha_from(o, in);
  if (o.preset == "main-theorem") return main_theorem_preset(alpha);
  if (o.preset == "variation1") return variation1_preset(o.m, alpha);
  throw UsageError("unknown preset \"" + o.preset + "\"");
}

DegreeProfile profile_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "main-theorem") return DegreeProfile::main_theorem();
    throw InvalidParameter("unknown profile " + j.dump());
  }
  DegreeProfile p;
  p.name = j.value("name", std::string("custom"));
  p.target = j.at("target").get<unsigned>();
  p.u_degrees = j.at("u").get<std::vector<unsigned>>();
  p.v_degrees = j.at("v").get<std::vector<unsigned>>();
  return p;
}

EndAlgebra default_ray_algebra(Ambient a) {
  switch (a) {
    case Ambient::Stringer:
      return EndAlgebra::stringer(torus(3));
    case Ambient::SurgeredStringer:
      return EndAlgebra::surgered_stringer(torus(3));
    case Ambient::Ladder:
      return EndAlgebra::ladder(torus(3), sphere_product(1, 2));
  }
  throw InvalidParameter("unknown ambient");
}

json cmd_algebra(const Options& o, std::istream& in) {
  if (!o.preset.empty()) return json_io::describe(preset_from(o, in).sum);
  return json_io::describe(json_io::algebra_from_json(read_json(o.input, in)));
}

json cmd_ray_class(const Options& o, std::istream& in) {
  const json j = read_json(o.input, in);
  const RayDatum d = json_io::ray_from_json(j);
  const EndAlgebra alg = j.contains("algebra") ? json_io::algebra_from_json(j.at("algebra")) : default_ray_algebra(d.ambient);
  json out;
  switch (d.ambient) {
    case Ambient::Stringer:
      out["class"] = json_io::to_json(straight_ray_class(alg));
      break;
    case Ambient::SurgeredStringer:
      out["class"] = json_io::to_json(surgered_ray_class(alg, d));
      out["value"] = json_io::to_json(GElem{1, PQElem(d.epsilons)});
      break;
    case Ambient::Ladder:
      out["class"] = json_io::to_json(ladder_ray_class(alg, d));
      out["value"] = json_io::to_json(KQElem(1, d.epsilons, 0));
      break;
  }
  return out;
}

json cmd_realize(const Options& o, std::istream& in) {
  const PowerSeries alpha = alpha_from(o, in);
  const SwindlePath path = swindle(alpha);
  const std::vector<Int> w = swindle_windings(alpha, o.horizon);
  json segments = json::array();
  for (unsigned long k = 0; k < o.horizon; ++k) {
    const auto [up, down] = path.segment(k);
    segments.push_back({json_io::int_to_json(up), json_io::int_to_json(down)});
  }
  json net = json::array();
  for (const auto& e : path_to_epsilons(w)) net.push_back(json_io::int_to_json(e));
  const PowerSeries back = path_to_epsilons(path);
  return {{"winding", json_io::to_json(path.winding)},
          {"windings", coefficient_list(path.winding, o.horizon)},
          {"segments", segments},
          {"epsilons", json_io::to_json(back)},
          {"epsilons_prefix", net},
          {"roundtrip", back == alpha}};
}

json cmd_end_sum(const Options& o, std::istream& in) {
  if (!o.preset.empty()) return json_io::describe(preset_from(o, in).sum);
  json j = read_json(o.input, in);
  j["shape"] = "endsum";
  return json_io::describe(json_io::algebra_from_json(j));
}

json cmd_invariant(const Options& o, std::istream& in) {
  if (!o.preset.empty()) {
    const Preset p = preset_from(o, in);
    return json_io::to_json(invariant_h(p.sum, p.profile));
  }
  const json j = read_json(o.input, in);
  const json shape = j.contains("algebra") ? j.at("algebra") : j;
  const DegreeProfile profile = j.contains("profile") ? profile_from_json(j.at("profile")) : DegreeProfile::main_theorem();
  return json_io::to_json(invariant_h(json_io::algebra_from_json(shape), profile));
}

json cmd_height(const Options& o, std::istream& in) {
  HeightSeq h;
  if (!o.int_value.empty()) {
    h = height_of_integer(parse_int(o.int_value));
  } else {
    h = height_of_quotient_element(PQElem(alpha_from(o, in)), parse_primes(o.primes), o.kmax);
  }
  return json_io::to_json(h);
}

json cmd_realize_height(const Options& o, std::istream& in) {
  if (o.height.empty()) throw UsageError("--height is required");
  const HeightSeq h = json_io::height_from_json(read_json(o.height, in));
  const PowerSeries s = realize_height(h).representative();
  return {{"series", json_io::to_json(s)}, {"coefficients", coefficient_list(s, o.horizon)}};
}

json cmd_classify(const Options& o, std::istream& in) {
  if (o.a.empty() || o.b.empty()) throw UsageError("--a and --b are required");
  return json_io::to_json(classify_pair(json_io::space_from_json(read_json(o.a, in)),
                                        json_io::space_from_json(read_json(o.b, in))));
}

json cmd_verify(const Options& o) {
  json props = json::array();
  unsigned passed = 0;
  unsigned failed = 0;
  for (const auto& r : run_properties(o.seed, o.trials)) {
    json x = {{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}};
    if (r.failed) x["first_failure"] = r.first_failure;
    props.push_back(x);
    passed += r.passed;
    failed += r.failed;
  }
  return {{"seed", o.seed}, {"properties", props}, {"passed", passed}, {"failed", failed}, {"ok", failed == 0}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with end-cohomology algebras", "endcohom"};
  app.require_subcommand(1);
  Options o;

  auto* algebra = app.add_subcommand("algebra", "Describe the degree modules of an algebra");
  auto* ray = app.add_subcommand("ray-class", "Top-degree class of a ray");
  auto* realize = app.add_subcommand("realize", "Swindle path realizing an epsilon sequence");
  auto* endsum = app.add_subcommand("end-sum", "End-sum of two algebras along ray classes");
  auto* invariant = app.add_subcommand("invariant", "Run the height invariant with its trace");
  auto* height = app.add_subcommand("height", "Height of an integer or of a class in Z[[x]]/Z[x]");
  auto* realize_height = app.add_subcommand("realize-height", "Series whose class has a given height");
  auto* classify = app.add_subcommand("classify", "Compare two surface-based model spaces");
  auto* verify = app.add_subcommand("verify", "Run the property checks");

  for (auto* c : {algebra, endsum, invariant}) {
    c->add_option("--preset", o.preset, "main-theorem or variation1");
    c->add_option("--m", o.m, "dimension for variation1");
    c->add_option("--alpha", o.alpha, "series: JSON, file or -");
    c->add_option("--height", o.height, "height whose realization is used as alpha");
  }
  for (auto* c : {algebra, ray, endsum, invariant}) c->add_option("--input", o.input, "JSON, file or - (default)");
  realize->add_option("--alpha", o.alpha, "series: JSON, file or -")->required();
  realize->add_option("--horizon", o.horizon, "number of windings listed");
  height->add_option("--int", o.int_value, "integer");
  height->add_option("--alpha", o.alpha, "series: JSON, file or -");
  height->add_option("--primes", o.primes, "extra primes to evaluate, comma separated");
  height->add_option("--kmax", o.kmax, "largest finite valuation reported");
  realize_height->add_option("--height", o.height, "height: JSON, file or -")->required();
  realize_height->add_option("--horizon", o.horizon, "number of coefficients listed");
  classify->add_option("--a", o.a, "space: JSON, file or -")->required();
  classify->add_option("--b", o.b, "space: JSON, file or -")->required();
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "samples per property");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json result;
    if (algebra->parsed()) result = cmd_algebra(o, in);
    if (ray->parsed()) result = cmd_ray_class(o, in);
    if (realize->parsed()) result = cmd_realize(o, in);
    if (endsum->parsed()) result = cmd_end_sum(o, in);
    if (invariant->parsed()) result = cmd_invariant(o, in);
    if (height->parsed()) {
      if (o.int_value.empty() == o.alpha.empty()) throw UsageError("give exactly one of --int and --alpha");
      result = cmd_height(o, in);
    }
    if (realize_height->parsed()) result = cmd_realize_height(o, in);
    if (classify->parsed()) result = cmd_classify(o, in);
    if (verify->parsed()) result = cmd_verify(o);
    out << result.dump(2) << "\n";
    if (verify->parsed() && !result.at("ok").get<bool>()) return kExitDomain;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const json::exception& e) {
    err << "error: bad JSON field: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace endcohom::cli
