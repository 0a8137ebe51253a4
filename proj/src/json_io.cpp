#include "endcohom/json_io.hpp"

#include <limits>

#include "endcohom/errors.hpp"

namespace endcohom::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidParameter(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw InvalidParameter(std::string(what) + " must be a string");
  return j.get<std::string>();
}

unsigned small_unsigned(const json& j, const char* what) {
  const Int v = int_from_json(j);
  if (v < 0 || v > 1000000) throw InvalidParameter(std::string(what) + " is out of range");
  return static_cast<unsigned>(v.get_ui());
}

std::vector<Int> int_list(const json& j) {
  if (!j.is_array()) throw InvalidParameter("expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

json int_array(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

json height_value(const HeightValue& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

HeightValue height_value_from(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return HeightValue::infinity();
  const Int v = int_from_json(j);
  if (v < 0 || !v.fits_ulong_p()) throw InvalidParameter("height entries must be nonnegative integers or \"inf\"");
  return HeightValue::finite(v.get_ui());
}

}  // namespace

json int_to_json(const Int& n) {
  if (n.fits_slong_p() && sizeof(long) == 8) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InvalidParameter("expected an integer, got " + j.dump());
}

json to_json(const HeightSeq& h) {
  json ex = json::object();
  for (const auto& [p, v] : h.exceptions()) ex[p.get_str()] = height_value(v);
  return {{"exceptions", ex}, {"default", h.fallback() == HeightSeq::Default::Zero ? "zero" : "inf"}};
}

HeightSeq height_from_json(const json& j) {
  std::map<Int, HeightValue> ex;
  if (j.contains("exceptions")) {
    const json& e = j.at("exceptions");
    if (!e.is_object()) throw InvalidParameter("\"exceptions\" must be an object keyed by primes");
    for (const auto& [key, value] : e.items()) ex.emplace(parse_int(key), height_value_from(value));
  }
  HeightSeq::Default d = HeightSeq::Default::Zero;
  if (j.contains("default")) {
    const std::string s = text(j.at("default"), "\"default\"");
    if (s == "inf") {
      d = HeightSeq::Default::Infinity;
    } else if (s != "zero") {
      throw InvalidParameter("\"default\" must be \"zero\" or \"inf\"");
    }
  }
  return {std::move(ex), d};
}

json to_json(const PowerSeries& s) {
  const TailSpec& t = s.tail();
  Int den = 1;
  for (const auto& c : t.poly_coeffs()) den = lcm(den, Int(c.get_den()));
  for (const auto& [r, c] : t.geometric_terms()) den = lcm(den, Int(c.get_den()));
  auto scaled = [&](const Rat& c) { return int_to_json(Rat(c * Rat(den)).get_num()); };

  json tail = json::array();
  if (!t.poly_coeffs().empty()) {
    json q = json::array();
    for (const auto& c : t.poly_coeffs()) q.push_back(scaled(c));
    tail.push_back({{"kind", "poly"}, {"q", q}});
  }
  for (const auto& [r, c] : t.geometric_terms()) {
    tail.push_back({{"kind", "geom"}, {"c", scaled(c)}, {"r", int_to_json(r)}});
  }
  if (const auto& h = t.height_term()) {
    json term = {{"kind", "height"}, {"h", to_json(h->heights)}};
    if (h->multiplier != 1) term["c"] = int_to_json(h->multiplier);
    tail.push_back(term);
  }
  json out = {{"prefix", int_array(s.prefix())}, {"tail", tail}};
  if (den != 1) out["den"] = int_to_json(den);
  return out;
}

PowerSeries series_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParameter("a series must be a JSON object");
  std::vector<Int> prefix;
  if (j.contains("prefix")) prefix = int_list(j.at("prefix"));
  Rat den = 1;
  if (j.contains("den")) {
    den = Rat(int_from_json(j.at("den")));
    if (den <= 0) throw InvalidParameter("\"den\" must be positive");
  }
  TailSpec tail;
  if (j.contains("tail")) {
    const json& terms = j.at("tail");
    if (!terms.is_array()) throw InvalidParameter("\"tail\" must be an array");
    for (const auto& term : terms) {
      const std::string kind = text(field(term, "kind"), "\"kind\"");
      if (kind == "poly") {
        std::vector<Rat> q;
        for (const auto& c : int_list(field(term, "q"))) q.push_back(Rat(c) / den);
        tail = tail + TailSpec::poly(std::move(q));
      } else if (kind == "geom") {
        tail = tail + TailSpec::geometric(Rat(int_from_json(field(term, "c"))) / den, int_from_json(field(term, "r")));
      } else if (kind == "height") {
        const Int c = term.contains("c") ? int_from_json(term.at("c")) : Int(1);
        tail = tail + TailSpec::height(height_from_json(field(term, "h")), c);
      } else {
        throw InvalidParameter("unknown tail kind \"" + kind + "\"");
      }
    }
  }
  return {std::move(prefix), std::move(tail)};
}

json to_json(const PQElem& q) { return to_json(q.representative()); }

json to_json(const KQElem& k) {
  return {{"r", int_to_json(k.r())}, {"gamma", to_json(k.gamma())}, {"s", int_to_json(k.s())}};
}

KQElem kq_from_json(const json& j) {
  return {int_from_json(field(j, "r")), series_from_json(field(j, "gamma")), int_from_json(field(j, "s"))};
}

json to_json(const GElem& g) { return {{"n", int_to_json(g.n)}, {"q", to_json(g.q)}}; }

GElem g_from_json(const json& j) { return {int_from_json(field(j, "n")), PQElem(series_from_json(field(j, "q")))}; }

json to_json(const BaseRing& r) {
  json cup = json::array();
  for (const auto& e : r.cup_table()) cup.push_back({{"i", e.i}, {"j", e.j}, {"out", int_array(e.out)}});
  return {{"dim", r.dim()}, {"ranks", r.ranks()}, {"cup", cup}, {"top", r.top()}, {"name", r.name()}};
}

BaseRing ring_from_json(const json& j) {
  if (j.is_string()) return builtin_ring(j.get<std::string>());
  const unsigned dim = small_unsigned(field(j, "dim"), "\"dim\"");
  std::vector<unsigned> ranks;
  for (const auto& r : field(j, "ranks")) ranks.push_back(small_unsigned(r, "rank"));
  std::vector<CupEntry> cup;
  if (j.contains("cup")) {
    for (const auto& e : j.at("cup")) {
      cup.push_back({small_unsigned(field(e, "i"), "\"i\""), small_unsigned(field(e, "j"), "\"j\""),
                     int_list(field(e, "out"))});
    }
  }
  const std::size_t top = small_unsigned(field(j, "top"), "\"top\"");
  const std::string name = j.contains("name") ? text(j.at("name"), "\"name\"") : "custom";
  return {dim, std::move(ranks), std::move(cup), top, name};
}

json to_json(const ModuleShape& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms) {
    json x = {{"label", a.label}};
    switch (a.kind) {
      case AtomKind::Free:
        x["kind"] = "free";
        x["rank"] = a.rank;
        break;
      case AtomKind::PQ:
        x["kind"] = "pq";
        break;
      case AtomKind::KQ:
        x["kind"] = "kq";
        break;
    }
    atoms.push_back(x);
  }
  return {{"atoms", atoms}, {"quotient", m.quotient}, {"text", m.to_string()}};
}

json to_json(const AlgElem& e) {
  json coords = json::array();
  for (const auto& c : e.coords()) {
    if (const auto* v = std::get_if<std::vector<Int>>(&c)) {
      coords.push_back(int_array(*v));
    } else if (const auto* q = std::get_if<PQElem>(&c)) {
      coords.push_back(to_json(*q));
    } else {
      coords.push_back(to_json(std::get<KQElem>(c)));
    }
  }
  return {{"degree", e.degree()}, {"coords", coords}, {"text", e.to_string()}};
}

json describe(const EndAlgebra& a) {
  json modules = json::object();
  json duals = json::object();
  for (unsigned k = 1; k <= a.top_degree(); ++k) {
    modules[std::to_string(k)] = to_json(a.module(k));
    duals[std::to_string(k)] = dual_shape(a, k).to_string();
  }
  return {{"family", to_string(a.family())},
          {"ends", a.ends()},
          {"top_degree", a.top_degree()},
          {"modules", modules},
          {"duals", duals},
          {"description", a.describe()}};
}

Ambient ambient_from_json(const json& j) {
  const std::string s = text(j, "\"ambient\"");
  if (s == "stringer") return Ambient::Stringer;
  if (s == "surgered") return Ambient::SurgeredStringer;
  if (s == "ladder") return Ambient::Ladder;
  throw InvalidParameter("unknown ambient \"" + s + "\"");
}

RayDatum ray_from_json(const json& j) {
  const Ambient amb = ambient_from_json(field(j, "ambient"));
  PowerSeries eps;
  if (j.contains("epsilons")) eps = series_from_json(j.at("epsilons"));
  return {amb, eps};
}

namespace {

AlgElem ray_class(const EndAlgebra& a, const json& j) {
  const RayDatum d = ray_from_json(j);
  switch (d.ambient) {
    case Ambient::Stringer:
      if (a.family() != Family::Stringer) throw AmbientMismatch("straight ray needs a stringer");
      return straight_ray_class(a);
    case Ambient::SurgeredStringer:
      return surgered_ray_class(a, d);
    case Ambient::Ladder:
      return ladder_ray_class(a, d);
  }
  throw InvalidParameter("unknown ambient");
}

}  // namespace

EndAlgebra algebra_from_json(const json& j) {
  const std::string shape = text(field(j, "shape"), "\"shape\"");
  if (shape == "stringer") return EndAlgebra::stringer(ring_from_json(field(j, "X")));
  if (shape == "surgered") return EndAlgebra::surgered_stringer(ring_from_json(field(j, "X")));
  if (shape == "ladder") return EndAlgebra::ladder(ring_from_json(field(j, "X")), ring_from_json(field(j, "Y")));
  if (shape == "wedge") return EndAlgebra::wedge(ring_from_json(field(j, "X")), ring_from_json(field(j, "Y")));
  if (shape == "endsum") {
    const EndAlgebra a = algebra_from_json(field(j, "A"));
    const EndAlgebra b = algebra_from_json(field(j, "B"));
    return end_sum(a, ray_class(a, field(j, "classA")), b, ray_class(b, field(j, "classB")));
  }
  throw InvalidParameter("unknown shape \"" + shape + "\"");
}

json to_json(const TrueVec& v) {
  json pqs = json::array();
  for (const auto& q : v.pqs) pqs.push_back(to_json(q));
  return {{"ints", int_array(v.ints)}, {"pqs", pqs}};
}

json to_json(const InvariantResult& r) {
  const InvariantTrace& t = r.trace;
  json trace = {{"profile", t.profile},
                {"j_shape", t.j_shape},
                {"j_is_ideal", t.j_is_ideal},
                {"ideal_products_checked", t.ideal_products_checked},
                {"quotient_ints", t.quotient_ints},
                {"quotient_pqs", t.quotient_pqs},
                {"u_products", t.u_products},
                {"u_rank", t.u_rank},
                {"v_candidates", t.v_candidates},
                {"v_rank", t.v_rank},
                {"notes", t.notes}};
  trace["v_generator"] = t.v_generator ? to_json(*t.v_generator) : json(nullptr);
  trace["v_reduced"] = t.v_reduced ? to_json(*t.v_reduced) : json(nullptr);
  trace["pi_v"] = t.pi_v ? to_json(*t.pi_v) : json(nullptr);
  json out = {{"outcome", r.outcome == InvariantResult::Outcome::Height ? "height" : "empty"}, {"trace", trace}};
  out["height"] = r.height ? to_json(*r.height) : json(nullptr);
  if (r.height) out["height_text"] = r.height->to_string();
  return out;
}

SpaceSpec space_from_json(const json& j) {
  const std::string f = text(field(j, "family"), "\"family\"");
  SpaceSpec s{};
  if (f == "stringer") {
    s.family = Family::Stringer;
  } else if (f == "surgered") {
    s.family = Family::SurgeredStringer;
  } else if (f == "ladder") {
    s.family = Family::Ladder;
  } else if (f == "wedge") {
    s.family = Family::Wedge;
  } else {
    throw InvalidParameter("unknown family \"" + f + "\"");
  }
  for (const auto& g : field(j, "g")) s.genera.push_back(small_unsigned(g, "genus"));
  s.validate();
  return s;
}

json to_json(const Verdict& v) {
  return {{"isomorphic", v.isomorphic},
          {"certificate", {{"invariant", v.certificate.invariant}, {"a", v.certificate.value_a}, {"b", v.certificate.value_b}}}};
}

}  // namespace endcohom::json_io
