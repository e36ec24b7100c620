#include "zgring/io.hpp"

#include <stdexcept>

namespace zgring {

namespace {

Integer parse_integer(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + j.dump());
  return v;
}

SymTriple parse_triple(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("triple must be an array of 3 strings");
  return {parse_integer(j[0]), parse_integer(j[1]), parse_integer(j[2])};
}

TransitionMatrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw std::invalid_argument("matrix must be [[a11, a12], [a21, a22]]");
  try {
    return {j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(), j[1][0].get<std::int64_t>(),
            j[1][1].get<std::int64_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix entries must be integers: ") + e.what());
  }
}

RationalInterval parse_interval(const Json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) throw std::invalid_argument("interval needs lo and hi");
  return {parse_rational(j["lo"].get<std::string>()), parse_rational(j["hi"].get<std::string>())};
}

}  // namespace

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

Json to_json(const ZGamma& a) { return {{"m", a.m().get_str()}, {"n", a.n().get_str()}}; }

Json to_json(const Quad& q) { return {{"i", q.i}, {"a", q.a}, {"b", q.b}, {"c", q.c}}; }

Json to_json(const RationalInterval& x) { return {{"lo", rational_string(x.lo())}, {"hi", rational_string(x.hi())}}; }

Json to_json(const SymTriple& t) { return Json::array({t.x0.get_str(), t.x1.get_str(), t.x2.get_str()}); }

Json to_json(const TransitionMatrix& m) { return Json::array({Json::array({m.a11, m.a12}), Json::array({m.a21, m.a22})}); }

Json dump_system(const ExtremalSystem& sys) {
  Json j;
  j["seed"] = {{"x1", to_json(sys.seed().x1)}, {"x2", to_json(sys.seed().x2)}, {"M", to_json(sys.seed().M)}};
  Json w = Json::array();
  for (const auto& t : sys.window()) w.push_back(to_json(t));
  j["window"] = std::move(w);
  j["xi"] = sys.xi() ? to_json(*sys.xi()) : Json(nullptr);
  j["theta"] = sys.theta() ? to_json(*sys.theta()) : Json(nullptr);
  return j;
}

ExtremalSystem load_system(const Json& j) {
  if (!j.is_object() || !j.contains("seed") || !j.contains("window"))
    throw std::invalid_argument("system dump needs 'seed' and 'window'");
  const Json& s = j["seed"];
  if (!s.contains("x1") || !s.contains("x2") || !s.contains("M"))
    throw std::invalid_argument("seed needs x1, x2 and M");
  Seed seed{parse_triple(s["x1"]), parse_triple(s["x2"]), parse_matrix(s["M"])};
  if (!j["window"].is_array()) throw std::invalid_argument("window must be an array");
  std::vector<SymTriple> window;
  for (const auto& t : j["window"]) window.push_back(parse_triple(t));
  ExtremalSystem sys(std::move(seed), std::move(window));
  if (j.contains("xi") && !j["xi"].is_null() && j.contains("theta") && !j["theta"].is_null())
    sys.set_enclosures(parse_interval(j["xi"]), parse_interval(j["theta"]));
  return sys;
}

}  // namespace zgring
