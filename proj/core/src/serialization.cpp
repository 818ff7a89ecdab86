#include "qdtm/serialization.hpp"

#include "qdtm/error.hpp"

#include <algorithm>

namespace qdtm {

namespace {

constexpr const char* kNegInf = "-inf";
constexpr const char* kPosInf = "inf";

json endpoint_json(const std::optional<Rational>& v, bool negative) {
  if (!v) return negative ? kNegInf : kPosInf;
  return rational_str(*v);
}

std::optional<Rational> endpoint_from_json(const json& j) {
  require(j.is_string(), "InvalidInterval", "endpoint must be a rational string");
  const std::string s = j.get<std::string>();
  // Accept the unicode minus variant some documents use.
  if (s == kNegInf || s == kPosInf || s == "−inf") return std::nullopt;
  return parse_rational(s);
}

}  // namespace

json to_json(const Rational& v) { return rational_str(v); }

json to_json(const Interval& iv) {
  return json::array({endpoint_json(iv.lo, true), endpoint_json(iv.hi, false),
                      iv.lo_open, iv.hi_open});
}

json to_json(const IntervalSet& set) {
  json out = json::array();
  for (const Interval& p : set.parts()) out.push_back(to_json(p));
  return out;
}

json to_json(const Space& space) {
  if (space.is_line()) return json{{"kind", "line"}};
  return json{{"kind", "compact"},
              {"a", rational_str(space.lo())},
              {"b", rational_str(space.hi())}};
}

json to_json(const PwlFunction& f) {
  json bps = json::array();
  for (const auto& [x, y] : f.nodes())
    bps.push_back(json::array({rational_str(x), rational_str(y)}));
  return json{{"space", to_json(f.space())}, {"breakpoints", std::move(bps)}};
}

json to_json(const Profile& phi) {
  json bps = json::array();
  for (const auto& [x, y] : phi.nodes())
    bps.push_back(json::array({rational_str(x), rational_str(y)}));
  return json{{"nodes", std::move(bps)}};
}

json to_json(const MonotonePwFunction& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes())
    nodes.push_back(json::array({rational_str(n.t), rational_str(n.left),
                                 rational_str(n.value), rational_str(n.right)}));
  return json{{"direction", g.direction() == MonotonePwFunction::Direction::NonDecreasing
                                ? "non_decreasing"
                                : "non_increasing"},
              {"nodes", std::move(nodes)}};
}

json to_json(const BoundaryMeasure& m) {
  json atoms = json::array();
  for (const auto& [loc, mass] : m.atoms)
    atoms.push_back(json::array({rational_str(loc), rational_str(mass)}));
  json density = json::array();
  for (const auto& [lo, hi, value] : m.density)
    density.push_back(
        json::array({rational_str(lo), rational_str(hi), rational_str(value)}));
  return json{{"atoms", std::move(atoms)}, {"density", std::move(density)}};
}

json to_json(const Dtm& mu) {
  struct Visitor {
    json operator()(const Dtm::SimpleContains& n) const {
      return json{{"kind", "simple"},
                  {"D", json::array({rational_str(*n.d.lo), rational_str(*n.d.hi)})}};
    }
    json operator()(const Dtm::Dirac& n) const {
      return json{{"kind", "dirac"}, {"x", rational_str(n.x)}};
    }
    json operator()(const Dtm::LebesgueOn& n) const {
      return json{{"kind", "lebesgue"},
                  {"I", json::array({rational_str(*n.i.lo), rational_str(*n.i.hi)})}};
    }
    json operator()(const Dtm::ConicCombo& n) const {
      json terms = json::array();
      for (const auto& [coeff, sub] : n.terms)
        terms.push_back(json::array({rational_str(coeff), to_json(*sub)}));
      return json{{"kind", "combo"}, {"terms", std::move(terms)}};
    }
  };
  return std::visit(Visitor{}, mu.node());
}

Rational rational_from_json(const json& j) {
  require(j.is_string(), "InvalidRational", "rational must be a string");
  return parse_rational(j.get<std::string>());
}

Interval interval_from_json(const json& j) {
  require(j.is_array() && j.size() == 4, "InvalidInterval",
          "interval must be [lo, hi, lo_open, hi_open]");
  require(j[2].is_boolean() && j[3].is_boolean(), "InvalidInterval",
          "openness flags must be booleans");
  return Interval::make(endpoint_from_json(j[0]), endpoint_from_json(j[1]),
                        j[2].get<bool>(), j[3].get<bool>());
}

IntervalSet interval_set_from_json(const json& j) {
  require(j.is_array(), "InvalidInterval", "interval set must be an array");
  std::vector<Interval> parts;
  for (const json& p : j) parts.push_back(interval_from_json(p));
  return IntervalSet(std::move(parts));
}

Space space_from_json(const json& j) {
  require(j.is_object() && j.contains("kind"), "InvalidScenario",
          "space needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "line") return Space::line();
  if (kind == "compact")
    return Space::compact(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
  fail("InvalidScenario", "unknown space kind '" + kind + "'");
}

PwlFunction pwl_from_json(const json& j) {
  require(j.is_object() && j.contains("space") && j.contains("breakpoints"),
          "InvalidFunction", "function needs space and breakpoints");
  const Space space = space_from_json(j.at("space"));
  std::vector<Breakpoint> nodes;
  for (const json& bp : j.at("breakpoints")) {
    require(bp.is_array() && bp.size() == 2, "InvalidFunction",
            "breakpoint must be [x, y]");
    nodes.push_back({rational_from_json(bp[0]), rational_from_json(bp[1])});
  }
  return PwlFunction(space, std::move(nodes));
}

Dtm dtm_from_json(const json& j, const Space& space) {
  require(j.is_object() && j.contains("kind"), "InvalidMeasure", "measure needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "simple") {
    const json& d = j.at("D");
    require(d.is_array() && d.size() == 2, "InvalidMeasure", "D must be [lo, hi]");
    return Dtm::simple_contains(space, rational_from_json(d[0]), rational_from_json(d[1]));
  }
  if (kind == "dirac") return Dtm::dirac(space, rational_from_json(j.at("x")));
  if (kind == "lebesgue") {
    const json& i = j.at("I");
    require(i.is_array() && i.size() == 2, "InvalidMeasure", "I must be [lo, hi]");
    return Dtm::lebesgue_on(space, rational_from_json(i[0]), rational_from_json(i[1]));
  }
  if (kind == "combo") {
    std::vector<std::pair<Rational, Dtm>> terms;
    for (const json& t : j.at("terms")) {
      require(t.is_array() && t.size() == 2, "InvalidMeasure",
              "combo term must be [coeff, measure]");
      terms.emplace_back(rational_from_json(t[0]), dtm_from_json(t[1], space));
    }
    return Dtm::combo(space, std::move(terms));
  }
  fail("InvalidMeasure", "unknown measure kind '" + kind + "'");
}

std::string bundle_csv(const DistributionBundle& bundle) {
  std::vector<Rational> ts;
  for (const auto& n : bundle.L1.nodes()) ts.push_back(n.t);
  for (const auto& n : bundle.L2.nodes()) ts.push_back(n.t);
  for (const auto& n : bundle.R1.nodes()) ts.push_back(n.t);
  for (const auto& n : bundle.R2.nodes()) ts.push_back(n.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> rows;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) rows.push_back((ts[i - 1] + ts[i]) / 2);
    rows.push_back(ts[i]);
  }
  std::string out = "t,L1,L2,R1,R2\n";
  for (const Rational& t : rows) {
    out += rational_str(t);
    out += ',';
    out += rational_str(bundle.L1.value(t));
    out += ',';
    out += rational_str(bundle.L2.value(t));
    out += ',';
    out += rational_str(bundle.R1.value(t));
    out += ',';
    out += rational_str(bundle.R2.value(t));
    out += '\n';
  }
  return out;
}

}  // namespace qdtm
