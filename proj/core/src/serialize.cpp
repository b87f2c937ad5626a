#include "edegen/serialize.hpp"

namespace edegen {
namespace {

using nlohmann::json;

json stat_json(StatPair s) { return json::array({s.edges, s.degen}); }

json theta_json(ModelParams t) { return json::array({t.theta_edges, t.theta_degen}); }

json stats_json(const std::vector<StatPair>& stats) {
  json out = json::array();
  for (const auto& s : stats) out.push_back(stat_json(s));
  return out;
}

json distribution_json(const std::vector<ClassProbability>& dist) {
  json out = json::array();
  for (const auto& c : dist) {
    out.push_back({{"e", c.stat.edges}, {"d", c.stat.degen}, {"probability", c.probability}});
  }
  return out;
}

}  // namespace

json polytope_json(const Polytope& p) {
  const Rational pn = interior_proportion(p.n);
  return {
      {"n", p.n},
      {"vertices", stats_json(p.vertices)},
      {"integer_point_count", count_integer_points(p.n)},
      {"p_n",
       json::array({boost::multiprecision::numerator(pn).convert_to<std::int64_t>(),
                    boost::multiprecision::denominator(pn).convert_to<std::int64_t>()})},
  };
}

json direction_json(const Direction& d) {
  const ConeClass cone = classify_direction(d);
  json alpha_value = nullptr;
  if (cone != ConeClass::Boundary) {
    const NormalizedStat a = alpha(d);
    alpha_value = json::array({a.x, a.y});
  }
  return {
      {"direction", json::array({d.x_double(), d.y_double()})},
      {"cone", to_string(cone)},
      {"alpha", alpha_value},
  };
}

json extremal_report_json(const ExtremalReport& report) {
  json ladder = json::array();
  for (const auto& row : report.ladder) {
    ladder.push_back({
        {"r", row.r},
        {"theta", theta_json(row.theta)},
        {"eta_mass", row.eta_mass},
        {"target_mass", row.target_mass},
        {"distribution", distribution_json(row.distribution)},
    });
  }
  return {
      {"n", report.n},
      {"direction", json::array({report.direction.x_double(), report.direction.y_double()})},
      {"cone", to_string(report.cone)},
      {"beta", theta_json(report.beta)},
      {"eta", to_double(report.eta)},
      {"alpha", json::array({to_double(report.alpha.x), to_double(report.alpha.y)})},
      {"targets", stats_json(report.targets)},
      {"method", report.exact ? "exact" : "metropolis"},
      {"epsilon", report.epsilon},
      {"first_r_reaching", report.first_r_reaching ? json(*report.first_r_reaching) : json(nullptr)},
      {"achieved_epsilon", report.achieved_epsilon},
      {"ladder", ladder},
  };
}

json beta_invariance_json(const BetaInvarianceReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({
        {"beta", theta_json(row.beta)},
        {"modal_class", stat_json(row.modal_class)},
        {"target_mass", row.target_mass},
    });
  }
  return {
      {"n", report.n},
      {"direction", json::array({report.direction.x_double(), report.direction.y_double()})},
      {"ladder", report.ladder},
      {"targets", stats_json(report.targets)},
      {"same_modal_class", report.same_modal_class},
      {"rows", rows},
  };
}

}  // namespace edegen
