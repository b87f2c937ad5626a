#ifndef EDEGEN_SERIALIZE_HPP
#define EDEGEN_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "edegen/fan.hpp"
#include "edegen/polytope.hpp"
#include "edegen/sampler.hpp"

namespace edegen {

/// {"n": int, "vertices": [[e,d],...], "integer_point_count": int, "p_n": [num, den]}
nlohmann::json polytope_json(const Polytope& p);

/// {"direction": [d1,d2], "cone": "...", "alpha": [x,y] | null}
nlohmann::json direction_json(const Direction& d);

nlohmann::json extremal_report_json(const ExtremalReport& report);
nlohmann::json beta_invariance_json(const BetaInvarianceReport& report);

}  // namespace edegen

#endif  // EDEGEN_SERIALIZE_HPP
