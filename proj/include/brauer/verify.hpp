// brauer - diagram semigroups and complexity bounds
//
// Named verification targets. Each target checks one mathematical statement
// on explicitly constructed semigroups and produces a Report.

#ifndef BRAUER_VERIFY_HPP_
#define BRAUER_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigroup.hpp"

namespace brauer {

  struct Report {
    std::string    target;
    std::string    anchor;
    nlohmann::json params  = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();
    bool           passed  = false;
    long long      duration_ms = 0;

    //! {target, anchor, params, verdict, details, duration_ms}
    nlohmann::json to_json() const;
  };

  struct VerifyTarget {
    std::string id;
    std::string anchor;
    //! What --n controls for this target.
    std::string parameter;
  };

  std::vector<VerifyTarget> const& verify_targets();

  //! Runs the target; n overrides the default degree bound where the target
  //! has one. Throws BadIndex for an unknown id.
  Report run_target(std::string const&         id,
                    std::optional<std::size_t> n      = std::nullopt,
                    std::size_t                budget = DEFAULT_BUDGET);

}  // namespace brauer

#endif  // BRAUER_VERIFY_HPP_
