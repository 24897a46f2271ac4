#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gen32/gens.hpp"
#include "gen32/matgroup.hpp"
#include "gen32/transitivity.hpp"

namespace gen32 {

struct GroupReport {
  std::string name;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  TransitivityReport transitivity;
  std::optional<std::uint64_t> stabilizer_order;  // transitive groups
  std::optional<DResult> d;
  std::string d_error;  // set when d is absent
  std::map<std::string, std::int64_t> timing_ms;
};

// With an irreducible nontrivial `g0` the d value comes from the affine
// shortcut, otherwise d_exact.
GroupReport analyze(const std::string& name, const PermGroup& g, const DSearchOptions& opts = {},
                    const std::optional<MatrixGroup>& g0 = std::nullopt);

nlohmann::json to_json(const TransitivityReport& r);
nlohmann::json to_json(const DResult& d);
nlohmann::json to_json(const GroupReport& r);

}  // namespace gen32
