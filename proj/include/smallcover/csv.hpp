#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "smallcover/gradient.hpp"
#include "smallcover/tower.hpp"

namespace smallcover {

/// Header `j,V,E,F,k,index,h1`, one row per level. `k` is empty when the
/// strategy names no further facet; h1 is taken from the h-vector.
std::string tower_csv(const TowerState& t);

/// Reads tower_csv output back; h1 must equal V/2 - 1 on every row.
TowerProfile parse_tower_csv(std::string_view text);

struct RgrOptions {
  std::optional<AtkinsonReport> atkinson;
  std::optional<std::int64_t> base_rank;
};

/// Header `j,index,V,b1_lower,ratio,paper_ratio,commensurable_b1,atkinson_pass`
/// plus `rs_upper` when a base rank is given. Ratios use 6 decimal places;
/// atkinson_pass is pass, fail or na.
std::string rgr_csv(const GradientReport& report, const RgrOptions& options = {});

}  // namespace smallcover
