#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "smallcover/tower.hpp"

namespace smallcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Per-level counts of a doubling tower; all the rank-gradient arithmetic
/// needs. Obtained from a TowerState or read back from tower CSV.
struct LevelProfile {
  int j = 0;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::optional<int> k;  ///< size of the facet doubled to reach level j+1
  std::uint64_t index = 1;

  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

struct TowerProfile {
  std::vector<LevelProfile> levels;

  friend bool operator==(const TowerProfile&, const TowerProfile&) = default;
};

TowerProfile profile(const TowerState& t);

/// Reidemeister-Schreier: rk(G_j) <= index * (rk(G) - 1) + 1.
std::int64_t rs_upper_bound(std::int64_t base_rank, std::int64_t index);

/// V_j/2 - 1 per level: b_1(M_j; Z/2) = h_1(P_j), a lower bound for rk pi_1(M_j).
std::vector<std::int64_t> b1_bound_sequence(const TowerProfile& t);
std::vector<std::int64_t> b1_bound_sequence(const TowerState& t);

/// (V0 - sum_i k_i 2^-i) / 2, the last k repeating forever.
Rational closed_form_limit(std::int64_t v0, std::span<const int> ks);

struct GradientLevel {
  int j = 0;
  std::uint64_t index = 1;
  std::int64_t vertices = 0;
  std::int64_t b1_lower = 0;          ///< V/2 - 1
  Rational ratio;                     ///< (V - 4) / 2^(j+1), from rk - 1 >= V/2 - 2
  Rational paper_ratio;               ///< (V - 3) / 2^(j+1), the printed expression
  std::int64_t commensurable_b1 = 0;  ///< V/2 - 2
};

struct GradientReport {
  std::vector<GradientLevel> levels;
  Rational limit_estimate;
  /// True when limit_estimate comes from closed_form_limit: the observed
  /// k-sequence ends in two equal values (or has a single entry) and is
  /// extrapolated as constant. Otherwise it is the last ratio.
  bool closed_form = false;
};

GradientReport rgr_ratios(const TowerProfile& t);
GradientReport rgr_ratios(const TowerState& t);

/// C(V-8) <= vol <= D(V-10).
struct AtkinsonInterval {
  std::int64_t vertices = 0;
  Rational c;
  Rational d;
  Rational lo;
  Rational hi;

  bool consistent() const { return vertices > 8 && lo <= hi; }
};

AtkinsonInterval atkinson_interval(std::int64_t vertices, const Rational& c, const Rational& d);

struct AtkinsonLevel {
  int j = 0;
  std::uint64_t volume_factor = 1;  ///< vol(P_j) / vol(P_0) = 2^j
  Rational required_vertices;       ///< 2^j (C/D)(V0 - 8) + 10
  bool pass = false;
};

/// Checks V_j >= 2^j (C/D)(V_0 - 8) + 10. The bound is conditional on the
/// unknown true constants, so only rho = C/D matters.
struct AtkinsonReport {
  bool precondition_ok = false;  ///< V_0 > 8
  std::string precondition_message;
  Rational rho;
  std::vector<AtkinsonLevel> levels;
  /// Largest rho for which every level passes; empty when V_0 <= 8.
  std::optional<Rational> max_rho;

  bool all_pass() const;
};

AtkinsonReport atkinson_check(const TowerProfile& t, const Rational& c, const Rational& d);
AtkinsonReport atkinson_check(const TowerState& t, const Rational& c, const Rational& d);

/// V_j/2 - 2 per level, the lower bound for rk pi_1(N_j) on a commensurable
/// manifold after the Agol-Culler-Shalen drop of one (p = 2). The index of
/// N_j over N is only bounded above by 2^j.
struct CommensurableBounds {
  std::vector<std::int64_t> b1_lower;
  std::vector<std::uint64_t> index_upper;
};

CommensurableBounds commensurable_bounds(const TowerProfile& t);
CommensurableBounds commensurable_bounds(const TowerState& t);

/// Fixed-point decimal, rounded half away from zero.
std::string to_decimal(const Rational& x, int places = 6);

/// "P/Q" or an integer.
Rational parse_rational(const std::string& text);

}  // namespace smallcover
