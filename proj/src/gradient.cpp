#include "smallcover/gradient.hpp"

#include <algorithm>
#include <cctype>

#include "smallcover/error.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "gradient";

Rational pow2(int e) { return Rational(BigInt(1) << e); }

std::vector<int> observed_ks(const TowerProfile& t) {
  std::vector<int> ks;
  for (const auto& level : t.levels) {
    if (!level.k) break;
    ks.push_back(*level.k);
  }
  return ks;
}

void require_even(const LevelProfile& level) {
  if (level.vertices % 2 != 0)
    throw Error(kModule, "level " + std::to_string(level.j) + " has odd vertex count " + std::to_string(level.vertices));
}

}  // namespace

TowerProfile profile(const TowerState& t) {
  TowerProfile out;
  for (std::size_t j = 0; j < t.levels.size(); ++j) {
    const auto& level = t.levels[j];
    LevelProfile lp;
    lp.j = static_cast<int>(j);
    lp.vertices = level.polytope.num_vertices();
    lp.edges = static_cast<std::int64_t>(level.polytope.edges().size());
    lp.faces = level.polytope.num_facets();
    if (level.doubling_face) lp.k = level.k;
    lp.index = level.index_over_base;
    out.levels.push_back(lp);
  }
  return out;
}

std::int64_t rs_upper_bound(std::int64_t base_rank, std::int64_t index) {
  if (base_rank < 1 || index < 1) throw Error(kModule, "rank and index must be positive");
  std::int64_t product = 0;
  if (__builtin_mul_overflow(index, base_rank - 1, &product) || product == INT64_MAX)
    throw Error(kModule, "Reidemeister-Schreier bound overflows 64 bits");
  return product + 1;
}

std::vector<std::int64_t> b1_bound_sequence(const TowerProfile& t) {
  std::vector<std::int64_t> out;
  for (const auto& level : t.levels) {
    require_even(level);
    out.push_back(level.vertices / 2 - 1);
  }
  return out;
}

std::vector<std::int64_t> b1_bound_sequence(const TowerState& t) { return b1_bound_sequence(profile(t)); }

Rational closed_form_limit(std::int64_t v0, std::span<const int> ks) {
  if (ks.empty()) throw Error(kModule, "closed_form_limit needs at least one k");
  Rational sum = 0;
  const int last = static_cast<int>(ks.size()) - 1;
  for (int i = 0; i < last; ++i) sum += Rational(ks[static_cast<std::size_t>(i)]) / pow2(i);
  // k_last * (2^-last + 2^-(last+1) + ...) = k_last * 2^(1-last)
  sum += Rational(ks.back()) * 2 / pow2(last);
  return (Rational(v0) - sum) / 2;
}

GradientReport rgr_ratios(const TowerProfile& t) {
  if (t.levels.empty()) throw Error(kModule, "empty tower");
  GradientReport report;
  for (const auto& level : t.levels) {
    require_even(level);
    GradientLevel g;
    g.j = level.j;
    g.index = level.index;
    g.vertices = level.vertices;
    g.b1_lower = level.vertices / 2 - 1;
    g.commensurable_b1 = level.vertices / 2 - 2;
    const Rational denom = Rational(BigInt(level.index)) * 2;
    g.ratio = Rational(level.vertices - 4) / denom;
    g.paper_ratio = Rational(level.vertices - 3) / denom;
    report.levels.push_back(std::move(g));
  }
  const auto ks = observed_ks(t);
  report.closed_form = ks.size() == 1 || (ks.size() >= 2 && ks[ks.size() - 1] == ks[ks.size() - 2]);
  report.limit_estimate = report.closed_form ? closed_form_limit(t.levels.front().vertices, ks) : report.levels.back().ratio;
  return report;
}

GradientReport rgr_ratios(const TowerState& t) { return rgr_ratios(profile(t)); }

AtkinsonInterval atkinson_interval(std::int64_t vertices, const Rational& c, const Rational& d) {
  if (c <= 0 || d <= 0) throw Error(kModule, "Atkinson constants must be positive");
  return {vertices, c, d, c * (vertices - 8), d * (vertices - 10)};
}

bool AtkinsonReport::all_pass() const {
  return precondition_ok && std::all_of(levels.begin(), levels.end(), [](const AtkinsonLevel& l) { return l.pass; });
}

AtkinsonReport atkinson_check(const TowerProfile& t, const Rational& c, const Rational& d) {
  if (c <= 0 || d <= 0) throw Error(kModule, "Atkinson constants must be positive");
  if (t.levels.empty()) throw Error(kModule, "empty tower");
  AtkinsonReport report;
  report.rho = c / d;
  const std::int64_t v0 = t.levels.front().vertices;
  if (v0 <= 8) {
    report.precondition_message = "V_0 = " + std::to_string(v0) + " is not > 8; no compact right-angled realization";
    return report;
  }
  report.precondition_ok = true;
  for (const auto& level : t.levels) {
    AtkinsonLevel a;
    a.j = level.j;
    a.volume_factor = level.index;
    a.required_vertices = Rational(BigInt(level.index)) * report.rho * (v0 - 8) + 10;
    a.pass = Rational(level.vertices) >= a.required_vertices;
    report.levels.push_back(std::move(a));

    const Rational bound = Rational(level.vertices - 10) / (Rational(BigInt(level.index)) * (v0 - 8));
    if (!report.max_rho || bound < *report.max_rho) report.max_rho = bound;
  }
  return report;
}

AtkinsonReport atkinson_check(const TowerState& t, const Rational& c, const Rational& d) {
  return atkinson_check(profile(t), c, d);
}

CommensurableBounds commensurable_bounds(const TowerProfile& t) {
  CommensurableBounds out;
  for (const auto& level : t.levels) {
    require_even(level);
    out.b1_lower.push_back(level.vertices / 2 - 2);
    out.index_upper.push_back(level.index);
  }
  return out;
}

CommensurableBounds commensurable_bounds(const TowerState& t) { return commensurable_bounds(profile(t)); }

std::string to_decimal(const Rational& x, int places) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const bool negative = num < 0;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt magnitude = negative ? BigInt(-num) : num;
  const BigInt scaled = (magnitude * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  const BigInt remainder = scaled % scale;
  std::string frac = remainder.str();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  return out;
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw Error(kModule, "invalid rational '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(kModule, "zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace smallcover
