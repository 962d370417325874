#include "smallcover/csv.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "smallcover/error.hpp"
#include "smallcover/h_vector.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "csv";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T field(std::string_view s, int line, const char* name) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(kModule, line, 1, std::string("bad ") + name + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

std::string tower_csv(const TowerState& t) {
  std::ostringstream out;
  out << "j,V,E,F,k,index,h1\n";
  for (std::size_t j = 0; j < t.levels.size(); ++j) {
    const auto& level = t.levels[j];
    const auto& p = level.polytope;
    out << j << ',' << p.num_vertices() << ',' << p.edges().size() << ',' << p.num_facets() << ',';
    if (level.doubling_face) out << level.k;
    out << ',' << level.index_over_base << ',' << h_vector(p)[1] << '\n';
  }
  return out.str();
}

TowerProfile parse_tower_csv(std::string_view text) {
  TowerProfile profile;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "j,V,E,F,k,index,h1") throw ParseError(kModule, line_no, 1, "expected header 'j,V,E,F,k,index,h1'");
      header = true;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 7) throw ParseError(kModule, line_no, 1, "expected 7 fields, got " + std::to_string(cells.size()));
    LevelProfile level;
    level.j = field<int>(cells[0], line_no, "j");
    level.vertices = field<std::int64_t>(cells[1], line_no, "V");
    level.edges = field<std::int64_t>(cells[2], line_no, "E");
    level.faces = field<std::int64_t>(cells[3], line_no, "F");
    if (!cells[4].empty()) level.k = field<int>(cells[4], line_no, "k");
    level.index = field<std::uint64_t>(cells[5], line_no, "index");
    const auto h1 = field<std::int64_t>(cells[6], line_no, "h1");
    if (level.j != static_cast<int>(profile.levels.size())) throw ParseError(kModule, line_no, 1, "levels must be numbered 0, 1, 2, ...");
    if (level.vertices % 2 != 0 || h1 != level.vertices / 2 - 1) throw ParseError(kModule, line_no, 1, "h1 is not V/2 - 1");
    profile.levels.push_back(level);
  }
  if (profile.levels.empty()) throw ParseError(kModule, std::max(line_no, 1), 1, "no tower rows");
  return profile;
}

std::string rgr_csv(const GradientReport& report, const RgrOptions& options) {
  std::ostringstream out;
  out << "j,index,V,b1_lower,ratio,paper_ratio,commensurable_b1,atkinson_pass";
  if (options.base_rank) out << ",rs_upper";
  out << '\n';
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const auto& g = report.levels[i];
    out << g.j << ',' << g.index << ',' << g.vertices << ',' << g.b1_lower << ',' << to_decimal(g.ratio) << ','
        << to_decimal(g.paper_ratio) << ',' << g.commensurable_b1 << ',';
    if (options.atkinson && options.atkinson->precondition_ok && i < options.atkinson->levels.size())
      out << (options.atkinson->levels[i].pass ? "pass" : "fail");
    else
      out << "na";
    if (options.base_rank) out << ',' << rs_upper_bound(*options.base_rank, static_cast<std::int64_t>(g.index));
    out << '\n';
  }
  return out.str();
}

}  // namespace smallcover
