#include <charconv>
#include <sstream>
#include <string>

#include "smallcover/error.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

namespace {

constexpr std::string_view kTetrahedron = R"(dim=3
face 0: 0 2 1
face 1: 0 1 3
face 2: 1 2 3
face 3: 0 3 2
)";

// Bottom, top, then the four sides.
constexpr std::string_view kCube = R"(dim=3
face 0: 3 2 1 0
face 1: 4 5 6 7
face 2: 0 1 5 4
face 3: 1 2 6 5
face 4: 2 3 7 6
face 5: 3 0 4 7
)";

// Top pentagon 0..4, upper zigzag 5..9 / 10..14, bottom pentagon 15..19.
constexpr std::string_view kDodecahedron = R"(dim=3
face 0: 0 1 2 3 4
face 1: 5 10 6 1 0
face 2: 6 11 7 2 1
face 3: 7 12 8 3 2
face 4: 8 13 9 4 3
face 5: 9 14 5 0 4
face 6: 10 15 16 11 6
face 7: 11 16 17 12 7
face 8: 12 17 18 13 8
face 9: 13 18 19 14 9
face 10: 14 19 15 10 5
face 11: 19 18 17 16 15
)";

std::string polygon_text(int k) {
  std::ostringstream out;
  out << "dim=2\n";
  for (int i = 0; i < k; ++i) out << "face " << i << ": " << i << ' ' << (i + 1) % k << '\n';
  return out.str();
}

std::string prism_text(int k) {
  std::ostringstream out;
  out << "dim=3\nface 0:";
  for (int i = k - 1; i >= 0; --i) out << ' ' << i;
  out << "\nface 1:";
  for (int i = 0; i < k; ++i) out << ' ' << k + i;
  out << '\n';
  for (int i = 0; i < k; ++i)
    out << "face " << i + 2 << ": " << i << ' ' << (i + 1) % k << ' ' << k + (i + 1) % k << ' ' << k + i << '\n';
  return out.str();
}

// Parses "<k><suffix>" such as "6-prism"; returns 0 on mismatch.
int leading_count(std::string_view name, std::string_view suffix) {
  if (name.size() <= suffix.size() || name.substr(name.size() - suffix.size()) != suffix) return 0;
  const auto digits = name.substr(0, name.size() - suffix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return 0;
  return k;
}

}  // namespace

Polytope builtin(std::string_view name) {
  std::string text;
  if (name == "triangle") {
    text = polygon_text(3);
  } else if (name == "square") {
    text = polygon_text(4);
  } else if (name == "pentagon") {
    text = polygon_text(5);
  } else if (name == "tetrahedron") {
    text = kTetrahedron;
  } else if (name == "cube") {
    text = kCube;
  } else if (name == "dodecahedron") {
    text = kDodecahedron;
  } else if (int k = leading_count(name, "-prism"); k >= 3) {
    text = prism_text(k);
  } else if (int g = leading_count(name, "-gon"); g >= 3) {
    text = polygon_text(g);
  } else {
    throw Error("polytope", "unknown builtin '" + std::string(name) + "' (available: " + [] {
      std::string all;
      for (const auto& n : builtin_names()) all += (all.empty() ? "" : ", ") + n;
      return all;
    }() + ")");
  }
  Polytope p = parse_polytope(text);
  require_valid(p);
  return p;
}

std::vector<std::string> builtin_names() {
  return {"triangle", "square", "pentagon", "<k>-gon", "tetrahedron", "cube", "dodecahedron", "<k>-prism"};
}

}  // namespace smallcover
