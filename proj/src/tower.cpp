#include "smallcover/tower.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "smallcover/error.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "tower";
constexpr int kMaxDepth = 62;

}  // namespace

Doubling double_with_origin(const Polytope& p, FacetId face) {
  if (p.dim() != 3) throw Error(kModule, "doubling needs a 3-polytope");
  if (face < 0 || face >= p.num_facets()) throw Error(kModule, "unknown facet " + std::to_string(face));
  require_valid(p);

  const auto mirror = p.facet(face);
  const auto V = static_cast<std::size_t>(p.num_vertices());
  std::vector<char> on_mirror(V, 0);
  for (int v : mirror) on_mirror[static_cast<std::size_t>(v)] = 1;

  std::vector<char> is_neighbour(static_cast<std::size_t>(p.num_facets()), 0);
  for (std::size_t i = 0; i < mirror.size(); ++i) {
    const int e = p.find_edge(mirror[i], mirror[(i + 1) % mirror.size()]);
    const auto& fs = p.edges()[static_cast<std::size_t>(e)].facets;
    is_neighbour[static_cast<std::size_t>(fs[0] == face ? fs[1] : fs[0])] = 1;
  }

  // Surviving vertices: first copy, then mirror copy, each in old id order.
  std::vector<int> id_a(V, -1), id_b(V, -1);
  int next = 0;
  for (std::size_t v = 0; v < V; ++v)
    if (!on_mirror[v]) id_a[v] = next++;
  for (std::size_t v = 0; v < V; ++v)
    if (!on_mirror[v]) id_b[v] = next++;

  Doubling out{Polytope(3, 0, {}), {}};
  std::vector<std::vector<VertexId>> facets;
  for (int f = 0; f < p.num_facets(); ++f) {
    if (f == face) continue;
    const auto cycle = p.facet(f);
    std::vector<VertexId> mapped;
    if (is_neighbour[static_cast<std::size_t>(f)]) {
      // Rotate so the shared mirror edge is (cycle[s], cycle[s+1]); the rest
      // of the cycle is the path that survives in each copy.
      const std::size_t m = cycle.size();
      std::size_t s = 0;
      while (s < m && !(on_mirror[static_cast<std::size_t>(cycle[s])] && on_mirror[static_cast<std::size_t>(cycle[(s + 1) % m])])) ++s;
      std::vector<int> path;
      for (std::size_t t = 2; t < m; ++t) path.push_back(cycle[(s + t) % m]);
      for (int v : path) mapped.push_back(id_a[static_cast<std::size_t>(v)]);
      for (auto it = path.rbegin(); it != path.rend(); ++it) mapped.push_back(id_b[static_cast<std::size_t>(*it)]);
    } else {
      for (int v : cycle) mapped.push_back(id_a[static_cast<std::size_t>(v)]);
    }
    if (std::count(mapped.begin(), mapped.end(), -1))
      throw Error(kModule, "facet " + std::to_string(f) + " touches facet " + std::to_string(face) + " outside a single edge");
    facets.push_back(std::move(mapped));
    out.origin.push_back(f);
  }
  for (int f = 0; f < p.num_facets(); ++f) {
    if (f == face || is_neighbour[static_cast<std::size_t>(f)]) continue;
    const auto cycle = p.facet(f);
    std::vector<VertexId> mapped;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) mapped.push_back(id_b[static_cast<std::size_t>(*it)]);
    facets.push_back(std::move(mapped));
    out.origin.push_back(f);
  }

  try {
    out.polytope = Polytope(3, next, std::move(facets));
  } catch (const Error& e) {
    throw Error(kModule, "doubling along facet " + std::to_string(face) + " is degenerate (" + e.what() + ")");
  }
  if (!validate(out.polytope).ok())
    throw Error(kModule, "doubling along facet " + std::to_string(face) + " does not yield a simple polytope");
  return out;
}

Polytope double_along(const Polytope& p, FacetId face) { return double_with_origin(p, face).polytope; }

namespace {

Coloring inherit(const Coloring& c, const Doubling& d) {
  std::vector<Color> colors;
  colors.reserve(d.origin.size());
  for (FacetId f : d.origin) colors.push_back(c.colors[static_cast<std::size_t>(f)]);
  Coloring out(c.n, std::move(colors));
  if (!is_characteristic(d.polytope, out)) throw std::logic_error("tower: propagated coloring lost the characteristic property");
  return out;
}

}  // namespace

Coloring propagate_coloring(const Polytope& p, const Coloring& c, FacetId face) {
  require_characteristic(p, c);
  return inherit(c, double_with_origin(p, face));
}

Strategy Strategy::parse(std::string_view text) {
  Strategy s;
  if (text == "min-face" || text == "min-vertex-face") {
    s.kind = Kind::min_vertex_face;
  } else if (text == "round-robin") {
    s.kind = Kind::round_robin;
  } else if (text.rfind("list:", 0) == 0) {
    s.kind = Kind::explicit_list;
    std::string_view rest = text.substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      int id = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
      if (ec != std::errc{} || ptr != item.data() + item.size() || id < 0)
        throw Error(kModule, "bad facet id '" + std::string(item) + "' in strategy list");
      s.faces.push_back(id);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else {
    throw Error(kModule, "unknown strategy '" + std::string(text) + "' (min-face, round-robin, list:<ids>)");
  }
  return s;
}

std::string Strategy::name() const {
  switch (kind) {
    case Kind::min_vertex_face:
      return "min-face";
    case Kind::round_robin:
      return "round-robin";
    case Kind::explicit_list: {
      std::string out = "list:";
      for (std::size_t i = 0; i < faces.size(); ++i) out += (i ? "," : "") + std::to_string(faces[i]);
      return out;
    }
  }
  return {};
}

std::optional<FacetId> Strategy::choose(const Polytope& p, int level) const {
  switch (kind) {
    case Kind::min_vertex_face: {
      FacetId best = 0;
      for (FacetId f = 1; f < p.num_facets(); ++f)
        if (p.facet(f).size() < p.facet(best).size()) best = f;
      return best;
    }
    case Kind::round_robin:
      return level % p.num_facets();
    case Kind::explicit_list:
      if (static_cast<std::size_t>(level) < faces.size()) return faces[static_cast<std::size_t>(level)];
      return std::nullopt;
  }
  return std::nullopt;
}

TowerState build_tower(const Polytope& p, const Coloring& c, const Strategy& strategy, int depth) {
  if (depth < 0) throw Error(kModule, "depth must be nonnegative");
  if (depth > kMaxDepth) throw Error(kModule, "depth above " + std::to_string(kMaxDepth) + " overflows the index");
  if (p.dim() != 3) throw Error(kModule, "towers need a 3-polytope");
  require_valid(p);
  require_characteristic(p, c);

  TowerState tower;
  tower.strategy = strategy;
  Polytope current = p;
  Coloring coloring = c;
  for (int j = 0; j <= depth; ++j) {
    TowerLevel level{current, strategy.choose(current, j), 0, std::uint64_t{1} << j, coloring};
    if (level.doubling_face) {
      if (*level.doubling_face >= current.num_facets())
        throw Error(kModule, "level " + std::to_string(j) + ": unknown facet " + std::to_string(*level.doubling_face));
      level.k = static_cast<int>(current.facet(*level.doubling_face).size());
    } else if (j < depth) {
      throw Error(kModule, "strategy " + strategy.name() + " has no facet for level " + std::to_string(j));
    }
    if (j < depth) {
      Doubling next = double_with_origin(current, *level.doubling_face);
      coloring = inherit(coloring, next);
      current = std::move(next.polytope);
    }
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

}  // namespace smallcover
