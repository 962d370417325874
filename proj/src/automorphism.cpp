#include <array>
#include <map>

#include "smallcover/error.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

namespace {

// A flag is a maximal chain vertex < (edge <) facet. For dim 2 the edge slot
// is unused. `swap[i][x]` is the unique flag differing from x in rank i.
struct FlagSystem {
  int ranks = 0;
  std::vector<std::array<int, 3>> flags;  // (vertex, edge, facet)
  std::vector<std::vector<int>> swap;
};

FlagSystem build_flags(const Polytope& p) {
  FlagSystem fs;
  if (p.dim() == 2) {
    fs.ranks = 2;
    std::map<std::pair<int, int>, int> index;
    for (int f = 0; f < p.num_facets(); ++f)
      for (int v : p.facet(f)) {
        index[{v, f}] = static_cast<int>(fs.flags.size());
        fs.flags.push_back({v, -1, f});
      }
    fs.swap.assign(2, std::vector<int>(fs.flags.size()));
    for (std::size_t x = 0; x < fs.flags.size(); ++x) {
      const auto [v, unused, f] = fs.flags[x];
      const auto facet = p.facet(f);
      const int other_v = facet[0] == v ? facet[1] : facet[0];
      const auto& vf = p.vertex_facets()[static_cast<std::size_t>(v)];
      const int other_f = vf[0] == f ? vf[1] : vf[0];
      fs.swap[0][x] = index.at({other_v, f});
      fs.swap[1][x] = index.at({v, other_f});
    }
    return fs;
  }

  fs.ranks = 3;
  std::map<std::array<int, 3>, int> index;
  // Edges of facet f through vertex v.
  std::map<std::pair<int, int>, std::vector<int>> facet_vertex_edges;
  for (std::size_t e = 0; e < p.edges().size(); ++e) {
    const Edge& edge = p.edges()[e];
    for (int f : edge.facets)
      for (int v : {edge.a, edge.b}) {
        index[{v, static_cast<int>(e), f}] = static_cast<int>(fs.flags.size());
        fs.flags.push_back({v, static_cast<int>(e), f});
        facet_vertex_edges[{f, v}].push_back(static_cast<int>(e));
      }
  }
  fs.swap.assign(3, std::vector<int>(fs.flags.size()));
  for (std::size_t x = 0; x < fs.flags.size(); ++x) {
    const auto [v, e, f] = fs.flags[x];
    const Edge& edge = p.edges()[static_cast<std::size_t>(e)];
    const int other_v = edge.a == v ? edge.b : edge.a;
    const auto& fe = facet_vertex_edges.at({f, v});
    const int other_e = fe[0] == e ? fe[1] : fe[0];
    const int other_f = edge.facets[0] == f ? edge.facets[1] : edge.facets[0];
    fs.swap[0][x] = index.at({other_v, e, f});
    fs.swap[1][x] = index.at({v, other_e, f});
    fs.swap[2][x] = index.at({v, e, other_f});
  }
  return fs;
}

}  // namespace

FacePermutation compose(const FacePermutation& a, const FacePermutation& b) {
  FacePermutation out;
  out.facet_map.resize(b.facet_map.size());
  out.vertex_map.resize(b.vertex_map.size());
  for (std::size_t i = 0; i < b.facet_map.size(); ++i)
    out.facet_map[i] = a.facet_map.at(static_cast<std::size_t>(b.facet_map[i]));
  for (std::size_t i = 0; i < b.vertex_map.size(); ++i)
    out.vertex_map[i] = a.vertex_map.at(static_cast<std::size_t>(b.vertex_map[i]));
  return out;
}

FacePermutation inverse(const FacePermutation& a) {
  FacePermutation out;
  out.facet_map.resize(a.facet_map.size());
  out.vertex_map.resize(a.vertex_map.size());
  for (std::size_t i = 0; i < a.facet_map.size(); ++i) out.facet_map[static_cast<std::size_t>(a.facet_map[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < a.vertex_map.size(); ++i) out.vertex_map[static_cast<std::size_t>(a.vertex_map[i])] = static_cast<int>(i);
  return out;
}

std::vector<FacePermutation> automorphism_group(const Polytope& p) {
  require_valid(p);
  const FlagSystem fs = build_flags(p);
  const auto count = fs.flags.size();
  std::vector<FacePermutation> group;

  std::vector<int> image(count);
  std::vector<int> queue;
  queue.reserve(count);
  for (std::size_t target = 0; target < count; ++target) {
    std::fill(image.begin(), image.end(), -1);
    image[0] = static_cast<int>(target);
    queue.assign(1, 0);
    bool consistent = true;
    for (std::size_t head = 0; head < queue.size() && consistent; ++head) {
      const int x = queue[head];
      for (int r = 0; r < fs.ranks; ++r) {
        const int y = fs.swap[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)];
        const int wanted = fs.swap[static_cast<std::size_t>(r)][static_cast<std::size_t>(image[static_cast<std::size_t>(x)])];
        int& slot = image[static_cast<std::size_t>(y)];
        if (slot == -1) {
          slot = wanted;
          queue.push_back(y);
        } else if (slot != wanted) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent || queue.size() != count) continue;

    FacePermutation g;
    g.facet_map.assign(static_cast<std::size_t>(p.num_facets()), -1);
    g.vertex_map.assign(static_cast<std::size_t>(p.num_vertices()), -1);
    for (std::size_t x = 0; x < count && consistent; ++x) {
      const auto& from = fs.flags[x];
      const auto& to = fs.flags[static_cast<std::size_t>(image[x])];
      int& fv = g.vertex_map[static_cast<std::size_t>(from[0])];
      int& ff = g.facet_map[static_cast<std::size_t>(from[2])];
      if ((fv != -1 && fv != to[0]) || (ff != -1 && ff != to[2])) consistent = false;
      fv = to[0];
      ff = to[2];
    }
    if (consistent) group.push_back(std::move(g));
  }
  return group;
}

}  // namespace smallcover
