#include "smallcover/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "smallcover/error.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "polytope";

std::string join_ids(std::span<const int> ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

// Connected components of a graph given as adjacency lists.
int count_components(const std::vector<std::vector<int>>& adj, std::span<const char> removed = {}) {
  const auto n = adj.size();
  std::vector<char> seen(n, 0);
  int components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || (!removed.empty() && removed[s])) continue;
    ++components;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)] || (!removed.empty() && removed[static_cast<std::size_t>(w)])) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return components;
}

std::vector<std::vector<int>> vertex_graph(const Polytope& p) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(p.num_vertices()));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  if (p.dim() == 3) {
    for (const Edge& e : p.edges()) link(e.a, e.b);
  } else {
    for (const auto& f : p.facets())
      if (f.size() == 2) link(f[0], f[1]);
  }
  return adj;
}

}  // namespace

Polytope::Polytope(int dim, int num_vertices, std::vector<std::vector<VertexId>> facets)
    : dim_(dim), num_vertices_(num_vertices), facets_(std::move(facets)) {
  if (dim_ != 2 && dim_ != 3) throw Error(kModule, "dimension must be 2 or 3, got " + std::to_string(dim_));
  if (num_vertices_ < 0) throw Error(kModule, "negative vertex count");
  vertex_facets_.resize(static_cast<std::size_t>(num_vertices_));
  std::map<std::pair<int, int>, std::size_t> edge_index;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    const auto& cycle = facets_[f];
    if (cycle.size() < 2) throw Error(kModule, "facet " + std::to_string(f) + " has fewer than 2 vertices");
    std::set<int> seen;
    for (int v : cycle) {
      if (v < 0 || v >= num_vertices_)
        throw Error(kModule, "facet " + std::to_string(f) + " references vertex " + std::to_string(v) + " out of range");
      if (!seen.insert(v).second)
        throw Error(kModule, "facet " + std::to_string(f) + " lists vertex " + std::to_string(v) + " twice");
      vertex_facets_[static_cast<std::size_t>(v)].push_back(static_cast<FacetId>(f));
    }
    if (dim_ != 3) continue;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      if (cycle.size() == 2 && i == 1) break;
      if (a > b) std::swap(a, b);
      auto [it, inserted] = edge_index.try_emplace({a, b}, edges_.size());
      if (inserted) edges_.push_back(Edge{a, b, {}});
      edges_[it->second].facets.push_back(static_cast<FacetId>(f));
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

int Polytope::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                             [](const Edge& e, const std::pair<int, int>& key) { return std::tie(e.a, e.b) < std::tie(key.first, key.second); });
  if (it == edges_.end() || it->a != a || it->b != b) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::vector<std::int64_t> FVector::dual() const {
  if (dim == 2) return {edges, vertices};
  return {faces, edges, vertices};
}

// --- text format ----------------------------------------------------------

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Polytope parse_polytope(std::string_view text) {
  int dim = 0;
  bool have_dim = false;
  std::map<int, std::vector<int>> faces;
  std::map<int, int> face_line;
  std::set<int> vertex_ids;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!have_dim) {
      // Accept "dim=3" and "dim = 3".
      std::string joined;
      for (const auto& t : tokens) joined += t.text;
      if (joined.rfind("dim=", 0) != 0)
        throw ParseError(kModule, line_no, tokens[0].column, "expected 'dim=<n>' header");
      if (!parse_int(std::string_view(joined).substr(4), dim) || (dim != 2 && dim != 3))
        throw ParseError(kModule, line_no, tokens[0].column, "dimension must be 2 or 3");
      have_dim = true;
      continue;
    }

    if (tokens[0].text != "face")
      throw ParseError(kModule, line_no, tokens[0].column, "expected 'face <id>: <vertices>'");
    if (tokens.size() < 2) throw ParseError(kModule, line_no, tokens[0].column, "missing facet id");

    // The id token may carry the colon ("3:") or be followed by a lone ":".
    std::string_view id_text = tokens[1].text;
    std::size_t first_vertex = 2;
    if (!id_text.empty() && id_text.back() == ':') {
      id_text.remove_suffix(1);
    } else if (tokens.size() > 2 && tokens[2].text == ":") {
      first_vertex = 3;
    } else {
      throw ParseError(kModule, line_no, tokens[1].column + static_cast<int>(id_text.size()), "expected ':' after facet id");
    }
    int id = 0;
    if (!parse_int(id_text, id) || id < 0) throw ParseError(kModule, line_no, tokens[1].column, "invalid facet id");
    if (faces.count(id)) throw ParseError(kModule, line_no, tokens[1].column, "duplicate facet id " + std::to_string(id));

    std::vector<int> cycle;
    for (std::size_t t = first_vertex; t < tokens.size(); ++t) {
      int v = 0;
      if (!parse_int(tokens[t].text, v) || v < 0)
        throw ParseError(kModule, line_no, tokens[t].column, "invalid vertex id '" + std::string(tokens[t].text) + "'");
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError(kModule, line_no, tokens[t].column, "vertex " + std::to_string(v) + " listed twice in facet " + std::to_string(id));
      cycle.push_back(v);
      vertex_ids.insert(v);
    }
    if (cycle.size() < 2) throw ParseError(kModule, line_no, tokens[0].column, "facet " + std::to_string(id) + " needs at least 2 vertices");
    faces.emplace(id, std::move(cycle));
    face_line.emplace(id, line_no);
    if (end == text.size()) break;
  }

  if (!have_dim) throw ParseError(kModule, std::max(line_no, 1), 1, "missing 'dim=<n>' header");
  if (faces.empty()) throw ParseError(kModule, line_no, 1, "no facets");

  int expected = 0;
  for (const auto& [id, line] : face_line) {
    if (id != expected) throw ParseError(kModule, line, 1, "facet ids must be contiguous from 0; missing " + std::to_string(expected));
    ++expected;
  }
  int expected_vertex = 0;
  for (int v : vertex_ids) {
    if (v != expected_vertex) throw ParseError(kModule, line_no, 1, "vertex id gap: " + std::to_string(expected_vertex) + " is never used");
    ++expected_vertex;
  }

  std::vector<std::vector<int>> facets;
  facets.reserve(faces.size());
  for (auto& [id, cycle] : faces) facets.push_back(std::move(cycle));
  return Polytope(dim, static_cast<int>(vertex_ids.size()), std::move(facets));
}

std::string serialize(const Polytope& p) {
  std::ostringstream out;
  out << "dim=" << p.dim() << '\n';
  for (int f = 0; f < p.num_facets(); ++f) {
    out << "face " << f << ':';
    for (int v : p.facet(f)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

// --- validation -----------------------------------------------------------

ValidationReport validate(const Polytope& p, bool strict) {
  ValidationReport report;
  auto fail = [&](std::string rule, std::string message, std::vector<int> ids) {
    report.violations.push_back({std::move(rule), std::move(message), std::move(ids)});
  };
  const int n = p.dim();
  const int min_facets = n == 3 ? 4 : 3;
  if (p.num_facets() < min_facets)
    fail("facet-count", "a simple " + std::to_string(n) + "-polytope needs at least " + std::to_string(min_facets) + " facets", {});

  for (int f = 0; f < p.num_facets(); ++f) {
    const auto size = p.facet(f).size();
    if (n == 3 && size < 3) fail("facet-size", "face has fewer than 3 vertices", {f});
    if (n == 2 && size != 2) fail("facet-size", "edge facet must list exactly 2 vertices", {f});
  }

  for (int v = 0; v < p.num_vertices(); ++v) {
    const auto deg = p.vertex_facets()[static_cast<std::size_t>(v)].size();
    if (deg != static_cast<std::size_t>(n))
      fail("vertex-degree", "vertex lies in " + std::to_string(deg) + " facets, expected " + std::to_string(n), {v});
  }

  // Facet adjacency for connectivity: shared edge (n=3) or shared vertex (n=2).
  std::vector<std::vector<int>> facet_adj(static_cast<std::size_t>(p.num_facets()));
  if (n == 3) {
    for (const Edge& e : p.edges()) {
      if (e.facets.size() != 2) {
        fail("edge-faces", "edge in " + std::to_string(e.facets.size()) + " face" + (e.facets.size() == 1 ? "" : "s"), {e.a, e.b});
        continue;
      }
      facet_adj[static_cast<std::size_t>(e.facets[0])].push_back(e.facets[1]);
      facet_adj[static_cast<std::size_t>(e.facets[1])].push_back(e.facets[0]);
    }
    const auto V = static_cast<std::int64_t>(p.num_vertices());
    const auto E = static_cast<std::int64_t>(p.edges().size());
    const auto F = static_cast<std::int64_t>(p.num_facets());
    if (V - E + F != 2) fail("euler", "V - E + F = " + std::to_string(V - E + F) + ", expected 2", {});

    // Two facets meet in nothing or in exactly one common edge.
    for (int f = 0; f < p.num_facets(); ++f) {
      std::map<int, std::vector<int>> shared;  // later facet -> common vertices
      for (int v : p.facet(f))
        for (int g : p.vertex_facets()[static_cast<std::size_t>(v)])
          if (g > f) shared[g].push_back(v);
      for (auto& [g, common] : shared) {
        bool ok = common.size() == 2;
        if (ok) {
          const int e = p.find_edge(common[0], common[1]);
          ok = e >= 0 && std::count(p.edges()[static_cast<std::size_t>(e)].facets.begin(),
                                    p.edges()[static_cast<std::size_t>(e)].facets.end(), f) &&
               std::count(p.edges()[static_cast<std::size_t>(e)].facets.begin(),
                          p.edges()[static_cast<std::size_t>(e)].facets.end(), g);
        }
        if (!ok) fail("facet-intersection", "facets meet in something other than a single edge", {f, g});
      }
    }
  } else {
    for (const auto& fs : p.vertex_facets()) {
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          facet_adj[static_cast<std::size_t>(fs[i])].push_back(fs[j]);
          facet_adj[static_cast<std::size_t>(fs[j])].push_back(fs[i]);
        }
    }
  }
  if (p.num_facets() > 0 && count_components(facet_adj) != 1) fail("connected", "facets do not form a connected boundary", {});

  if (strict && n == 3 && report.ok()) {
    const auto adj = vertex_graph(p);
    const auto V = static_cast<std::size_t>(p.num_vertices());
    std::vector<char> removed(V, 0);
    for (std::size_t a = 0; a < V; ++a)
      for (std::size_t b = a + 1; b < V; ++b) {
        removed[a] = removed[b] = 1;
        if (count_components(adj, removed) > 1)
          fail("3-connected", "removing two vertices disconnects the vertex graph", {static_cast<int>(a), static_cast<int>(b)});
        removed[a] = removed[b] = 0;
      }
  }
  return report;
}

void require_valid(const Polytope& p) {
  const auto report = validate(p);
  if (report.ok()) return;
  std::string msg = "invalid polytope:";
  for (const auto& v : report.violations) msg += " [" + v.rule + "] " + v.message + (v.ids.empty() ? "" : " (" + join_ids(v.ids) + ")") + ";";
  msg.pop_back();
  throw Error(kModule, msg);
}

FVector f_vector(const Polytope& p) {
  require_valid(p);
  FVector fv;
  fv.dim = p.dim();
  fv.vertices = p.num_vertices();
  if (p.dim() == 3) {
    fv.edges = static_cast<std::int64_t>(p.edges().size());
    fv.faces = p.num_facets();
  } else {
    fv.edges = p.num_facets();
  }
  return fv;
}

Polytope relabel(const Polytope& p, std::span<const FacetId> facet_perm, std::span<const VertexId> vertex_perm) {
  if (facet_perm.size() != static_cast<std::size_t>(p.num_facets()) ||
      vertex_perm.size() != static_cast<std::size_t>(p.num_vertices()))
    throw Error(kModule, "relabel: permutation size mismatch");
  std::vector<std::vector<int>> facets(facet_perm.size());
  for (int f = 0; f < p.num_facets(); ++f) {
    auto& out = facets.at(static_cast<std::size_t>(facet_perm[static_cast<std::size_t>(f)]));
    if (!out.empty()) throw Error(kModule, "relabel: facet map is not a permutation");
    for (int v : p.facet(f)) out.push_back(vertex_perm[static_cast<std::size_t>(v)]);
  }
  return Polytope(p.dim(), p.num_vertices(), std::move(facets));
}

// --- right-angled realizability --------------------------------------------

ValidationReport pogorelov_check(const Polytope& p) {
  if (p.dim() != 3) throw Error(kModule, "pogorelov_check requires a 3-polytope");
  require_valid(p);
  ValidationReport report;

  const auto adj = vertex_graph(p);
  for (int v = 0; v < p.num_vertices(); ++v)
    if (adj[static_cast<std::size_t>(v)].size() != 3)
      report.violations.push_back({"trivalent", "vertex has valence " + std::to_string(adj[static_cast<std::size_t>(v)].size()), {v}});

  for (int f = 0; f < p.num_facets(); ++f)
    if (p.facet(f).size() < 5)
      report.violations.push_back({"face-size", "face has " + std::to_string(p.facet(f).size()) +
                                                    " edges, right-angled faces need at least 5 (Pogorelov condition)", {f}});

  const auto F = static_cast<std::size_t>(p.num_facets());
  std::vector<std::vector<char>> touching(F, std::vector<char>(F, 0));
  for (const Edge& e : p.edges()) {
    touching[static_cast<std::size_t>(e.facets[0])][static_cast<std::size_t>(e.facets[1])] = 1;
    touching[static_cast<std::size_t>(e.facets[1])][static_cast<std::size_t>(e.facets[0])] = 1;
  }
  auto share_vertex = [&](int a, int b, int c) {
    for (int v : p.facet(a)) {
      const auto& fs = p.vertex_facets()[static_cast<std::size_t>(v)];
      if (std::count(fs.begin(), fs.end(), b) && std::count(fs.begin(), fs.end(), c)) return true;
    }
    return false;
  };

  // 3-circuits: pairwise adjacent facets without a common vertex.
  for (std::size_t a = 0; a < F; ++a)
    for (std::size_t b = a + 1; b < F; ++b) {
      if (!touching[a][b]) continue;
      for (std::size_t c = b + 1; c < F; ++c) {
        if (!touching[a][c] || !touching[b][c]) continue;
        const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
        if (!share_vertex(ia, ib, ic))
          report.violations.push_back({"prismatic-3-circuit", "three pairwise adjacent faces with no common vertex (Pogorelov condition)", {ia, ib, ic}});
      }
    }

  // 4-circuits: chordless dual 4-cycles a-b-c-d. Reported once, with a the
  // smallest id and a < c.
  for (std::size_t a = 0; a < F; ++a)
    for (std::size_t c = a + 1; c < F; ++c) {
      if (touching[a][c]) continue;
      std::vector<std::size_t> common;
      for (std::size_t x = 0; x < F; ++x)
        if (touching[a][x] && touching[c][x]) common.push_back(x);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const auto b = common[i], d = common[j];
          if (touching[b][d] || b < a) continue;
          report.violations.push_back({"prismatic-4-circuit", "chordless cycle of four faces (Pogorelov condition)",
                                       {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(d)}});
        }
    }
  return report;
}

}  // namespace smallcover
