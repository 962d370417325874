#include "smallcover/small_cover.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <unordered_map>

#include "smallcover/error.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "small_cover";
constexpr int kMaxRank = 6;  // span sets are 64-bit masks over GF(2)^n

struct ColorsHash {
  std::size_t operator()(const std::vector<Color>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Color c : v) h = (h ^ c) * 1099511628211ull;
    return h;
  }
};

// Set of GF(2)^n elements as a bitmask; `add` returns span(S ∪ {c}).
std::uint64_t add_to_span(std::uint64_t span, Color c) {
  std::uint64_t out = span;
  for (std::uint64_t rest = span; rest; rest &= rest - 1) {
    const auto x = static_cast<Color>(__builtin_ctzll(rest));
    out |= std::uint64_t{1} << (x ^ c);
  }
  return out;
}

void check_shape(const Polytope& p, const Coloring& c) {
  if (c.n != p.dim())
    throw Error(kModule, "coloring has rank " + std::to_string(c.n) + " but the polytope has dimension " + std::to_string(p.dim()));
  if (c.colors.size() != static_cast<std::size_t>(p.num_facets()))
    throw Error(kModule, "coloring assigns " + std::to_string(c.colors.size()) + " facets, polytope has " + std::to_string(p.num_facets()));
}

// Table of A^{-1} for an invertible map A.
std::vector<Color> inverse_table(const LinearMap& a, int n) {
  std::vector<Color> inv(std::size_t{1} << n);
  for (Color x = 0; x < (Color{1} << n); ++x) inv[a(x)] = x;
  return inv;
}

}  // namespace

Coloring::Coloring(int rank, std::vector<Color> assignment) : n(rank), colors(std::move(assignment)) {
  if (n < 1 || n > kMaxRank) throw Error(kModule, "coloring rank must be in 1.." + std::to_string(kMaxRank));
  for (std::size_t f = 0; f < colors.size(); ++f)
    if (colors[f] == 0 || colors[f] >= (Color{1} << n))
      throw Error(kModule, "facet " + std::to_string(f) + " has invalid color " + std::to_string(colors[f]));
}

Coloring parse_coloring(std::string_view text) {
  std::vector<std::pair<int, Color>> entries;
  int rank = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string id_token, bits;
    if (!(fields >> id_token)) continue;
    if (id_token.back() != ':') {
      std::string colon;
      if (!(fields >> colon) || colon != ":") throw ParseError(kModule, line_no, 1, "expected 'facet_id: bits'");
    } else {
      id_token.pop_back();
    }
    int id = -1;
    try {
      std::size_t used = 0;
      id = std::stoi(id_token, &used);
      if (used != id_token.size() || id < 0) throw std::invalid_argument("id");
    } catch (const std::exception&) {
      throw ParseError(kModule, line_no, 1, "invalid facet id '" + id_token + "'");
    }
    if (!(fields >> bits)) throw ParseError(kModule, line_no, 1, "missing bit vector for facet " + std::to_string(id));
    std::string extra;
    if (fields >> extra) throw ParseError(kModule, line_no, 1, "trailing text '" + extra + "'");
    if (rank == 0) rank = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != rank)
      throw ParseError(kModule, line_no, 1, "bit vector length " + std::to_string(bits.size()) + " differs from " + std::to_string(rank));
    Color c = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') c |= Color{1} << i;
      else if (bits[i] != '0') throw ParseError(kModule, line_no, 1, "bit vector must contain only 0 and 1");
    }
    entries.emplace_back(id, c);
  }
  if (entries.empty()) throw ParseError(kModule, std::max(line_no, 1), 1, "empty coloring");
  std::sort(entries.begin(), entries.end());
  std::vector<Color> colors;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != static_cast<int>(i))
      throw Error(kModule, entries[i].first < static_cast<int>(i) ? "duplicate facet id " + std::to_string(entries[i].first)
                                                                  : "missing color for facet " + std::to_string(i));
    colors.push_back(entries[i].second);
  }
  return Coloring(rank, std::move(colors));
}

namespace {

std::string bits_of(Color c, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (c >> i & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

std::string serialize(const Coloring& c) {
  std::string out;
  for (std::size_t f = 0; f < c.colors.size(); ++f) out += std::to_string(f) + ": " + bits_of(c.colors[f], c.n) + "\n";
  return out;
}

std::string to_compact_string(const Coloring& c) {
  std::string out;
  for (std::size_t f = 0; f < c.colors.size(); ++f) out += (f ? " " : "") + std::to_string(f) + ":" + bits_of(c.colors[f], c.n);
  return out;
}

std::vector<LinearMap> general_linear_group(int n) {
  if (n < 1 || n > kMaxRank) throw Error(kModule, "GL rank out of range");
  std::vector<LinearMap> group;
  std::vector<Color> cols(static_cast<std::size_t>(n), 0);
  const Color top = Color{1} << n;
  // Identity first, then everything else in lexicographic column order.
  LinearMap identity;
  for (int i = 0; i < n; ++i) identity.columns.push_back(Color{1} << i);
  group.push_back(identity);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t span) -> void {
    if (i == cols.size()) {
      if (cols != identity.columns) group.push_back(LinearMap{cols});
      return;
    }
    for (Color c = 1; c < top; ++c) {
      if (span >> c & 1u) continue;
      cols[i] = c;
      self(self, i + 1, add_to_span(span, c));
    }
  };
  rec(rec, 0, 1);
  return group;
}

bool independent(std::span<const Color> vectors) {
  std::uint64_t span = 1;
  for (Color c : vectors) {
    if (c >= 64 || (span >> c & 1u)) return false;
    span = add_to_span(span, c);
  }
  return true;
}

Coloring act(const FacePermutation& sigma, const LinearMap& a, const Coloring& c) {
  Coloring out;
  out.n = c.n;
  out.colors.assign(c.colors.size(), 0);
  for (std::size_t f = 0; f < c.colors.size(); ++f) out.colors.at(static_cast<std::size_t>(sigma.facet_map[f])) = a(c.colors[f]);
  return out;
}

bool is_characteristic(const Polytope& p, const Coloring& c) {
  check_shape(p, c);
  std::vector<Color> at_vertex;
  for (const auto& fs : p.vertex_facets()) {
    at_vertex.clear();
    for (int f : fs) at_vertex.push_back(c.colors[static_cast<std::size_t>(f)]);
    if (at_vertex.size() != static_cast<std::size_t>(c.n) || !independent(at_vertex)) return false;
  }
  return true;
}

void require_characteristic(const Polytope& p, const Coloring& c) {
  if (!is_characteristic(p, c)) throw Error(kModule, "coloring is not characteristic");
}

std::uint64_t for_each_characteristic(const Polytope& p, const ColoringVisitor& visit, std::span<const Color> fixed) {
  const int n = p.dim();
  const auto F = static_cast<std::size_t>(p.num_facets());
  if (!fixed.empty() && fixed.size() != F) throw Error(kModule, "fixed assignment has wrong length");
  for (const auto& fs : p.vertex_facets())
    if (fs.size() != static_cast<std::size_t>(n)) return 0;  // no vertex admits n independent colors

  const Color top = Color{1} << n;
  Coloring current;
  current.n = n;
  current.colors.assign(F, 0);
  std::vector<std::uint64_t> span(static_cast<std::size_t>(p.num_vertices()), 1);
  std::vector<std::vector<int>> facet_vertices(F);
  for (std::size_t f = 0; f < F; ++f) facet_vertices[f].assign(p.facets()[f].begin(), p.facets()[f].end());

  std::uint64_t visited = 0;
  bool stop = false;
  std::vector<std::uint64_t> saved;
  auto rec = [&](auto&& self, std::size_t f) -> void {
    if (f == F) {
      ++visited;
      if (!visit(current)) stop = true;
      return;
    }
    const Color lo = fixed.empty() || fixed[f] == 0 ? 1 : fixed[f];
    const Color hi = fixed.empty() || fixed[f] == 0 ? top - 1 : fixed[f];
    const auto& verts = facet_vertices[f];
    for (Color c = lo; c <= hi && !stop; ++c) {
      bool ok = true;
      for (int v : verts)
        if (span[static_cast<std::size_t>(v)] >> c & 1u) {
          ok = false;
          break;
        }
      if (!ok) continue;
      const std::size_t mark = saved.size();
      for (int v : verts) {
        saved.push_back(span[static_cast<std::size_t>(v)]);
        span[static_cast<std::size_t>(v)] = add_to_span(span[static_cast<std::size_t>(v)], c);
      }
      current.colors[f] = c;
      self(self, f + 1);
      for (std::size_t i = 0; i < verts.size(); ++i) span[static_cast<std::size_t>(verts[i])] = saved[mark + i];
      saved.resize(mark);
    }
    current.colors[f] = 0;
  };
  rec(rec, 0);
  return visited;
}

std::vector<Coloring> enumerate_characteristic(const Polytope& p, unsigned threads) {
  require_valid(p);
  auto collect = [&p](std::span<const Color> fixed) {
    std::vector<Coloring> out;
    for_each_characteristic(p, [&](const Coloring& c) { out.push_back(c); return true; }, fixed);
    return out;
  };
  if (threads <= 1) return collect({});

  const Color top = Color{1} << p.dim();
  std::vector<std::future<std::vector<Coloring>>> shards;
  std::vector<std::vector<Color>> pins;
  for (Color c = 1; c < top; ++c) {
    pins.emplace_back(static_cast<std::size_t>(p.num_facets()), 0);
    pins.back()[0] = c;
  }
  // Bounded fan-out: at most `threads` shards in flight.
  std::vector<Coloring> all;
  for (std::size_t start = 0; start < pins.size(); start += threads) {
    shards.clear();
    for (std::size_t i = start; i < std::min(pins.size(), start + threads); ++i)
      shards.push_back(std::async(std::launch::async, collect, std::span<const Color>(pins[i])));
    for (auto& s : shards) {
      auto part = s.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return all;
}

std::uint64_t count_characteristic(const Polytope& p) {
  require_valid(p);
  return for_each_characteristic(p, [](const Coloring&) { return true; });
}

CoverClassification equivalence_classes(const Polytope& p, SymmetryPruning pruning) {
  require_valid(p);
  const int n = p.dim();
  const auto automorphisms = automorphism_group(p);
  const auto gl = general_linear_group(n);

  CoverClassification result;
  result.group_order_used = automorphisms.size() * gl.size();

  if (pruning == SymmetryPruning::none) {
    const auto all = enumerate_characteristic(p);
    result.total_count = all.size();
    std::unordered_map<std::vector<Color>, std::size_t, ColorsHash> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].colors, i);
    std::vector<char> seen(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (seen[i]) continue;
      Coloring least = all[i];
      for (const auto& sigma : automorphisms)
        for (const auto& a : gl) {
          Coloring image = act(sigma, a, all[i]);
          seen[index.at(image.colors)] = 1;
          if (image < least) least = std::move(image);
        }
      result.representatives.push_back(std::move(least));
    }
  } else {
    // Every characteristic coloring is A o mu for exactly one A and one mu
    // with mu(b_i) = e_i on the facets b_1 < ... < b_n of vertex 0.
    const auto& base = p.vertex_facets()[0];
    std::vector<Color> pins(static_cast<std::size_t>(p.num_facets()), 0);
    for (std::size_t i = 0; i < base.size(); ++i) pins[static_cast<std::size_t>(base[i])] = Color{1} << i;
    std::vector<Coloring> normalized;
    for_each_characteristic(p, [&](const Coloring& c) { normalized.push_back(c); return true; }, pins);
    result.total_count = normalized.size() * gl.size();

    std::unordered_map<std::vector<Color>, std::size_t, ColorsHash> index;
    for (std::size_t i = 0; i < normalized.size(); ++i) index.emplace(normalized[i].colors, i);
    std::vector<char> seen(normalized.size(), 0);
    const LinearMap identity = gl.front();
    for (std::size_t i = 0; i < normalized.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> orbit;
      for (const auto& sigma : automorphisms) {
        Coloring moved = act(sigma, identity, normalized[i]);
        LinearMap basis;
        for (int b : base) basis.columns.push_back(moved.colors[static_cast<std::size_t>(b)]);
        const auto inv = inverse_table(basis, n);
        for (Color& c : moved.colors) c = inv[c];
        const std::size_t j = index.at(moved.colors);
        if (!seen[j]) {
          seen[j] = 1;
          orbit.push_back(j);
        }
      }
      Coloring least = normalized[orbit.front()];
      for (std::size_t j : orbit)
        for (const auto& a : gl) {
          Coloring image = act(automorphisms.front(), a, normalized[j]);
          if (image < least) least = std::move(image);
        }
      result.representatives.push_back(std::move(least));
    }
  }
  std::sort(result.representatives.begin(), result.representatives.end());
  result.class_count = result.representatives.size();
  return result;
}

bool is_orientable(const Coloring& c) {
  // eps_w(x) = (-1)^(w.x); need w.color = 1 for every facet.
  for (Color w = 1; w < (Color{1} << c.n); ++w) {
    const bool all_odd = std::all_of(c.colors.begin(), c.colors.end(), [w](Color x) { return __builtin_parity(w & x) == 1; });
    if (all_odd) return true;
  }
  return false;
}

std::optional<Coloring> find_orientable(const Polytope& p) {
  require_valid(p);
  std::optional<Coloring> found;
  for_each_characteristic(p, [&](const Coloring& c) {
    if (!is_orientable(c)) return true;
    found = c;
    return false;
  });
  return found;
}

}  // namespace smallcover
