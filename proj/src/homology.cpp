#include "smallcover/homology.hpp"

#include <algorithm>
#include <map>

#include "smallcover/error.hpp"
#include "smallcover/h_vector.hpp"

namespace smallcover {

namespace {

// Span of the given colors as a bitmask over GF(2)^n.
std::uint64_t span_mask(const std::vector<FacetId>& facets, const Coloring& c) {
  std::uint64_t span = 1;
  for (int f : facets) {
    const Color x = c.colors[static_cast<std::size_t>(f)];
    std::uint64_t grown = span;
    for (std::uint64_t rest = span; rest; rest &= rest - 1) grown |= std::uint64_t{1} << (static_cast<Color>(__builtin_ctzll(rest)) ^ x);
    span = grown;
  }
  return span;
}

}  // namespace

FaceLattice face_lattice(const Polytope& p) {
  require_valid(p);
  const int n = p.dim();
  FaceLattice lattice;
  lattice.by_dim.resize(static_cast<std::size_t>(n) + 1);

  auto& vertices = lattice.by_dim[0];
  for (const auto& fs : p.vertex_facets()) vertices.push_back({fs, {}});

  auto& facets = lattice.by_dim[static_cast<std::size_t>(n - 1)];
  if (n == 3) {
    auto& edges = lattice.by_dim[1];
    for (const Edge& e : p.edges()) {
      auto fs = e.facets;
      std::sort(fs.begin(), fs.end());
      edges.push_back({fs, {e.a, e.b}});
    }
    for (int f = 0; f < p.num_facets(); ++f) facets.push_back({{f}, {}});
    for (std::size_t e = 0; e < edges.size(); ++e)
      for (int f : edges[e].facets) facets[static_cast<std::size_t>(f)].subfaces.push_back(static_cast<int>(e));
  } else {
    for (int f = 0; f < p.num_facets(); ++f) facets.push_back({{f}, {p.facet(f)[0], p.facet(f)[1]}});
  }

  FaceLattice::Face top;
  for (int f = 0; f < p.num_facets(); ++f) top.subfaces.push_back(f);
  lattice.by_dim[static_cast<std::size_t>(n)].push_back(std::move(top));
  return lattice;
}

std::vector<std::int64_t> QuotientComplex::cell_counts() const {
  std::vector<std::int64_t> out;
  for (const auto& level : cells) out.push_back(static_cast<std::int64_t>(level.size()));
  return out;
}

std::int64_t QuotientComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < cells.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(cells[d].size());
  return chi;
}

QuotientComplex build_quotient_complex(const Polytope& p, const Coloring& c) {
  if (!is_characteristic(p, c)) throw Error("homology", "coloring is not characteristic; M(lambda) is not a manifold");
  const FaceLattice lattice = face_lattice(p);
  const int n = p.dim();
  const Color group_size = Color{1} << n;

  QuotientComplex qc;
  qc.dim = n;
  qc.cells.resize(static_cast<std::size_t>(n) + 1);
  // cell_of[d][face][g]: index of the d-cell (face, g + H_face).
  std::vector<std::vector<std::vector<int>>> cell_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t d = 0; d <= static_cast<std::size_t>(n); ++d) {
    const auto& faces = lattice.by_dim[d];
    cell_of[d].assign(faces.size(), std::vector<int>(group_size, -1));
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const std::uint64_t h = span_mask(faces[f].facets, c);
      for (Color g = 0; g < group_size; ++g) {
        if (cell_of[d][f][g] != -1) continue;
        const int id = static_cast<int>(qc.cells[d].size());
        qc.cells[d].push_back({static_cast<int>(f), g});
        for (std::uint64_t rest = h; rest; rest &= rest - 1) cell_of[d][f][g ^ static_cast<Color>(__builtin_ctzll(rest))] = id;
      }
    }
  }

  qc.boundary.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t d = 1; d <= static_cast<std::size_t>(n); ++d) {
    gf2::BitMatrix m(qc.cells[d - 1].size(), qc.cells[d].size());
    for (std::size_t col = 0; col < qc.cells[d].size(); ++col) {
      const auto& cell = qc.cells[d][col];
      for (int sub : lattice.by_dim[d][static_cast<std::size_t>(cell.face)].subfaces)
        m.flip(static_cast<std::size_t>(cell_of[d - 1][static_cast<std::size_t>(sub)][cell.representative]), col);
    }
    qc.boundary[d] = std::move(m);
  }
  return qc;
}

BettiVector betti_mod2(const QuotientComplex& qc) {
  const auto n = static_cast<std::size_t>(qc.dim);
  std::vector<std::int64_t> ranks(n + 2, 0);
  for (std::size_t d = 1; d <= n; ++d) ranks[d] = static_cast<std::int64_t>(gf2::rank(qc.boundary[d]));
  BettiVector betti(n + 1);
  for (std::size_t d = 0; d <= n; ++d) betti[d] = static_cast<std::int64_t>(qc.cells[d].size()) - ranks[d] - ranks[d + 1];
  return betti;
}

bool boundary_squares_to_zero(const QuotientComplex& qc) {
  for (std::size_t d = 2; d < qc.boundary.size(); ++d)
    if (!gf2::multiply(qc.boundary[d - 1], qc.boundary[d]).is_zero()) return false;
  return true;
}

bool top_cells_sign_consistent(const QuotientComplex& qc) {
  const auto& top = qc.boundary.at(static_cast<std::size_t>(qc.dim));
  const std::size_t count = top.cols();
  std::vector<std::vector<std::size_t>> adj(count);
  for (std::size_t r = 0; r < top.rows(); ++r) {
    const auto pair = top.support(r);
    if (pair.size() != 2) return false;  // not a closed pseudomanifold
    adj[pair[0]].push_back(pair[1]);
    adj[pair[1]].push_back(pair[0]);
  }
  std::vector<int> sign(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    if (sign[s]) continue;
    sign[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x]) {
        if (sign[y] == 0) {
          sign[y] = -sign[x];
          stack.push_back(y);
        } else if (sign[y] == sign[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_dj(const Polytope& p, const Coloring& c) {
  return betti_mod2(build_quotient_complex(p, c)) == h_vector(p);
}

}  // namespace smallcover
