#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smallcover {

using VertexId = int;
using FacetId = int;

/// An edge of a 3-polytope: an unordered vertex pair that is consecutive in
/// some facet cycle, together with every facet in which it occurs.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  std::vector<FacetId> facets;
};

/**
 * Combinatorial simple polytope of dimension 2 or 3.
 *
 * Facets are stored as cyclic vertex lists: polygonal faces when dim == 3,
 * two-vertex edges when dim == 2. Vertex ids are 0..V-1 and facet ids are
 * 0..F-1. Construction checks only that the data is well formed (ids in
 * range, no repeated vertex inside a facet); use validate() for the
 * simplicity and sphere conditions.
 */
class Polytope {
 public:
  Polytope(int dim, int num_vertices, std::vector<std::vector<VertexId>> facets);

  int dim() const noexcept { return dim_; }
  int num_vertices() const noexcept { return num_vertices_; }
  int num_facets() const noexcept { return static_cast<int>(facets_.size()); }

  const std::vector<std::vector<VertexId>>& facets() const noexcept { return facets_; }
  std::span<const VertexId> facet(FacetId f) const { return facets_.at(static_cast<std::size_t>(f)); }

  /// Facets containing each vertex, ascending.
  const std::vector<std::vector<FacetId>>& vertex_facets() const noexcept { return vertex_facets_; }

  /// Derived edge set, sorted by (a, b) with a < b. Empty when dim == 2.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Index into edges() of the edge {a, b}, or -1.
  int find_edge(VertexId a, VertexId b) const;

  friend bool operator==(const Polytope& lhs, const Polytope& rhs) {
    return lhs.dim_ == rhs.dim_ && lhs.num_vertices_ == rhs.num_vertices_ && lhs.facets_ == rhs.facets_;
  }

 private:
  int dim_;
  int num_vertices_;
  std::vector<std::vector<VertexId>> facets_;
  std::vector<std::vector<FacetId>> vertex_facets_;
  std::vector<Edge> edges_;
};

struct Violation {
  std::string rule;
  std::string message;
  std::vector<int> ids;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(std::string_view rule) const;
};

/// f-vector of the polytope itself. For dim == 2 the facets are the edges
/// and `faces` is zero.
struct FVector {
  int dim = 3;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;

  /// f-vector of the dual simplicial sphere in codimension order
  /// (f_0, ..., f_{n-1}): facets first, vertices last.
  std::vector<std::int64_t> dual() const;
};

/// Reads the text format: a `dim=<n>` line, then `face <id>: v0 v1 ...`
/// per facet in cyclic order. `#` starts a comment.
Polytope parse_polytope(std::string_view text);
std::string serialize(const Polytope& p);

/// Checks every structural invariant of a simple polytope. With `strict`,
/// 3-polytopes must also have a 3-connected vertex graph.
ValidationReport validate(const Polytope& p, bool strict = false);

/// Throws Error("polytope", ...) listing the violations when validate fails.
void require_valid(const Polytope& p);

FVector f_vector(const Polytope& p);

/// Names: triangle, square, pentagon, <k>-gon, tetrahedron, cube,
/// dodecahedron, <k>-prism.
Polytope builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// A combinatorial automorphism: images of facets and of vertices.
struct FacePermutation {
  std::vector<FacetId> facet_map;
  std::vector<VertexId> vertex_map;

  friend bool operator==(const FacePermutation&, const FacePermutation&) = default;
  friend auto operator<=>(const FacePermutation&, const FacePermutation&) = default;
};

/// (a * b)(x) = a(b(x)).
FacePermutation compose(const FacePermutation& a, const FacePermutation& b);
FacePermutation inverse(const FacePermutation& a);

/// Every automorphism of the face lattice, orientation-reversing ones
/// included. Computed by mapping a base flag onto each flag and propagating
/// along flag adjacencies. The identity comes first.
std::vector<FacePermutation> automorphism_group(const Polytope& p);

/// Renames facets and vertices: facet f becomes facet_perm[f], vertex v
/// becomes vertex_perm[v]. Facet cycles keep their order.
Polytope relabel(const Polytope& p, std::span<const FacetId> facet_perm, std::span<const VertexId> vertex_perm);

/// Combinatorial test for compact right-angled realizability in hyperbolic
/// 3-space: trivalent, faces with at least five edges, no prismatic 3- or
/// 4-circuits. Only trivalence follows from Andreev's theorem directly; the
/// other two rules are the standard Pogorelov-class conditions.
ValidationReport pogorelov_check(const Polytope& p);

}  // namespace smallcover
