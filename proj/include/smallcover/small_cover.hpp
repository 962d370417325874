#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smallcover/polytope.hpp"

namespace smallcover {

/// Nonzero vector of GF(2)^n; bit i is the coefficient of e_{i+1}.
using Color = std::uint32_t;

/**
 * Assignment of a nonzero GF(2)^n vector to every facet.
 *
 * Text form is one `facet_id: bits` line per facet, where the i-th character
 * of `bits` is the coefficient of e_i; so `0: 100` gives facet 0 the color e1.
 */
struct Coloring {
  int n = 0;
  std::vector<Color> colors;

  Coloring() = default;
  Coloring(int n, std::vector<Color> colors);

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

Coloring parse_coloring(std::string_view text);
std::string serialize(const Coloring& c);

/// Single-line form "0:100 1:010 ...", used in listings.
std::string to_compact_string(const Coloring& c);

/// An invertible linear map of GF(2)^n, stored as the images of e_1..e_n.
struct LinearMap {
  std::vector<Color> columns;

  Color operator()(Color x) const {
    Color out = 0;
    for (std::size_t i = 0; x; ++i, x >>= 1)
      if (x & 1u) out ^= columns[i];
    return out;
  }
};

/// All of GL(n, GF(2)), identity first. |GL(2,2)| = 6, |GL(3,2)| = 168.
std::vector<LinearMap> general_linear_group(int n);

/// True when the vectors are linearly independent over GF(2).
bool independent(std::span<const Color> vectors);

/// (sigma, A) . lambda = A o lambda o sigma^-1.
Coloring act(const FacePermutation& sigma, const LinearMap& a, const Coloring& c);

/// At every vertex the colors of the n incident facets are independent.
bool is_characteristic(const Polytope& p, const Coloring& c);

/// Throws Error("small_cover", ...) unless is_characteristic holds.
void require_characteristic(const Polytope& p, const Coloring& c);

/// Visitor for characteristic colorings. Returning false stops the search.
using ColoringVisitor = std::function<bool(const Coloring&)>;

/**
 * Backtracks over facets in id order, trying colors 1..2^n-1 and pruning as
 * soon as some vertex sees dependent colors. Colorings are visited in
 * lexicographic order of their encoded color vectors.
 *
 * `fixed` pins a color on some facets (0 = free); used to shard the search
 * and for base-vertex normalization. Returns the number visited.
 */
std::uint64_t for_each_characteristic(const Polytope& p, const ColoringVisitor& visit,
                                      std::span<const Color> fixed = {});

/// Every characteristic coloring in enumeration order. With threads > 1 the
/// search is sharded by the color of facet 0 and merged in shard order.
std::vector<Coloring> enumerate_characteristic(const Polytope& p, unsigned threads = 1);

std::uint64_t count_characteristic(const Polytope& p);

enum class SymmetryPruning {
  none,        ///< enumerate everything, then sweep orbits
  base_vertex  ///< fix the base vertex colors to e_1..e_n, scale by |GL(n,2)|
};

struct CoverClassification {
  std::uint64_t total_count = 0;
  std::uint64_t class_count = 0;
  /// Lexicographically least coloring of each orbit, in ascending order.
  std::vector<Coloring> representatives;
  /// |Aut(P)| * |GL(n,2)|.
  std::uint64_t group_order_used = 0;
};

/// Orbits of characteristic colorings under Aut(P) x GL(n, GF(2)).
CoverClassification equivalence_classes(const Polytope& p, SymmetryPruning pruning = SymmetryPruning::base_vertex);

/// Some homomorphism eps: GF(2)^n -> {+1,-1} sends every facet color to -1.
bool is_orientable(const Coloring& c);

/// First orientable characteristic coloring in enumeration order.
std::optional<Coloring> find_orientable(const Polytope& p);

}  // namespace smallcover
