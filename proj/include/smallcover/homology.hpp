#pragma once

#include <cstdint>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/small_cover.hpp"

namespace smallcover {

/// Face lattice of a simple polytope. A face is identified by the sorted set
/// of facets containing it; the polytope itself is the single top face with
/// an empty facet set.
struct FaceLattice {
  struct Face {
    std::vector<FacetId> facets;
    std::vector<int> subfaces;  ///< codimension-one faces, indices into the level below
  };
  std::vector<std::vector<Face>> by_dim;
};

FaceLattice face_lattice(const Polytope& p);

/// A cell of M(lambda): the interior of `face` in the copy of P labelled by
/// the coset representative + H_face.
struct QuotientCell {
  int face = 0;
  Color representative = 0;
};

/**
 * Regular cell structure on the small cover M(lambda) = (P x GF(2)^n) / ~.
 *
 * One d-cell per pair (d-face f, coset of H_f), where H_f is spanned by the
 * colors of the facets containing f. `boundary[d]` is the GF(2) matrix of
 * the d-th boundary map with rows indexed by (d-1)-cells and columns by
 * d-cells; `boundary[0]` is empty.
 */
struct QuotientComplex {
  int dim = 0;
  std::vector<std::vector<QuotientCell>> cells;
  std::vector<gf2::BitMatrix> boundary;

  std::vector<std::int64_t> cell_counts() const;
  std::int64_t euler_characteristic() const;
};

using BettiVector = std::vector<std::int64_t>;

QuotientComplex build_quotient_complex(const Polytope& p, const Coloring& c);

/// b_d = dim ker d_d - rank d_{d+1}.
BettiVector betti_mod2(const QuotientComplex& qc);

/// d_{d-1} o d_d == 0 for every d.
bool boundary_squares_to_zero(const QuotientComplex& qc);

/// Whether the top cells admit signs that flip across every codimension-one
/// cell, i.e. whether the copies of P can be oriented compatibly. Uses only
/// the top boundary matrix.
bool top_cells_sign_consistent(const QuotientComplex& qc);

/// betti_mod2 of M(lambda) equals the h-vector of P.
bool verify_dj(const Polytope& p, const Coloring& c);

}  // namespace smallcover
