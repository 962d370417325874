#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smallcover/polytope.hpp"

namespace smallcover {

/// Phi_K(t) = (t-1)^n + sum_i f_i (t-1)^(n-1-i), stored as the coefficients
/// h_0..h_n with Phi_K(t) = sum_i h_i t^(n-i).
struct PhiPolynomial {
  int degree = 0;
  std::vector<std::int64_t> h;

  /// Exact evaluation at an integer point.
  std::int64_t operator()(std::int64_t t) const;
};

using HVector = std::vector<std::int64_t>;

/// Expands Phi_K for the dual f-vector (f_0, ..., f_{n-1}) of a simplicial
/// complex K of dimension n-1. Works for any n >= 1.
PhiPolynomial phi_polynomial(std::span<const std::int64_t> dual_f, int n);

/// h-vector of a valid polytope. For 3-polytopes the expansion is checked
/// against (1, F-3, 3-2F+E, V-E+F-1); a mismatch is a logic_error.
HVector h_vector(const Polytope& p);

/// (1, F-3, 3-2F+E, V-E+F-1).
HVector h_vector_closed_form(const FVector& fv);

/// V/2 - 1 for a simple 3-polytope; throws on odd V or dim != 3.
std::int64_t h1_closed_form(const Polytope& p);

}  // namespace smallcover
