#include "smallcover/h_vector.hpp"

#include <stdexcept>

#include "smallcover/error.hpp"

namespace smallcover {

namespace {

constexpr const char* kModule = "hvector";

// Coefficients of (t-1)^m, highest degree first.
std::vector<std::int64_t> shifted_power(int m) {
  std::vector<std::int64_t> c{1};
  for (int k = 0; k < m; ++k) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

std::int64_t PhiPolynomial::operator()(std::int64_t t) const {
  std::int64_t acc = 0;
  for (std::int64_t c : h) acc = acc * t + c;
  return acc;
}

PhiPolynomial phi_polynomial(std::span<const std::int64_t> dual_f, int n) {
  if (n < 1) throw Error(kModule, "degree must be at least 1");
  if (dual_f.size() != static_cast<std::size_t>(n))
    throw Error(kModule, "expected " + std::to_string(n) + " f-numbers, got " + std::to_string(dual_f.size()));
  for (std::int64_t f : dual_f)
    if (f < 0) throw Error(kModule, "f-numbers must be nonnegative");

  PhiPolynomial phi;
  phi.degree = n;
  phi.h.assign(static_cast<std::size_t>(n) + 1, 0);
  // A degree-m term contributes to h_{n-m+j} for its j-th coefficient.
  auto add = [&](std::int64_t scale, int m) {
    const auto c = shifted_power(m);
    for (std::size_t j = 0; j < c.size(); ++j) phi.h[static_cast<std::size_t>(n - m) + j] += scale * c[j];
  };
  add(1, n);
  for (int i = 0; i < n; ++i) add(dual_f[static_cast<std::size_t>(i)], n - 1 - i);
  return phi;
}

HVector h_vector_closed_form(const FVector& fv) {
  if (fv.dim != 3) throw Error(kModule, "closed form is for 3-polytopes");
  const auto V = fv.vertices, E = fv.edges, F = fv.faces;
  return {1, F - 3, 3 - 2 * F + E, V - E + F - 1};
}

HVector h_vector(const Polytope& p) {
  const FVector fv = f_vector(p);
  const auto dual = fv.dual();
  HVector h = phi_polynomial(dual, p.dim()).h;
  if (p.dim() == 3 && h != h_vector_closed_form(fv))
    throw std::logic_error("hvector: expansion disagrees with the closed form");
  return h;
}

std::int64_t h1_closed_form(const Polytope& p) {
  if (p.dim() != 3) throw Error(kModule, "h1 closed form needs a 3-polytope");
  if (p.num_vertices() % 2 != 0) throw Error(kModule, "odd vertex count " + std::to_string(p.num_vertices()) + ": not simple");
  const std::int64_t h1 = p.num_vertices() / 2 - 1;
  if (h_vector(p)[1] != h1) throw std::logic_error("hvector: V/2 - 1 disagrees with the expansion");
  return h1;
}

}  // namespace smallcover
