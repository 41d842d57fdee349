#include "traceform/diagonalize.hpp"

namespace traceform {
namespace {

// Basis move e_i <- e_i + s*e_j applied to G (both sides) and T (columns).
void add_basis_vector(RatMatrix& g, RatMatrix& t, std::size_t i, std::size_t j, long s) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) g(i, k) += s * g(j, k);
  for (std::size_t k = 0; k < n; ++k) g(k, i) += s * g(k, j);
  for (std::size_t k = 0; k < n; ++k) t(k, i) += s * t(k, j);
}

}  // namespace

Diagonalization diagonalize_symmetric(const RatMatrix& input) {
  if (!input.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "matrix is not symmetric");
  const std::size_t n = input.rows();
  RatMatrix g = input;
  Diagonalization out{{}, RatMatrix::identity(n), false};
  RatMatrix& t = out.transform;
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < n && g(i, j) == 0) ++j;
      if (j == n) {
        out.degenerate = true;
        out.diagonal.emplace_back(0);
        continue;
      }
      add_basis_vector(g, t, i, j, 1);
      if (g(i, i) == 0) {
        add_basis_vector(g, t, i, j, -2);  // net e_i - e_j
      }
    }
    const Rat pivot = g(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(i, j) == 0) continue;
      Rat f = g(i, j) / pivot;
      // e_j <- e_j - f e_i
      for (std::size_t k = 0; k < n; ++k) g(j, k) -= f * g(i, k);
      for (std::size_t k = 0; k < n; ++k) g(k, j) -= f * g(k, i);
      for (std::size_t k = 0; k < n; ++k) t(k, j) -= f * t(k, i);
    }
    out.diagonal.push_back(pivot);
  }
  return out;
}

Diagonalization diagonalize_symmetric(const IntMatrix& g) {
  return diagonalize_symmetric(to_rat(g));
}

}  // namespace traceform
