#include "traceform/normal_form.hpp"

#include <optional>

namespace traceform {
namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  // row_dst -= q * row_src
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (!best || abs(h(i, c)) < abs(h(*best, c))) best = i;
      }
      if (!best) break;
      have_pivot = true;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix row_basis(const IntMatrix& m) {
  HnfResult res = hnf(m);
  IntMatrix b(res.rank, m.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = res.h(i, j);
  return b;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfResult res = hnf(m.transpose());
  std::vector<IntVector> out;
  if (res.rank == n) return out;
  IntMatrix k(n - res.rank, n);
  for (std::size_t i = res.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - res.rank, j) = res.u(i, j);
  IntMatrix canon = row_basis(k);
  for (std::size_t i = 0; i < canon.rows(); ++i) out.push_back(canon.row_vector(i));
  return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {i, j};
        }
      if (!best) return out;  // remaining block is zero
      d.swap_rows(t, best->first);
      out.u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      out.v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(out.u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(out.v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_axpy(d, t, *offender, Int(-1));
      row_axpy(out.u, t, *offender, Int(-1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(out.u, t);
    }
  }
  return out;
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  return out;
}

}  // namespace traceform
