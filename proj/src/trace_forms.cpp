#include "traceform/trace_forms.hpp"

#include "traceform/diagonalize.hpp"
#include "traceform/normal_form.hpp"

namespace traceform {

const char* to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::FullTrace: return "full-trace";
    case BasisKind::TraceZero: return "trace-zero";
    case BasisKind::External: return "external";
  }
  return "?";
}

QuadLattice::QuadLattice(IntMatrix gram, std::string label, BasisKind kind)
    : gram_(std::move(gram)), label_(std::move(label)), kind_(kind) {
  if (!gram_.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "Gram matrix must be square and symmetric");
  det_ = gram_.rows() == 0 ? Int(1) : determinant(gram_);
}

QuadLattice trace_gram(const NumberField& field) {
  const std::size_t n = static_cast<std::size_t>(field.degree());
  const IntVector& tr = field.basis_traces();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      IntVector prod = field.basis_product(i, j);
      Int t = 0;
      for (std::size_t k = 0; k < n; ++k) t += prod[k] * tr[k];
      g(i, j) = t;
      g(j, i) = t;
    }
  return QuadLattice(std::move(g), field.label(), BasisKind::FullTrace);
}

std::vector<IntVector> trace_zero_basis(const NumberField& field) {
  const IntVector& tr = field.basis_traces();
  IntMatrix row(1, tr.size());
  for (std::size_t j = 0; j < tr.size(); ++j) row(0, j) = tr[j];
  return kernel_basis(row);
}

QuadLattice trace_zero_gram(const NumberField& field) {
  if (field.degree() < 2) throw Error(ErrorKind::InvalidArgument, "trace-zero form needs degree at least 2");
  auto basis = trace_zero_basis(field);
  const std::size_t n = static_cast<std::size_t>(field.degree());
  IntMatrix b(basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = basis[i][j];
  IntMatrix g = b * trace_gram(field).gram() * b.transpose();
  return QuadLattice(std::move(g), field.label(), BasisKind::TraceZero);
}

std::pair<int, int> form_signature(const IntMatrix& gram) {
  Diagonalization d = diagonalize_symmetric(gram);
  if (d.degenerate) throw Error(ErrorKind::Degenerate, "form is degenerate");
  int pos = 0, neg = 0;
  for (const auto& x : d.diagonal) (sgn(x) > 0 ? pos : neg)++;
  return {pos, neg};
}

GramReduction gram_mod(const IntMatrix& gram, const Int& m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  GramReduction r{IntMatrix(gram.rows(), gram.cols()), true};
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      r.reduced(i, j) = mod_floor(gram(i, j), m);
      if (r.reduced(i, j) != 0) r.is_zero = false;
    }
  return r;
}

}  // namespace traceform
