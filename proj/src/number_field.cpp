#include "traceform/number_field.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <sstream>

#include "traceform/hensel.hpp"
#include "traceform/normal_form.hpp"

namespace traceform {

unsigned PrimeSplit::residue_degree_sum() const {
  unsigned t = 0;
  for (const auto& [e, f] : pairs) t += f;
  return t;
}

bool PrimeSplit::unramified() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& ef) { return ef.first == 1; });
}

std::string PrimeSplit::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    os << (i ? "," : "") << "(" << pairs[i].first << "," << pairs[i].second << ")";
  os << "]";
  return os.str();
}

const char* to_string(Tameness t) noexcept {
  switch (t) {
    case Tameness::Unramified: return "unramified";
    case Tameness::Tame: return "tame";
    case Tameness::Wild: return "wild";
  }
  return "?";
}

const char* to_string(ConjugacyResult::Outcome o) noexcept {
  switch (o) {
    case ConjugacyResult::Outcome::Yes: return "yes";
    case ConjugacyResult::Outcome::No: return "no";
    case ConjugacyResult::Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

using ModVec = std::vector<std::uint64_t>;

// x^k mod f for k < 2n - 1, each as n power-basis coordinates.
std::vector<RatVector> power_reductions(const Poly& f) {
  const int n = f.degree();
  std::vector<RatVector> out;
  Poly xk = Poly::constant(Rat(1));
  for (int k = 0; k <= 2 * n - 2; ++k) {
    Poly r = xk % f;
    RatVector v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = r.coeff(i);
    out.push_back(std::move(v));
    xk = xk * Poly::x();
  }
  return out;
}

RatVector multiply_power(std::span<const Rat> a, std::span<const Rat> b, const std::vector<RatVector>& powers) {
  const std::size_t n = a.size();
  RatVector conv(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  RatVector out(n);
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (k < n) {
      out[k] += conv[k];
      continue;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (powers[k][i] != 0) out[i] += conv[k] * powers[k][i];
  }
  return out;
}

std::vector<IntMatrix> structure_constants(const RatMatrix& basis, const std::vector<RatVector>& powers) {
  const std::size_t n = basis.rows();
  RatMatrix inv = inverse(basis);
  std::vector<IntMatrix> t(n, IntMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVector prod = multiply_power(basis.row(i), basis.row(j), powers);
      RatVector coords = row_times(prod, inv);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_integral(coords[k]))
          throw Error(ErrorKind::InvalidArgument, "basis is not closed under multiplication");
        t[i](j, k) = coords[k].get_num();
        t[j](i, k) = coords[k].get_num();
      }
    }
  return t;
}

// Basis of {x : x M = 0} over F_p for the matrix with the given rows.
std::vector<ModVec> left_kernel(const std::vector<ModVec>& rows, std::size_t cols, const PrimeField& fp) {
  const std::size_t r = rows.size();
  // Work on the transpose: right kernel of (cols x r).
  std::vector<ModVec> m(cols, ModVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[j][i] = rows[i][j];
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < cols; ++c) {
    std::size_t piv = row;
    while (piv < cols && m[piv][c] == 0) ++piv;
    if (piv == cols) continue;
    std::swap(m[row], m[piv]);
    std::uint64_t inv = fp.inv(m[row][c]);
    for (auto& x : m[row]) x = fp.mul(x, inv);
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == row || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t k = 0; k < r; ++k) m[i][k] = fp.sub(m[i][k], fp.mul(f, m[row][k]));
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<ModVec> kernel;
  std::vector<bool> is_pivot(r, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < r; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(r, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = fp.neg(m[k][free]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

class OrderModP {
 public:
  OrderModP(const std::vector<IntMatrix>& t, const PrimeField& fp) : fp_(fp), n_(t.size()) {
    table_.resize(n_ * n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) table_[(i * n_ + j) * n_ + k] = fp.reduce(t[i](j, k));
  }

  ModVec mul(const ModVec& a, const ModVec& b) const {
    ModVec out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (b[j] == 0) continue;
        std::uint64_t ab = fp_.mul(a[i], b[j]);
        const std::uint64_t* row = &table_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k)
          if (row[k]) out[k] = fp_.add(out[k], fp_.mul(ab, row[k]));
      }
    }
    return out;
  }

  ModVec pow(ModVec a, std::uint64_t e) const {
    ModVec r(n_, 0);
    r[0] = 1;  // the first basis element is 1
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

 private:
  const PrimeField& fp_;
  std::size_t n_;
  std::vector<std::uint64_t> table_;
};

IntVector mul_coords(const std::vector<IntMatrix>& t, const IntVector& a, const IntVector& b) {
  const std::size_t n = t.size();
  IntVector out(n);
  Int ab;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (t[i](j, k) != 0) out[k] += ab * t[i](j, k);
    }
  }
  return out;
}

IntMatrix stack_with_p(std::size_t n, const Int& p, const std::vector<ModVec>& extra) {
  IntMatrix gens(n + extra.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = p;
  for (std::size_t r = 0; r < extra.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) gens(n + r, j) = from_u64(extra[r][j]);
  return row_basis(gens);
}

// Requires the first basis element to be 1 (true for Z[theta] and for the
// lower-triangular forms produced below).
RatMatrix canonical_basis(const RatMatrix& b) {
  const std::size_t n = b.rows();
  Int d = 1;
  for (const auto& x : b.data()) d = lcm(d, x.get_den());
  IntMatrix rev(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat scaled = b(i, n - 1 - j) * d;
      rev(i, j) = scaled.get_num();
    }
  IntMatrix h = row_basis(rev);
  RatMatrix out(n, n);
  for (std::size_t deg = 0; deg < n; ++deg)
    for (std::size_t j = 0; j < n; ++j) out(deg, j) = make_rat(h(n - 1 - deg, n - 1 - j), d);
  return out;
}

// One p-maximal enlargement step loop (Round 2 at p).
RatMatrix p_maximal(RatMatrix basis, const Int& p, const std::vector<RatVector>& powers) {
  const std::size_t n = basis.rows();
  PrimeField fp(to_u64(p));
  const std::uint64_t pu = fp.p();
  unsigned k = 1;
  for (Int pk = p; pk < static_cast<long>(n); pk *= p) ++k;
  for (;;) {
    std::vector<IntMatrix> t = structure_constants(basis, powers);
    OrderModP order(t, fp);
    // p-radical: kernel of x -> x^{p^k} on O/pO.
    std::vector<ModVec> frob;
    for (std::size_t i = 0; i < n; ++i) {
      ModVec e(n, 0);
      e[i] = 1;
      for (unsigned r = 0; r < k; ++r) e = order.pow(e, pu);
      frob.push_back(std::move(e));
    }
    std::vector<ModVec> rad = left_kernel(frob, n, fp);
    if (rad.empty()) return basis;
    IntMatrix ideal = stack_with_p(n, p, rad);
    RatMatrix ideal_inv = inverse(to_rat(ideal));
    // Multipliers: x in O with x I in p I.
    std::vector<ModVec> action;
    for (std::size_t kk = 0; kk < n; ++kk) {
      IntVector ek(n);
      ek[kk] = 1;
      ModVec flat;
      flat.reserve(n * n);
      for (std::size_t j = 0; j < n; ++j) {
        IntVector prod = mul_coords(t, ek, ideal.row_vector(j));
        RatVector prod_r(prod.begin(), prod.end());
        RatVector c = row_times(prod_r, ideal_inv);
        for (const auto& x : c) {
          if (!is_integral(x)) throw Error(ErrorKind::InvalidArgument, "radical is not an ideal");
          flat.push_back(fp.reduce(x.get_num()));
        }
      }
      action.push_back(std::move(flat));
    }
    std::vector<ModVec> mult = left_kernel(action, n * n, fp);
    if (mult.empty()) return basis;
    IntMatrix h = stack_with_p(n, p, mult);
    RatMatrix next = to_rat(h) * basis;
    Rat inv_p = make_rat(1, p);
    basis = canonical_basis(inv_p * next);
  }
}

}  // namespace

Poly monic_model(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "defining polynomial must be nonconstant");
  if (!f.is_integral()) throw Error(ErrorKind::InvalidArgument, "defining polynomial must have integer coefficients");
  const int n = f.degree();
  const Int a = f.lead().get_num();
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    if (k == n) {
      c[static_cast<std::size_t>(k)] = 1;
      continue;
    }
    c[static_cast<std::size_t>(k)] = f.coeff(k) * ipow(a, static_cast<unsigned long>(n - 1 - k));
  }
  return Poly(std::move(c));
}

MaximalOrder maximal_order(const Poly& f, const FactorOptions& opts) {
  if (!f.is_monic() || !f.is_integral())
    throw Error(ErrorKind::InvalidArgument, "maximal_order needs a monic integral polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const Int pdisc = poly_discriminant(f).get_num();
  if (pdisc == 0) throw Error(ErrorKind::NotSquarefree, "polynomial has a repeated root");
  PrimeFactorization pf = factor_integer(pdisc, opts);
  auto powers = power_reductions(f);
  RatMatrix basis = RatMatrix::identity(n);
  for (const auto& [p, e] : pf.factors)
    if (e >= 2) basis = p_maximal(basis, p, powers);
  basis = canonical_basis(basis);
  Rat det = abs(determinant(basis));
  Int index = det.get_den();
  if (det.get_num() != 1) throw Error(ErrorKind::InvalidArgument, "order basis determinant is not 1/index");
  MaximalOrder out;
  out.basis = basis;
  out.index = index;
  Int idx2 = index * index;
  out.disc = pdisc / idx2;
  out.disc_factorization.sign = sign(out.disc);
  for (const auto& [p, e] : pf.factors) {
    unsigned ve = e - 2 * valuation(index, p);
    if (ve > 0) out.disc_factorization.factors.emplace_back(p, ve);
  }
  return out;
}

namespace {

std::uint64_t subset_sums(const std::vector<int>& degrees) {
  std::uint64_t mask = 1;
  for (int d : degrees) mask |= mask << d;
  return mask;
}

}  // namespace

void certify_irreducible(const Poly& input, const NumberFieldOptions& opts) {
  Poly f = input.is_monic() ? input : monic_model(input);
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "constant polynomial");
  if (n == 1) return;
  Poly g = gcd(f, f.derivative());
  if (g.degree() > 0) throw Error(ErrorKind::Reducible, "repeated factor " + g.to_string());
  auto roots = rational_roots(f);
  if (!roots.empty()) throw Error(ErrorKind::Reducible, "rational root " + roots.front().get_str());
  if (n <= 3) return;
  if (n > 63) throw Error(ErrorKind::OutOfRange, "degree too large for pattern certification");
  const Int pdisc = poly_discriminant(f).get_num();
  const std::uint64_t full = (std::uint64_t{1} << n) | 1;
  std::uint64_t allowed = ~std::uint64_t{0};
  int good = 0;
  for (std::uint32_t p : primes_up_to(100000)) {
    if (good >= std::max(opts.irreducibility_primes, opts.pattern_primes)) break;
    if (mpz_divisible_ui_p(pdisc.get_mpz_t(), p)) continue;
    ++good;
    auto factors = factor_mod_p(f, Int(p), opts.seed);
    if (factors.size() == 1) return;
    if (good <= opts.pattern_primes) {
      std::vector<int> degs;
      for (const auto& fac : factors) degs.push_back(modp::degree(fac.factor));
      allowed &= subset_sums(degs);
      if ((allowed & ((std::uint64_t{1} << (n + 1)) - 1)) == full) return;
    }
  }
  // Patterns are inconclusive (e.g. Galois groups with no n-cycle): exhaustive factor search.
  if (auto g = find_integer_factor(f, opts.seed)) throw Error(ErrorKind::Reducible, "factor " + g->to_string());
}

NumberField NumberField::from_poly(const IntVector& coeffs, const NumberFieldOptions& opts, std::string label) {
  return from_poly(Poly::from_ints(coeffs), opts, std::move(label));
}

NumberField NumberField::from_poly(const Poly& f, const NumberFieldOptions& opts, std::string label) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "defining polynomial must be nonconstant");
  if (!f.is_integral()) throw Error(ErrorKind::InvalidArgument, "defining polynomial must have integer coefficients");
  NumberField k;
  k.defining_ = f;
  k.scale_ = f.lead().get_num();
  k.min_poly_ = monic_model(f);
  k.label_ = label.empty() ? f.to_string() : std::move(label);
  certify_irreducible(k.min_poly_, opts);
  MaximalOrder mo = maximal_order(k.min_poly_, opts.factor);
  k.disc_factors_ = mo.disc_factorization;
  k.finish(mo.basis, opts.factor);
  return k;
}

NumberField NumberField::from_parts(const Poly& defining, const RatMatrix& basis, const Int& disc,
                                    std::string label, const FactorOptions& factor) {
  NumberField k;
  k.defining_ = defining;
  k.scale_ = defining.lead().get_num();
  k.min_poly_ = monic_model(defining);
  k.label_ = label.empty() ? defining.to_string() : std::move(label);
  k.disc_factors_ = factor_integer(disc, factor);
  k.finish(basis, factor);
  if (k.disc_ != disc) throw Error(ErrorKind::InvalidArgument, "cached discriminant does not match basis");
  return k;
}

NumberField NumberField::with_basis(const RatMatrix& basis) const {
  if (basis.rows() != basis_.rows() || basis.cols() != basis_.cols())
    throw Error(ErrorKind::InvalidArgument, "basis has the wrong shape");
  if (!(canonical_basis(basis) == canonical_basis(basis_)))
    throw Error(ErrorKind::InvalidArgument, "basis does not span the maximal order");
  NumberField k = *this;
  k.finish(basis, {});
  return k;
}

void NumberField::finish(const RatMatrix& basis, const FactorOptions&) {
  const std::size_t n = static_cast<std::size_t>(min_poly_.degree());
  basis_ = basis;
  poly_disc_ = poly_discriminant(min_poly_).get_num();
  Rat det = abs(determinant(basis_));
  if (det == 0 || det.get_num() != 1) throw Error(ErrorKind::InvalidArgument, "basis determinant is not 1/index");
  index_ = det.get_den();
  Int idx2 = index_ * index_;
  if (!mpz_divisible_p(poly_disc_.get_mpz_t(), idx2.get_mpz_t()))
    throw Error(ErrorKind::InvalidArgument, "index^2 does not divide the polynomial discriminant");
  disc_ = poly_disc_ / idx2;
  if (disc_factors_.value() != disc_) disc_factors_ = factor_integer(disc_);
  real_places_ = sturm_real_roots(min_poly_);
  complex_places_ = (static_cast<int>(n) - real_places_) / 2;
  if ((complex_places_ % 2 == 0) != (disc_ > 0))
    throw Error(ErrorKind::InvalidArgument, "discriminant sign contradicts the signature");
  structure_ = structure_constants(basis_, power_reductions(min_poly_));
  basis_traces_.assign(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_traces_[i] += structure_[i](j, j);
}

IntVector NumberField::multiply(const IntVector& a, const IntVector& b) const {
  return mul_coords(structure_, a, b);
}

IntVector NumberField::basis_product(std::size_t i, std::size_t j) const {
  return structure_[i].row_vector(j);
}

Int NumberField::trace(const IntVector& a) const {
  Int t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * basis_traces_[i];
  return t;
}

Poly NumberField::to_poly(const IntVector& coords) const {
  RatVector c(coords.begin(), coords.end());
  return Poly(row_times(c, basis_));
}

PrimeSplit splitting_type(const NumberField& field, const Int& p, std::uint64_t seed) {
  if (mpz_divisible_p(field.index().get_mpz_t(), p.get_mpz_t()))
    throw Error(ErrorKind::IndexObstruction, "p = " + p.get_str() + " divides the index");
  PrimeSplit s{p, {}};
  for (const auto& fac : factor_mod_p(field.min_poly(), p, seed))
    s.pairs.emplace_back(fac.multiplicity, static_cast<unsigned>(modp::degree(fac.factor)));
  std::sort(s.pairs.begin(), s.pairs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  return s;
}

Tameness is_tame_at(const NumberField& field, const Int& p) {
  if (!mpz_divisible_p(field.disc().get_mpz_t(), p.get_mpz_t())) return Tameness::Unramified;
  const int n = field.degree();
  if (p > n) return Tameness::Tame;
  if (!mpz_divisible_p(field.index().get_mpz_t(), p.get_mpz_t())) {
    PrimeSplit s = splitting_type(field, p);
    for (const auto& [e, f] : s.pairs)
      if (e % p.get_ui() == 0) return Tameness::Wild;
    return Tameness::Tame;
  }
  // v_p(d) >= sum f_i (e_i - 1) = dim of the p-radical of O/pO, with
  // equality exactly when every e_i is prime to p.
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<IntMatrix> t(dim, IntMatrix(dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      IntVector c = field.basis_product(i, j);
      for (std::size_t k = 0; k < dim; ++k) t[i](j, k) = c[k];
    }
  PrimeField fp(to_u64(p));
  OrderModP order(t, fp);
  unsigned k = 1;
  for (Int pk = p; pk < n; pk *= p) ++k;
  std::vector<ModVec> frob;
  for (std::size_t i = 0; i < dim; ++i) {
    ModVec e(dim, 0);
    e[i] = 1;
    for (unsigned r = 0; r < k; ++r) e = order.pow(e, fp.p());
    frob.push_back(std::move(e));
  }
  const std::size_t radical = left_kernel(frob, dim, fp).size();
  return valuation(field.disc(), p) == radical ? Tameness::Tame : Tameness::Wild;
}

Tameness tameness(const NumberField& field) {
  Tameness worst = Tameness::Unramified;
  for (const auto& p : field.disc_factorization().primes()) {
    Tameness t = is_tame_at(field, p);
    if (t == Tameness::Wild) return Tameness::Wild;
    if (t == Tameness::Tame) worst = Tameness::Tame;
  }
  return worst;
}

bool is_fundamental_disc(const Int& d, FundamentalMode mode, const FactorOptions& opts) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "discriminant must be nonzero");
  auto squarefree = [&](const Int& m) {
    for (const auto& [p, e] : factor_integer(m, opts).factors)
      if (e > 1) return false;
    return true;
  };
  if (squarefree(d)) return true;
  if (mode == FundamentalMode::StrictSquarefree) return false;
  if (!mpz_divisible_ui_p(d.get_mpz_t(), 4)) return false;
  Int m = d / 4;
  Int r = mod_floor(m, Int(4));
  return (r == 2 || r == 3) && squarefree(m);
}

namespace {

Int eval_int(const IntVector& c, const Int& x, const Int& mod) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod_floor(acc * x + *it, mod);
  return acc;
}

Int lift_root(const IntVector& c, Int r, const Int& p, unsigned prec) {
  IntVector dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned long>(i));
  unsigned have = 1;
  while (have < prec) {
    have = std::min(2 * have, prec);
    Int mod = ipow(p, have);
    Int fr = eval_int(c, r, mod);
    Int dr = eval_int(dc, r, mod);
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), mod.get_mpz_t()))
      throw Error(ErrorKind::InvalidArgument, "Hensel lifting at a multiple root");
    r = mod_floor(r - fr * inv, mod);
  }
  return r;
}

// Inverse of a matrix over Z/mZ when a unit pivot exists in every column.
IntMatrix inverse_mod(const IntMatrix& a_in, const Int& m, const Int& p) {
  const std::size_t n = a_in.rows();
  IntMatrix a = a_in, inv = IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && mpz_divisible_p(a(piv, c).get_mpz_t(), p.get_mpz_t())) ++piv;
    if (piv == n) throw Error(ErrorKind::Degenerate, "matrix not invertible mod p");
    a.swap_rows(c, piv);
    inv.swap_rows(c, piv);
    Int u;
    mpz_invert(u.get_mpz_t(), a(c, c).get_mpz_t(), m.get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = mod_floor(a(c, j) * u, m);
      inv(c, j) = mod_floor(inv(c, j) * u, m);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Int f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = mod_floor(a(i, j) - f * a(c, j), m);
        inv(i, j) = mod_floor(inv(i, j) - f * inv(c, j), m);
      }
    }
  }
  return inv;
}

// Rigorous bound on index(L) * |c_i| for any root of f written in the power
// basis of L = Q[y]/(g), from Lagrange interpolation over the complex roots.
Int coordinate_height_bound(const Poly& f, const Poly& g, const Int& denom) {
  const int n = g.degree();
  auto cauchy = [](const Poly& h) {
    Int m = 0;
    for (int i = 0; i < h.degree(); ++i) m = std::max(m, Int(abs(h.coeff(i).get_num())));
    return Int(m + 1);
  };
  Int rf = cauchy(f), rg = cauchy(g);
  Int g1 = 0, deriv = 0;
  for (int t = 0; t <= n; ++t) {
    Int c = abs(g.coeff(t).get_num());
    g1 += c;
    if (t > 0) deriv += t * c * ipow(rg, static_cast<unsigned long>(t - 1));
  }
  Int num = n * rf * g1 * ipow(rg, static_cast<unsigned long>(n - 1)) *
            ipow(deriv, static_cast<unsigned long>(n - 1)) * denom;
  Int dg = abs(poly_discriminant(g).get_num());
  return num / dg + 1;
}

bool is_root_in(const Poly& f, const RatVector& c, const Poly& g) {
  Poly alpha(c);
  Poly acc;
  for (int i = f.degree(); i >= 0; --i) acc = (acc * alpha + Poly::constant(f.coeff(i))) % g;
  return acc.is_zero();
}

}  // namespace

ConjugacyResult are_conjugate(const NumberField& f, const NumberField& l, const ConjugacyOptions& opts) {
  using Outcome = ConjugacyResult::Outcome;
  ConjugacyResult res;
  auto no = [&](std::string why) {
    res.outcome = Outcome::No;
    res.reason = std::move(why);
    return res;
  };
  if (f.degree() != l.degree()) return no("degree mismatch");
  if (f.disc() != l.disc()) return no("discriminant mismatch");
  if (f.signature() != l.signature()) return no("signature mismatch");
  const int n = f.degree();
  if (f.min_poly() == l.min_poly()) {
    res.outcome = Outcome::Yes;
    res.reason = "identical defining polynomials";
    RatVector w(static_cast<std::size_t>(n));
    if (n > 1) w[1] = 1;
    else w[0] = -f.min_poly().coeff(0);
    res.witness = w;
    return res;
  }
  const Int index_product = f.index() * l.index();
  for (std::uint32_t p : primes_up_to(opts.spectrum_bound)) {
    if (mpz_divisible_ui_p(index_product.get_mpz_t(), p)) continue;
    PrimeSplit a = splitting_type(f, Int(p), opts.seed);
    PrimeSplit b = splitting_type(l, Int(p), opts.seed);
    if (a.pairs != b.pairs) {
      res.split_first = a;
      res.split_second = b;
      return no("splitting types differ at " + std::to_string(p));
    }
  }
  if (n == 1) {
    res.outcome = Outcome::Yes;
    res.witness = RatVector{Rat(-f.min_poly().coeff(0))};
    return res;
  }

  // p-adic search: both polynomials split completely at p, so any root of f in
  // L is determined by which p-adic root of f each embedding of L sends it to.
  const Poly& fp = f.min_poly();
  const Poly& gp = l.min_poly();
  const Int bad = f.poly_disc() * l.poly_disc();
  std::optional<std::uint64_t> prime;
  const Int height = coordinate_height_bound(fp, gp, l.index());
  for (std::uint32_t p : primes_up_to(opts.split_prime_limit)) {
    if (p <= 50 || mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    PrimeField field(p);
    ModPoly gm = modp::reduce(gp, field);
    ModPoly x{0, 1};
    ModPoly xp = modp::powmod(x, Int(p), gm, field);
    if (modp::degree(modp::gcd(modp::sub(xp, x, field), gm, field)) != n) continue;
    prime = p;
    break;
  }
  if (!prime) {
    res.outcome = Outcome::Undetermined;
    res.reason = "no totally split prime below " + std::to_string(opts.split_prime_limit);
    return res;
  }
  const Int p = from_u64(*prime);
  auto roots_mod_p = [&](const Poly& h) {
    std::vector<Int> roots;
    for (const auto& fac : factor_mod_p(h, p, opts.seed))
      if (modp::degree(fac.factor) == 1) roots.push_back(from_u64(PrimeField(*prime).neg(fac.factor[0])));
    return roots;
  };
  std::vector<Int> froots = roots_mod_p(fp);
  std::vector<Int> groots = roots_mod_p(gp);
  if (static_cast<int>(froots.size()) != n) {
    res.split_first = splitting_type(f, p, opts.seed);
    res.split_second = splitting_type(l, p, opts.seed);
    return no("splitting types differ at " + p.get_str());
  }
  const IntVector fc = fp.int_coeffs(), gc = gp.int_coeffs();
  const Int denom = l.index();
  std::vector<std::size_t> perm(static_cast<std::size_t>(n));
  unsigned prec = 1;
  while (mpz_sizeinbase(ipow(p, prec).get_mpz_t(), 2) < 64) ++prec;
  for (;;) {
    Int mod = ipow(p, prec);
    const bool final_level = mod > 2 * height;
    if (!final_level && mpz_sizeinbase(mod.get_mpz_t(), 2) > opts.max_precision_bits) {
      res.outcome = Outcome::Undetermined;
      res.reason = "p-adic precision budget exhausted";
      return res;
    }
    std::vector<Int> a, r;
    for (const auto& x : froots) a.push_back(lift_root(fc, x, p, prec));
    for (const auto& x : groots) r.push_back(lift_root(gc, x, p, prec));
    IntMatrix v(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < r.size(); ++j) {
      Int pw = 1;
      for (std::size_t i = 0; i < r.size(); ++i) {
        v(j, i) = pw;
        pw = mod_floor(pw * r[j], mod);
      }
    }
    IntMatrix w = inverse_mod(v, mod, p);
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = mod_floor(w(i, j) * denom, mod);
    const Int limit = final_level ? height : isqrt(mod) / 2;
    std::iota(perm.begin(), perm.end(), 0);
    IntVector e(static_cast<std::size_t>(n));
    do {
      bool small = true;
      for (std::size_t i = 0; i < e.size() && small; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < e.size(); ++j) acc += w(i, j) * a[perm[j]];
        e[i] = mod_centered(acc, mod);
        small = abs(e[i]) <= limit;
      }
      if (!small) continue;
      RatVector c;
      for (const auto& x : e) c.push_back(make_rat(x, denom));
      if (is_root_in(fp, c, gp)) {
        res.outcome = Outcome::Yes;
        res.reason = "root of the first polynomial found in the second field (p = " + p.get_str() + ")";
        res.witness = c;
        return res;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (final_level)
      return no("no root of the first polynomial in the second field (exhaustive p-adic search at p = " +
                p.get_str() + ")");
    prec *= 2;
    Int next = ipow(p, prec);
    if (next > 2 * height) {
      // Jump straight to the smallest precision that certifies.
      while (prec > 1 && ipow(p, prec - 1) > 2 * height) --prec;
    }
  }
}

}  // namespace traceform
