#include "traceform/poly.hpp"

#include <algorithm>
#include <sstream>

#include "traceform/factor.hpp"

namespace traceform {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly Poly::from_ints(const IntVector& coeffs) {
  std::vector<Rat> c(coeffs.begin(), coeffs.end());
  return Poly(std::move(c));
}

Poly Poly::monomial(const Rat& c, int degree) {
  if (c == 0) return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return traceform::is_integral(c); });
}

IntVector Poly::int_coeffs() const {
  IntVector out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!traceform::is_integral(c))
      throw Error(ErrorKind::InvalidArgument, "polynomial coefficient is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / lead();
  return inv * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) {
  std::vector<Rat> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat& lb = b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Rat q = rem[static_cast<std::size_t>(k)] / lb;
    quo[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Integer polynomials as coefficient vectors c0..cn, no trailing zeros.
using ZPoly = IntVector;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  const Int& lb = b.back();
  int e = zdeg(a) - db + 1;
  while (zdeg(a) >= db) {
    Int lead = a.back();
    int shift = zdeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= lead * b[static_cast<std::size_t>(j)];
    ztrim(a);
    --e;
  }
  if (e > 0) {
    Int f = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int subresultant(ZPoly a, ZPoly b) {
  if (a.empty() || b.empty()) return 0;
  if (zdeg(b) == 0) return ipow(b[0], static_cast<unsigned long>(zdeg(a)));
  if (zdeg(a) == 0) return ipow(a[0], static_cast<unsigned long>(zdeg(b)));
  Int ca = zcontent(a), cb = zcontent(b);
  for (auto& c : a) c = exact_div(c, ca);
  for (auto& c : b) c = exact_div(c, cb);
  Int g = 1, h = 1;
  int s = 1;
  Int t = ipow(ca, static_cast<unsigned long>(zdeg(b))) * ipow(cb, static_cast<unsigned long>(zdeg(a)));
  if (zdeg(a) < zdeg(b)) {
    std::swap(a, b);
    if (zdeg(a) % 2 == 1 && zdeg(b) % 2 == 1) s = -1;
  }
  for (;;) {
    int delta = zdeg(a) - zdeg(b);
    if (zdeg(a) % 2 == 1 && zdeg(b) % 2 == 1) s = -s;
    ZPoly r = zprem(a, b);
    a = std::move(b);
    Int div = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) c = exact_div(c, div);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(ipow(g, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.empty()) return 0;
    if (zdeg(b) == 0) break;
  }
  int da = zdeg(a);
  h = exact_div(ipow(b.back(), static_cast<unsigned long>(da)), ipow(h, static_cast<unsigned long>(da - 1)));
  return s * t * h;
}

// Scale a rational polynomial to an integral one; returns the multiplier.
Int clear_denominators(const Poly& f, ZPoly& out) {
  Int den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  out.clear();
  for (const auto& c : f.coeffs()) out.push_back(exact_div(c.get_num() * den, c.get_den()));
  return den;
}

}  // namespace

Rat resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  ZPoly zf, zg;
  Int df = clear_denominators(f, zf);
  Int dg = clear_denominators(g, zg);
  Int r = subresultant(zf, zg);
  Int scale = ipow(df, static_cast<unsigned long>(g.degree())) * ipow(dg, static_cast<unsigned long>(f.degree()));
  return make_rat(r, scale);
}

Rat poly_discriminant(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "discriminant of a constant polynomial");
  const long n = f.degree();
  Rat r = resultant(f, f.derivative()) / f.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

int sturm_real_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial");
  if (f.degree() == 0) return 0;
  if (gcd(f, f.derivative()).degree() > 0)
    throw Error(ErrorKind::NotSquarefree, "Sturm count requires a squarefree polynomial");
  std::vector<Poly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int sg = sign(p.lead());
      if (!at_plus && p.degree() % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  return changes(false) - changes(true);
}

std::vector<Rat> rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  ZPoly z;
  clear_denominators(f, z);
  // Strip the factor x^k.
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  ZPoly core(z.begin() + static_cast<long>(low), z.end());
  if (core.size() <= 1) return roots;
  auto divisors = [](const Int& n) {
    PrimeFactorization pf = factor_integer(abs(n));
    std::vector<Int> ds{1};
    for (const auto& [p, e] : pf.factors) {
      std::size_t base = ds.size();
      Int pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
      }
    }
    return ds;
  };
  Poly pf = Poly::from_ints(core);
  for (const Int& num : divisors(core.front()))
    for (const Int& den : divisors(core.back()))
      for (int sg : {1, -1}) {
        Rat cand = make_rat(sg * num, den);
        if (pf.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace traceform
