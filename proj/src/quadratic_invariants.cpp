#include "traceform/quadratic_invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "traceform/diagonalize.hpp"

namespace traceform {

std::string place_name(const Place& v) { return v == 0 ? "inf" : v.get_str(); }

namespace {

// Strips p from a nonzero integer, returning the exponent.
unsigned strip(Int& a, const Int& p) {
  return static_cast<unsigned>(mpz_remove(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

bool eps2(const Int& u) { return mod_floor(u, Int(4)) == 3; }
bool omega2(const Int& u) {
  Int r = mod_floor(u, Int(8));
  return r == 3 || r == 5;
}

int hilbert_int(Int a, Int b, const Place& p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  unsigned alpha = strip(a, p), beta = strip(b, p);
  if (p == 2) {
    bool e = (eps2(a) && eps2(b)) ^ ((alpha & 1) && omega2(b)) ^ ((beta & 1) && omega2(a));
    return e ? -1 : 1;
  }
  int s = 1;
  if ((alpha & 1) && (beta & 1) && mod_floor(p, Int(4)) == 3) s = -s;
  if (beta & 1) s *= legendre(a, p);
  if (alpha & 1) s *= legendre(b, p);
  return s;
}

// Integer in the same square class.
Int square_class_rep(const Rat& a) { return a.get_num() * a.get_den(); }

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "place must be a prime or 0");
  return hilbert_int(square_class_rep(a), square_class_rep(b), v);
}

std::vector<Place> hilbert_support(const Rat& a, const Rat& b, const FactorOptions& opts) {
  std::set<Int> s{Int(0), Int(2)};
  for (const Rat* r : {&a, &b})
    for (const Int* part : {&r->get_num(), &r->get_den()})
      for (const auto& p : factor_integer(*part, opts).primes()) s.insert(p);
  return {s.begin(), s.end()};
}

int LocalProfile::hasse_at(const Place& v) const {
  auto it = hasse.find(v);
  return it == hasse.end() ? 1 : it->second;
}

LocalProfile local_profile(const IntMatrix& gram, const FactorOptions& opts) {
  Diagonalization d = diagonalize_symmetric(gram);
  if (d.degenerate) throw Error(ErrorKind::Degenerate, "form is degenerate");
  LocalProfile out;
  out.dim = gram.rows();
  Int det = gram.rows() == 0 ? Int(1) : determinant(gram);
  out.disc_square_class = squarefree_part(det, opts);
  for (const auto& x : d.diagonal) (sgn(x) > 0 ? out.signature.first : out.signature.second)++;
  std::set<Int> places{Int(0), Int(2)};
  for (const auto& p : factor_integer(det, opts).primes()) places.insert(p);
  std::vector<Int> reps;
  for (const auto& x : d.diagonal) reps.push_back(square_class_rep(x));
  for (const auto& v : places) {
    int h = 1;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) h *= hilbert_int(reps[i], reps[j], v);
    out.hasse[v] = h;
  }
  return out;
}

RationalComparison rationally_equivalent(const QuadLattice& a, const QuadLattice& b, const FactorOptions& opts) {
  RationalComparison r;
  LocalProfile pa = local_profile(a, opts), pb = local_profile(b, opts);
  std::set<Place> places;
  for (const auto& [v, h] : pa.hasse) places.insert(v);
  for (const auto& [v, h] : pb.hasse) places.insert(v);
  for (const auto& v : places) r.hasse_by_place[v] = {pa.hasse_at(v), pb.hasse_at(v)};
  if (pa.dim != pb.dim) {
    r.reason = "dimensions differ";
  } else if (pa.disc_square_class != pb.disc_square_class) {
    r.reason = "discriminant square classes differ (" + pa.disc_square_class.get_str() + " vs " +
               pb.disc_square_class.get_str() + ")";
  } else if (pa.signature != pb.signature) {
    r.reason = "signatures differ";
  } else {
    for (const auto& [v, h] : r.hasse_by_place)
      if (h.first != h.second) {
        r.reason = "Hasse invariants differ at " + place_name(v);
        break;
      }
  }
  r.equivalent = r.reason.empty();
  return r;
}

namespace {

void require_tame(const NumberField& k) {
  for (const auto& p : k.disc_factorization().primes()) {
    Tameness t = is_tame_at(k, p);
    if (t == Tameness::Wild)
      throw Error(ErrorKind::WildRamification, k.label() + " is wildly ramified at " + p.get_str());
  }
}

}  // namespace

bool same_genus_tame(const NumberField& f, const NumberField& l, const FactorOptions& opts) {
  require_tame(f);
  require_tame(l);
  if (f.disc() != l.disc()) return false;
  return rationally_equivalent(trace_gram(f), trace_gram(l), opts).equivalent;
}

namespace {

struct Piece {
  unsigned scale;
  unsigned dim;
  Rat unit_det;
};

unsigned rat_mod8(const Rat& u) {
  Int r = mod_floor(u.get_num() * u.get_den(), Int(8));
  return static_cast<unsigned>(r.get_ui());
}

int rat_legendre(const Rat& u, const Int& p) { return legendre(u.get_num(), p) * legendre(u.get_den(), p); }

// Schur complement after pivoting on the rows/cols in `idx`.
RatMatrix eliminate(const RatMatrix& a, const std::vector<std::size_t>& idx) {
  const std::size_t n = a.rows(), k = idx.size();
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(i);
  RatMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = a(idx[i], idx[j]);
  RatMatrix binv = inverse(b);
  RatMatrix out(rest.size(), rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i; j < rest.size(); ++j) {
      Rat s = a(rest[i], rest[j]);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          if (binv(x, y) != 0) s -= a(rest[i], idx[x]) * binv(x, y) * a(idx[y], rest[j]);
      out(i, j) = s;
      out(j, i) = s;
    }
  return out;
}

}  // namespace

GenusSymbol genus_symbol(const IntMatrix& gram, const Int& p) {
  if (!gram.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "Gram matrix must be symmetric");
  if (gram.rows() > 0 && determinant(gram) == 0) throw Error(ErrorKind::Degenerate, "form is degenerate");
  const bool two = p == 2;
  RatMatrix a = to_rat(gram);
  std::vector<Piece> pieces;
  while (a.rows() > 0) {
    const std::size_t n = a.rows();
    int best = 0;
    bool found = false;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (a(i, j) == 0) continue;
        int v = valuation(a(i, j), p);
        // Prefer diagonal pivots at equal valuation.
        if (!found || v < best || (v == best && i == j && bi != bj)) {
          best = v;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (bi != bj && !two) {
      for (std::size_t k = 0; k < n; ++k) a(bi, k) += a(bj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, bi) += a(k, bj);
      bj = bi;
    }
    const unsigned scale = static_cast<unsigned>(best);
    Rat pv = ipow(p, scale);
    if (bi == bj) {
      pieces.push_back({scale, 1, a(bi, bi) / pv});
      a = eliminate(a, {bi});
    } else {
      Rat det = a(bi, bi) * a(bj, bj) - a(bi, bj) * a(bi, bj);
      pieces.push_back({scale, 2, det / (pv * pv)});
      a = eliminate(a, {bi, bj});
    }
  }
  GenusSymbol g;
  g.p = p;
  g.exact = !two;
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.scale < y.scale; });
  for (const auto& pc : pieces) {
    if (g.blocks.empty() || g.blocks.back().scale != pc.scale) {
      JordanBlock b;
      b.scale = pc.scale;
      b.dim = 0;
      g.blocks.push_back(b);
    }
    JordanBlock& b = g.blocks.back();
    b.dim += pc.dim;
    if (two) {
      b.det_mod8 = (b.det_mod8 * rat_mod8(pc.unit_det)) % 8;
      if (pc.dim == 1) {
        b.odd_type = true;
        b.oddity = (b.oddity + rat_mod8(pc.unit_det)) % 8;
      }
    } else {
      b.det_sign *= rat_legendre(pc.unit_det, p);
    }
  }
  return g;
}

std::string GenusSymbol::to_string() const {
  std::ostringstream os;
  os << "p=" << p << (exact ? "" : " (partial)") << ":";
  for (const auto& b : blocks) {
    os << " [" << b.scale << "," << b.dim << ",";
    if (p == 2)
      os << b.det_mod8 << "," << (b.odd_type ? "odd" : "even") << "," << b.oddity;
    else
      os << (b.det_sign > 0 ? "+1" : "-1");
    os << "]";
  }
  return os.str();
}

const char* to_string(GenusComparison c) noexcept {
  switch (c) {
    case GenusComparison::Same: return "same";
    case GenusComparison::Different: return "different";
    case GenusComparison::UndeterminedAt2: return "undetermined-at-2";
  }
  return "?";
}

GenusComparison same_genus(const QuadLattice& a, const QuadLattice& b, const FactorOptions& opts) {
  if (a.dim() != b.dim() || a.det() != b.det()) return GenusComparison::Different;
  if (form_signature(a) != form_signature(b)) return GenusComparison::Different;
  for (const auto& p : factor_integer(a.det(), opts).primes()) {
    if (p == 2) continue;
    if (genus_symbol(a, p).blocks != genus_symbol(b, p).blocks) return GenusComparison::Different;
  }
  GenusSymbol x = genus_symbol(a, Int(2)), y = genus_symbol(b, Int(2));
  if (x.blocks == y.blocks) return GenusComparison::Same;
  auto shape = [](const GenusSymbol& g) {
    std::vector<std::tuple<unsigned, unsigned, bool>> s;
    for (const auto& blk : g.blocks) s.emplace_back(blk.scale, blk.dim, blk.odd_type);
    return s;
  };
  // Scales, dimensions and types of the Jordan components are invariants.
  if (shape(x) != shape(y)) return GenusComparison::Different;
  return GenusComparison::UndeterminedAt2;
}

bool watson_spinor_criterion(int n, const Int& d, const FactorOptions& opts) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "d must be nonzero");
  const unsigned m = static_cast<unsigned>(n * (n - 1) / 2);
  if (m == 0) return false;  // k^0 = 1 divides everything
  for (const auto& [p, e] : factor_integer(d, opts).factors) {
    if (p == 2 && e >= 2 * m) return false;
    if (p != 2 && e >= m) return false;
  }
  return true;
}

const char* to_string(EquivalenceVerdict::Outcome o) noexcept {
  switch (o) {
    case EquivalenceVerdict::Outcome::Equivalent: return "equivalent";
    case EquivalenceVerdict::Outcome::NotEquivalent: return "not-equivalent";
    case EquivalenceVerdict::Outcome::SameSpinorGenus: return "same-spinor-genus";
    case EquivalenceVerdict::Outcome::HypothesesNotMet: return "hypotheses-not-met";
    case EquivalenceVerdict::Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

EquivalenceVerdict decide_theorem_general(const NumberField& f, const NumberField& l, const FactorOptions& opts) {
  using Outcome = EquivalenceVerdict::Outcome;
  EquivalenceVerdict v;
  auto add = [&](std::string step, std::string criterion, bool holds, std::string detail = {}) {
    v.proof_trace.push_back({std::move(step), std::move(criterion), holds, std::move(detail)});
    return holds;
  };
  auto stop = [&](Outcome o, std::string why) {
    v.outcome = o;
    v.reason = std::move(why);
    return v;
  };
  auto sig_str = [](std::pair<int, int> s) {
    return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
  };

  const int n = f.degree();
  if (!add("degree", "same degree n >= 3", n == l.degree() && n >= 3,
           std::to_string(n) + " and " + std::to_string(l.degree())))
    return stop(Outcome::HypothesesNotMet, "degree");
  const Int& d = f.disc();
  if (!add("discriminant", "equal field discriminants", d == l.disc(), d.get_str() + " and " + l.disc().get_str()))
    return stop(Outcome::HypothesesNotMet, "discriminant");
  auto primes = f.disc_factorization().primes();
  if (!add("single ramified prime", "exactly one finite prime ramifies in the first field", primes.size() == 1,
           f.disc_factorization().to_string()))
    return stop(Outcome::HypothesesNotMet, "single ramified prime");
  const Int p = primes.front();
  for (const NumberField* k : {&f, &l}) {
    Tameness t = is_tame_at(*k, p);
    std::string who = k == &f ? "first field" : "second field";
    if (!add("tameness", p.get_str() + " tamely ramified in the " + who, t == Tameness::Tame, to_string(t)))
      return stop(Outcome::HypothesesNotMet, "tameness");
  }
  if (!add("signature", "equal signatures", f.signature() == l.signature(),
           sig_str(f.signature()) + " and " + sig_str(l.signature())))
    return stop(Outcome::HypothesesNotMet, "signature");
  const int s = f.signature().second;
  const bool indefinite = add("not totally real", "s > 0", s > 0, "s = " + std::to_string(s));

  // Proof chain, each argued step confirmed by the computed invariants.
  QuadLattice tf = trace_gram(f), tl = trace_gram(l);
  LocalProfile pf = local_profile(tf, opts), pl = local_profile(tl, opts);
  auto inconsistent = [&](const std::string& step) {
    return stop(Outcome::Undetermined, "computed invariants contradict the argued step '" + step + "'");
  };
  const int h_inf = (s * (s - 1) / 2) % 2 == 0 ? 1 : -1;
  if (!add("hasse at infinity", "type (r+s, s) gives h = (-1)^{s(s-1)/2} for both forms",
           pf.hasse_at(kRealPlace) == h_inf && pl.hasse_at(kRealPlace) == h_inf, "h = " + std::to_string(h_inf)))
    return inconsistent("hasse at infinity");
  if (!add("hasse at 2", "tame with equal determinant and discriminant gives equal h_2 (cited; computed check)",
           pf.hasse_at(Int(2)) == pl.hasse_at(Int(2)),
           std::to_string(pf.hasse_at(Int(2))) + " and " + std::to_string(pl.hasse_at(Int(2)))))
    return inconsistent("hasse at 2");
  bool away = true;
  for (const auto* prof : {&pf, &pl})
    for (const auto& [place, h] : prof->hasse)
      if (place != 0 && place != 2 && place != p && h != 1) away = false;
  if (!add("hasse away from 2p", "l not dividing 2d gives h_l = 1", away)) return inconsistent("hasse away from 2p");
  if (!add("hasse at p", "product formula gives equal h_p", pf.hasse_at(p) == pl.hasse_at(p),
           std::to_string(pf.hasse_at(p)) + " and " + std::to_string(pl.hasse_at(p))))
    return inconsistent("hasse at p");
  RationalComparison rc = rationally_equivalent(tf, tl, opts);
  if (!add("rational equivalence", "equal Hasse invariants at every place, equal dim, disc and signature",
           rc.equivalent, rc.reason))
    return inconsistent("rational equivalence");
  GenusComparison gc = same_genus(tf, tl, opts);
  if (!add("genus", "tame fields with equal discriminant and rationally equivalent forms share a genus",
           gc != GenusComparison::Different, std::string("computed: ") + to_string(gc)))
    return inconsistent("genus");
  bool watson = watson_spinor_criterion(n, d, opts);
  const unsigned m = static_cast<unsigned>(n * (n - 1) / 2);
  if (!add("spinor genus", "no integer k >= 3 with k^{n(n-1)/2} | d, so genus = spinor genus (both forms)", watson,
           "m = " + std::to_string(m) + ", v_p(d) = " + std::to_string(valuation(d, p)) +
               "; reading: k ranges over integers >= 3"))
    return inconsistent("spinor genus");
  if (!indefinite) return stop(Outcome::SameSpinorGenus, "totally real: forms are definite, Eichler does not apply");
  add("eichler", "indefinite forms of rank >= 3 in one spinor genus are equivalent", true);
  v.outcome = Outcome::Equivalent;
  return v;
}

}  // namespace traceform
