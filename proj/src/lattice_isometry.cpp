#include "traceform/lattice_isometry.hpp"

#include <algorithm>
#include <numeric>

namespace traceform {

bool is_positive_definite(const IntMatrix& gram) {
  if (!gram.is_symmetric()) return false;
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

namespace {

void require_positive_definite(const IntMatrix& g) {
  if (!is_positive_definite(g)) throw Error(ErrorKind::NotPositiveDefinite, "form is not positive definite");
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector mat_vec(const IntMatrix& g, const IntVector& v) {
  IntVector out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (v[j] != 0) out[i] += g(i, j) * v[j];
  return out;
}

class Enumerator {
 public:
  Enumerator(const IntMatrix& g, const Int& bound) : g_(g), n_(g.rows()), q_(to_rat(g)), x_(n_) {
    // Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) /= q_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
    }
    bound_ = bound;
  }

  std::vector<ShortVector> run() {
    if (n_ > 0 && bound_ > 0) recurse(n_ - 1, Rat(bound_), true);
    std::sort(out_.begin(), out_.end(), [](const ShortVector& a, const ShortVector& b) {
      if (a.norm != b.norm) return a.norm < b.norm;
      return a.coords < b.coords;
    });
    return std::move(out_);
  }

 private:
  void recurse(std::size_t i, const Rat& remaining, bool top_zero) {
    Rat c = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x_[j] != 0) c -= q_(i, j) * x_[j];
    Rat r = remaining / q_(i, i);
    Int s = isqrt(floor_rat(r)) + 1;
    Int lo = ceil_rat(c - s), hi = floor_rat(c + s);
    if (top_zero && lo < 0) lo = 0;
    for (Int x = lo; x <= hi; ++x) {
      Rat d = Rat(x) - c;
      Rat used = q_(i, i) * d * d;
      if (used > remaining) continue;
      x_[i] = x;
      bool still_zero = top_zero && x == 0;
      if (i == 0) {
        if (!still_zero) {
          IntVector v(x_.begin(), x_.end());
          Int norm = dot(v, mat_vec(g_, v));
          out_.push_back({std::move(v), std::move(norm)});
        }
      } else {
        recurse(i - 1, remaining - used, still_zero);
      }
    }
    x_[i] = 0;
  }

  const IntMatrix& g_;
  std::size_t n_;
  RatMatrix q_;
  IntVector x_;
  Int bound_;
  std::vector<ShortVector> out_;
};

}  // namespace

ShortVectorSet short_vectors(const IntMatrix& gram, const Int& bound) {
  require_positive_definite(gram);
  return {bound, Enumerator(gram, bound).run()};
}

std::vector<Int> theta_slice(const IntMatrix& gram, long max_norm) {
  std::vector<Int> r(static_cast<std::size_t>(std::max(max_norm, 0L)));
  for (const auto& v : short_vectors(gram, Int(max_norm)).vectors) r[v.norm.get_ui() - 1] += 2;
  return r;
}

IntMatrix reduce_gram(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  IntMatrix g = gram, t = IntMatrix::identity(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || g(j, j) == 0) continue;
        Int q = round_rat(make_rat(g(i, j), g(j, j)));
        if (q == 0) continue;
        Int next = g(i, i) - 2 * q * g(i, j) + q * q * g(j, j);
        if (next >= g(i, i)) continue;
        for (std::size_t k = 0; k < n; ++k) t(k, i) -= q * t(k, j);
        for (std::size_t k = 0; k < n; ++k) g(i, k) -= q * g(j, k);
        for (std::size_t k = 0; k < n; ++k) g(k, i) -= q * g(k, j);
        changed = true;
      }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return g(a, a) < g(b, b); });
  IntMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) out(k, c) = t(k, perm[c]);
  return out;
}

namespace {

// Backtracking for U with U^T G U = target, columns drawn from short vectors.
class IsometrySearch {
 public:
  IsometrySearch(const IntMatrix& g, const IntMatrix& target, const std::vector<ShortVector>& shorts,
                 std::uint64_t max_nodes, bool count_all)
      : g_(g), target_(target), n_(g.rows()), max_nodes_(max_nodes), count_all_(count_all) {
    cand_.resize(n_);
    image_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (const auto& sv : shorts) {
        if (sv.norm != target(i, i)) continue;
        IntVector neg = sv.coords;
        for (auto& x : neg) x = -x;
        for (const IntVector* v : std::initializer_list<const IntVector*>{&sv.coords, &neg}) {
          cand_[i].push_back(*v);
          image_[i].push_back(mat_vec(g, *v));
        }
      }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return cand_[a].size() < cand_[b].size(); });
    chosen_.assign(n_, 0);
  }

  bool run() {
    if (n_ == 0) {
      ++solutions_;
      witness_ = IntMatrix(0, 0);
      return true;
    }
    dfs(0);
    return solutions_ > 0;
  }

  std::uint64_t solutions() const { return solutions_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::optional<IntMatrix>& witness() const { return witness_; }

 private:
  bool dfs(std::size_t depth) {
    const std::size_t pos = order_[depth];
    for (std::size_t c = 0; c < cand_[pos].size(); ++c) {
      if (++nodes_ > max_nodes_) throw Error(ErrorKind::SearchExhausted, "isometry search node budget exhausted");
      const IntVector& v = cand_[pos][c];
      bool ok = true;
      for (std::size_t l = 0; l < depth && ok; ++l) {
        std::size_t other = order_[l];
        ok = dot(v, image_[other][chosen_[l]]) == target_(pos, other);
      }
      if (!ok) continue;
      chosen_[depth] = c;
      if (depth + 1 == n_) {
        ++solutions_;
        if (!witness_) {
          IntMatrix u(n_, n_);
          for (std::size_t l = 0; l < n_; ++l)
            for (std::size_t k = 0; k < n_; ++k) u(k, order_[l]) = cand_[order_[l]][chosen_[l]][k];
          witness_ = u;
        }
        if (!count_all_) return true;
      } else if (dfs(depth + 1) && !count_all_) {
        return true;
      }
    }
    return false;
  }

  const IntMatrix& g_;
  const IntMatrix& target_;
  std::size_t n_;
  std::uint64_t max_nodes_;
  bool count_all_;
  std::vector<std::vector<IntVector>> cand_, image_;
  std::vector<std::size_t> order_, chosen_;
  std::uint64_t nodes_ = 0, solutions_ = 0;
  std::optional<IntMatrix> witness_;
};

Int max_diagonal(const IntMatrix& g) {
  Int m = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) m = std::max(m, g(i, i));
  return m;
}

bool all_even_diagonal(const IntMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (!mpz_even_p(g(i, i).get_mpz_t())) return false;
  return true;
}

bool is_zero_mod2(const IntMatrix& g) {
  for (const auto& x : g.data())
    if (!mpz_even_p(x.get_mpz_t())) return false;
  return true;
}

}  // namespace

IsometryResult is_isometric(const IntMatrix& g1, const IntMatrix& g2, const IsometryOptions& opts) {
  if (g1.rows() != g2.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  require_positive_definite(g1);
  require_positive_definite(g2);
  IsometryResult res;
  auto reject = [&](std::string why) {
    res.separating_invariant = std::move(why);
    return res;
  };
  const std::size_t n = g1.rows();
  Int d1 = n ? determinant(g1) : Int(1), d2 = n ? determinant(g2) : Int(1);
  if (d1 != d2) return reject("determinant " + d1.get_str() + " vs " + d2.get_str());
  bool z1 = is_zero_mod2(g1), z2 = is_zero_mod2(g2);
  if (z1 != z2) return reject(std::string("Gram mod 2 is zero: ") + (z1 ? "yes" : "no") + " vs " + (z2 ? "yes" : "no"));
  bool e1 = all_even_diagonal(g1), e2 = all_even_diagonal(g2);
  if (e1 != e2) return reject(std::string("lattice parity ") + (e1 ? "even" : "odd") + " vs " + (e2 ? "even" : "odd"));

  IntMatrix t1 = reduce_gram(g1), t2 = reduce_gram(g2);
  IntMatrix r1 = congruent(g1, t1), r2 = congruent(g2, t2);
  Int bound = std::max(max_diagonal(r1), max_diagonal(r2));
  ShortVectorSet s1 = short_vectors(r1, bound), s2 = short_vectors(r2, bound);
  std::vector<Int> th1(bound.get_ui()), th2(bound.get_ui());
  for (const auto& v : s1.vectors) th1[v.norm.get_ui() - 1] += 2;
  for (const auto& v : s2.vectors) th2[v.norm.get_ui() - 1] += 2;
  if (th1 != th2) {
    auto first_nonzero = [](const std::vector<Int>& t) {
      for (std::size_t m = 0; m < t.size(); ++m)
        if (t[m] != 0) return m + 1;
      return t.size() + 1;
    };
    std::size_t m1 = first_nonzero(th1), m2 = first_nonzero(th2);
    if (m1 != m2) return reject("minimum " + std::to_string(m1) + " vs " + std::to_string(m2));
    for (std::size_t m = 0; m < th1.size(); ++m)
      if (th1[m] != th2[m])
        return reject("r(" + std::to_string(m + 1) + ") " + th1[m].get_str() + " vs " + th2[m].get_str());
  }

  IsometrySearch search(r1, r2, s1.vectors, opts.max_nodes, false);
  bool found = search.run();
  res.nodes = search.nodes();
  if (!found) return reject("no isometry (exhaustive search, " + std::to_string(res.nodes) + " nodes)");
  IntMatrix t2inv = to_int(inverse(to_rat(t2)));
  IntMatrix u = n ? t1 * *search.witness() * t2inv : IntMatrix(0, 0);
  if (!(congruent(g1, u) == g2) || (n && abs(determinant(u)) != 1))
    throw Error(ErrorKind::InvalidArgument, "internal error: isometry witness failed verification");
  res.isometric = true;
  res.witness = u;
  return res;
}

std::uint64_t automorphism_count(const IntMatrix& gram, const IsometryOptions& opts) {
  require_positive_definite(gram);
  IntMatrix r = congruent(gram, reduce_gram(gram));
  ShortVectorSet s = short_vectors(r, max_diagonal(r));
  IsometrySearch search(r, r, s.vectors, opts.max_nodes, true);
  search.run();
  return search.solutions();
}

BruteForceIsometry brute_force_isometric(const IntMatrix& g1, const IntMatrix& g2, long height) {
  const std::size_t n = g1.rows();
  if (n != g2.rows()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  if (n > 3 || height > 5 || height < 0) throw Error(ErrorKind::OutOfRange, "brute force limited to dim <= 3, H <= 5");
  std::vector<IntVector> box;
  IntVector v(n, Int(-height));
  for (;;) {
    box.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == height) v[i++] = -height;
    if (i == n) break;
    ++v[i];
  }
  std::vector<std::vector<const IntVector*>> cols(n);
  for (const auto& w : box) {
    Int norm = dot(w, mat_vec(g1, w));
    for (std::size_t i = 0; i < n; ++i)
      if (norm == g2(i, i)) cols[i].push_back(&w);
  }
  BruteForceIsometry out;
  std::vector<const IntVector*> pick(n);
  auto finish = [&]() {
    IntMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) u(k, j) = (*pick[j])[k];
    if (n && abs(determinant(u)) != 1) return false;
    if (!(congruent(g1, u) == g2)) return false;
    out.found = true;
    out.witness = u;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == n) return finish();
    for (const IntVector* w : cols[j]) {
      pick[j] = w;
      IntVector gw = mat_vec(g1, *w);
      bool ok = true;
      for (std::size_t l = 0; l < j && ok; ++l) ok = dot(*pick[l], gw) == g2(l, j);
      if (ok && self(self, j + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace traceform
