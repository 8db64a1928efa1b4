#pragma once

// Shared generators and a naive reference evaluator for the test suites.
// The reference works on raw mpq_class arrays and shares no code with the
// library's linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsalg/corpus.hpp"
#include "nsalg/findim.hpp"
#include "nsalg/split.hpp"

namespace nsalg::testkit {

inline constexpr std::uint64_t kSeed = 20240611;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  /// Small rational p/q with |p| <= 3, 1 <= q <= 3.
  Rat rat(bool nonzero = false) {
    for (;;) {
      Rat r(integer(-3, 3), integer(1, 3));
      if (!nonzero || !r.is_zero()) return r;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, double density = 0.6) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (coin(density)) m(i, j) = rat();
      }
    }
    return m;
  }

  BilinearMap tensor(std::size_t p, std::size_t q, std::size_t r, double density = 0.3) {
    std::vector<Rat> data(p * q * r);
    for (auto& x : data) {
      if (coin(density)) x = rat();
    }
    return BilinearMap(p, q, r, std::move(data));
  }

  /// Random multilinear monomial on labels 1..n over the given ops.
  Monomial monomial(std::size_t n, const std::vector<OpSymbol>& ops) {
    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(labels.begin(), labels.end(), rng_);
    return build(labels, 0, n, ops);
  }

  Relation relation(std::size_t n, const std::vector<OpSymbol>& ops, std::size_t terms) {
    Relation r;
    r.arity = n;
    for (std::size_t t = 0; t < terms; ++t) r.terms.push_back(Term{rat(true), monomial(n, ops)});
    return r;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  Monomial build(const std::vector<std::uint32_t>& labels, std::size_t lo, std::size_t hi,
                 const std::vector<OpSymbol>& ops) {
    if (hi - lo == 1) return Monomial::leaf(labels[lo]);
    std::size_t split = lo + 1 + index(hi - lo - 1);
    return Monomial::node(ops[index(ops.size())], build(labels, lo, split, ops), build(labels, split, hi, ops));
  }

  std::mt19937_64 rng_;
};

// -- naive reference ----------------------------------------------------------

using Q = mpq_class;
using QVec = std::vector<Q>;

struct Naive {
  std::size_t d = 0;
  std::vector<Q> c;  // c[(i*d + j)*d + k]

  explicit Naive(const BilinearMap& t) : d(t.left_dim()) {
    for (const auto& x : t.data()) c.push_back(x.to_mpq());
  }

  QVec mul(const QVec& x, const QVec& y) const {
    QVec out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * c[(i * d + j) * d + k];
      }
    }
    return out;
  }
};

inline std::vector<std::vector<Q>> to_q(const Matrix& m) {
  std::vector<std::vector<Q>> out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_mpq();
  }
  return out;
}

inline QVec mat_apply(const std::vector<std::vector<Q>>& m, const QVec& x) {
  QVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

inline QVec unit(std::size_t d, std::size_t i) {
  QVec v(d);
  v[i] = 1;
  return v;
}

inline QVec add(QVec a, const QVec& b, const Q& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

/// N(x)N(y) - N(N(x)y + xN(y) - N(xy)) vanishes on all basis pairs.
inline bool naive_nijenhuis(const BilinearMap& mu, const Matrix& n) {
  Naive a(mu);
  auto nq = to_q(n);
  for (std::size_t i = 0; i < a.d; ++i) {
    for (std::size_t j = 0; j < a.d; ++j) {
      QVec x = unit(a.d, i), y = unit(a.d, j);
      QVec nx = mat_apply(nq, x), ny = mat_apply(nq, y);
      QVec inner = add(add(a.mul(nx, y), a.mul(x, ny)), mat_apply(nq, a.mul(x, y)), -1);
      if (a.mul(nx, ny) != mat_apply(nq, inner)) return false;
    }
  }
  return true;
}

/// R(x)R(y) - R(R(x)y + xR(y) + lambda xy) vanishes on all basis pairs.
inline bool naive_rb(const BilinearMap& mu, const Matrix& r, const Rat& lambda) {
  Naive a(mu);
  auto rq = to_q(r);
  const Q l = lambda.to_mpq();
  for (std::size_t i = 0; i < a.d; ++i) {
    for (std::size_t j = 0; j < a.d; ++j) {
      QVec x = unit(a.d, i), y = unit(a.d, j);
      QVec rx = mat_apply(rq, x), ry = mat_apply(rq, y);
      QVec inner = add(add(a.mul(rx, y), a.mul(x, ry)), a.mul(x, y), l);
      if (a.mul(rx, ry) != mat_apply(rq, inner)) return false;
    }
  }
  return true;
}

/// (xy)z - x(yz) vanishes on all basis triples.
inline bool naive_associative(const BilinearMap& mu) {
  Naive a(mu);
  for (std::size_t i = 0; i < a.d; ++i) {
    for (std::size_t j = 0; j < a.d; ++j) {
      for (std::size_t k = 0; k < a.d; ++k) {
        QVec x = unit(a.d, i), y = unit(a.d, j), z = unit(a.d, k);
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z))) return false;
      }
    }
  }
  return true;
}

/// Random matrix, scaled projection or nilpotent shift; mixes passing and
/// failing Rota-Baxter candidates.
inline Matrix rb_candidate(Gen& g, std::size_t d, const Rat& lambda, const std::vector<corpus::Twilled>& tw,
                           const FinAlgebra& alg) {
  switch (g.integer(0, 3)) {
    case 0: return Rat(-1) * lambda * Matrix::identity(d);
    case 1:
      for (const auto& t : tw) {
        if (t.algebra == alg) return Rat(-1) * lambda * (g.coin() ? t.p1 : t.p2);
      }
      return g.matrix(d, d);
    case 2: {
      Matrix m(d, d);
      m(g.index(d), g.index(d)) = g.rat(true);
      return m;
    }
    default: return g.matrix(d, d);
  }
}

struct RBInstance {
  LinOperator op;
  Rat lambda;
  std::string category;
};

/// Relative Rota-Baxter candidates over the bundled bimodules: standard
/// bimodules of the corpus algebras (with . = mu) and the column module.
inline std::vector<RBInstance> rb_instances(Gen& g, std::size_t count) {
  const auto tw = corpus::twilled();
  const auto algs = corpus::algebras();
  const Bimodule column = corpus::column_module();
  std::vector<RBInstance> out;
  while (out.size() < count) {
    if (g.integer(0, 4) == 0) {
      Matrix r = g.coin() ? g.rat(true) * corpus::column_module_rb() : g.matrix(3, 2, 0.3);
      out.push_back({relative_rb_operator(column, r, Rat()), Rat(), "associative"});
      continue;
    }
    const auto& ex = algs[g.index(algs.size())];
    const Rat lambda = g.coin(0.4) ? Rat() : g.rat(true);
    const Matrix m = rb_candidate(g, ex.algebra.dim, lambda, tw, ex.algebra);
    out.push_back({rb_operator(ex.algebra, m, lambda), lambda, ex.categories.front()});
  }
  return out;
}

}  // namespace nsalg::testkit
