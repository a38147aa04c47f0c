#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "braidrep/bratteli.hpp"
#include "braidrep/constructions.hpp"

namespace oracle {

using namespace braidrep;

// ---- random generators ----

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rational rational(long range = 9, long maxden = 5) {
    Rational q(integer(-range, range), integer(1, maxden));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long range = 9, long maxden = 5) {
    Rational q = 0;
    while (q == 0) q = rational(range, maxden);
    return q;
  }
  Matrix matrix(size_t r, size_t c, long range = 3) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m(i, j) = FieldElem(rational(range, 3));
    return m;
  }
  Matrix invertible(size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (!det(m).is_zero()) return m;
    }
  }
  HMatrix hmatrix(size_t n, int D) {
    std::vector<Matrix> cs;
    for (int k = 0; k <= D; ++k) cs.push_back(matrix(n, n, 2));
    return HMatrix(std::move(cs));
  }
  // 1 + h(...) with random higher terms
  HMatrix unipotent(size_t n, int D) {
    HMatrix m = hmatrix(n, D);
    m.coeff(0) = Matrix::identity(n);
    return m;
  }
};

// ---- symmetric group ----

inline long contents(const Partition& p) {
  long s = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) s += j - static_cast<long>(i);
  return s;
}

inline bool contains_partition(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// permutation matrix with P e_j = e_{p(j)}, 0-based images
inline Matrix permutation(const std::vector<int>& p) {
  Matrix m(p.size(), p.size());
  for (size_t j = 0; j < p.size(); ++j) m(p[j], j) = 1;
  return m;
}

inline std::vector<int> swap_perm(int n, int k) {  // s_k, 1-based k
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::swap(p[k - 1], p[k]);
  return p;
}

// ---- graded dimensions ----

// Hilbert series of U(F_3) (x) k[Z] (x) U(F_2): 1/((1-3t)(1-t)(1-2t))
inline std::vector<size_t> ut4_pbw_dims(int D) {
  std::vector<size_t> out;
  for (int d = 0; d <= D; ++d) {
    size_t s = 0;
    for (int a = 0; a <= d; ++a)
      for (int c = 0; a + c <= d; ++c) {
        size_t x = 1;
        for (int i = 0; i < a; ++i) x *= 3;
        for (int i = 0; i < c; ++i) x *= 2;
        s += x;
      }
    out.push_back(s);
  }
  return out;
}

// ---- infinitesimal braid relations on a family t_ij ----

inline std::vector<std::string> tn_failures(int n, const std::function<Matrix(int, int)>& t) {
  std::vector<std::string> bad;
  auto name = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (t(i, j) != t(j, i)) bad.push_back("symmetry " + name(i, j));
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (!commutator(t(i, j), t(i, k) + t(j, k)).is_zero()) bad.push_back("[t" + name(i, j) + ",t" + name(i, k) + "+t" + name(j, k) + "]");
        for (int l = 1; l <= n; ++l) {
          if (l == i || l == j || l == k) continue;
          if (!commutator(t(i, j), t(k, l)).is_zero()) bad.push_back("[t" + name(i, j) + ",t" + name(k, l) + "]");
        }
      }
    }
  return bad;
}

// ---- exterior algebra on k^n, basis = sorted subsets ----

struct Exterior {
  int n;
  std::vector<std::vector<int>> basis;  // all subsets, grouped by size

  explicit Exterior(int n_) : n(n_) {
    for (int p = 0; p <= n; ++p) {
      std::vector<std::vector<int>> level;
      for (uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == p) {
          std::vector<int> s;
          for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.push_back(i);
          level.push_back(s);
        }
      std::sort(level.begin(), level.end());
      basis.insert(basis.end(), level.begin(), level.end());
    }
  }
  size_t dim() const { return basis.size(); }
  size_t index(const std::vector<int>& s) const {
    return static_cast<size_t>(std::find(basis.begin(), basis.end(), s) - basis.begin());
  }
  // sort a word of distinct indices, returning the sign
  static int sort_sign(std::vector<int>& w) {
    int sign = 1;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j + 1 < w.size() - i; ++j)
        if (w[j] > w[j + 1]) {
          std::swap(w[j], w[j + 1]);
          sign = -sign;
        }
    return sign;
  }
  // Koszul d as a dim x dim matrix
  Matrix d() const {
    Matrix m(dim(), dim());
    for (size_t c = 0; c < dim(); ++c) {
      const auto& s = basis[c];
      for (size_t j = 0; j < s.size(); ++j) {
        std::vector<int> t = s;
        t.erase(t.begin() + static_cast<long>(j));
        m(index(t), c) += FieldElem(j % 2 == 0 ? 1 : -1);
      }
    }
    return m;
  }
  // left multiplication by a vector y in E
  Matrix wedge(const Vec& y) const {
    Matrix m(dim(), dim());
    for (size_t c = 0; c < dim(); ++c)
      for (int i = 0; i < n; ++i) {
        if (y[i].is_zero()) continue;
        const auto& s = basis[c];
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        std::vector<int> w{i};
        w.insert(w.end(), s.begin(), s.end());
        int sign = sort_sign(w);
        m(index(w), c) += FieldElem(sign) * y[i];
      }
    return m;
  }
  // permutation action e_S -> e_{p(S)}
  Matrix perm(const std::vector<int>& p) const {
    Matrix m(dim(), dim());
    for (size_t c = 0; c < dim(); ++c) {
      std::vector<int> w;
      for (int i : basis[c]) w.push_back(p[i]);
      int sign = sort_sign(w);
      m(index(w), c) = FieldElem(sign);
    }
    return m;
  }
  // the block of m acting on degree p
  Matrix degree_block(const Matrix& m, int p) const {
    std::vector<size_t> idx;
    for (size_t i = 0; i < dim(); ++i)
      if (static_cast<int>(basis[i].size()) == p) idx.push_back(i);
    Matrix b(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) b(i, j) = m(idx[i], idx[j]);
    return b;
  }
};

// g-family on all of Lambda E: sigma_k = s_k + y_k ^ d, y_k = a/n (g_k + g_{k+1}) - 2a/n^2 w
inline Matrix hook_g_full(int n, int k, const FieldElem& a) {
  Exterior X(n);
  Vec y(n, FieldElem(-2) * a / FieldElem(static_cast<long>(n) * n));
  y[k - 1] += a / FieldElem(n);
  y[k] += a / FieldElem(n);
  return X.perm(swap_perm(n, k)) + X.wedge(y) * X.d();
}

// f-family on E, read off the three-line display
inline Matrix hook_f_level1(int n, int k, const FieldElem& a) {
  Matrix m = permutation(swap_perm(n, k));
  FieldElem nn(static_cast<long>(n) * n);
  for (int j = 1; j <= n; ++j) {
    FieldElem c = (j == k || j == k + 1) ? a * FieldElem(n - 2) / nn : FieldElem(-2) * a / nn;
    for (int i = 0; i < n; ++i) m(i, j - 1) += c;  // + c v
  }
  return m;
}

// ---- truncated matrices ----

inline HMatrix kron_h(const HMatrix& a, const HMatrix& b) {
  int D = a.degree();
  std::vector<Matrix> cs(D + 1, Matrix(a.n() * b.n(), a.n() * b.n()));
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) cs[i + j] += kron(a.coeff(i), b.coeff(j));
  return HMatrix(std::move(cs));
}

// h-linear coefficient of log det(M0 + h M1 + ...) = tr(M0^{-1} M1)
inline FieldElem log_det_h1(const HMatrix& m) {
  auto inv = inverse(m.coeff(0));
  return (*inv * m.coeff(1)).trace();
}

inline bool squarefree_charpoly(const Matrix& m) {
  Poly p = charpoly(m);
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace oracle
