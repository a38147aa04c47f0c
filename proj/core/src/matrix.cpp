#include "braidrep/matrix.hpp"

#include <algorithm>

namespace braidrep {

Matrix::Matrix(size_t rows, size_t cols, Vec data) : r_(rows), c_(cols), a_(std::move(data)) {
  if (a_.size() != rows * cols) throw InputError("matrix data size mismatch");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<FieldElem>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  a_.reserve(r_ * c_);
  for (const auto& row : rows) {
    if (row.size() != c_) throw InputError("ragged matrix literal");
    for (const auto& x : row) a_.push_back(x);
  }
}

Matrix Matrix::identity(size_t n) { return scalar(n, FieldElem(1)); }

Matrix Matrix::scalar(size_t n, const FieldElem& s) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diag(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.r_) throw InputError("ragged column list");
    for (size_t i = 0; i < m.r_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != FieldElem(i == j ? 1 : 0)) return false;
  return true;
}

FieldElem Matrix::trace() const {
  FieldElem t;
  for (size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::column(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix size mismatch in +");
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix size mismatch in -");
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const FieldElem& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw InputError("matrix size mismatch in *");
  Matrix m(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) FieldElem::fma(m(i, j), x, b(k, j));
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.c_ != v.size()) throw InputError("matrix-vector size mismatch");
  Vec r(a.r_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) FieldElem::fma(r[i], a(i, k), v[k]);
  return r;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  Matrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix power(const Matrix& a, unsigned k) {
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

RrefResult rref(Matrix a) {
  RrefResult res;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    FieldElem inv = a(row, col).inverse();
    for (size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      FieldElem f = a(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.r = std::move(a);
  return res;
}

size_t rank(const Matrix& a) {
  SpanBuilder sb(a.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    Vec v(a.cols());
    for (size_t j = 0; j < a.cols(); ++j) v[j] = a(i, j);
    sb.add(v);
  }
  return sb.dim();
}

std::vector<Vec> nullspace(const Matrix& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (size_t p : rr.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(a.cols());
    v[f] = 1;
    for (size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw InputError("solve: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  RrefResult rr = rref(std::move(aug));
  Vec x(a.cols());
  for (size_t k = 0; k < rr.pivots.size(); ++k) {
    if (rr.pivots[k] == a.cols()) return std::nullopt;
    x[rr.pivots[k]] = rr.r(k, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw InputError("inverse of non-square matrix");
  size_t n = a.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix::identity(n));
  RrefResult rr = rref(std::move(aug));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  return rr.r.block(0, n, n, n);
}

FieldElem det(const Matrix& m) {
  if (!m.square()) throw InputError("determinant of non-square matrix");
  Matrix a = m;
  size_t n = a.rows();
  FieldElem d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return FieldElem(0);
    if (p != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    FieldElem inv = a(col, col).inverse();
    for (size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      FieldElem f = a(i, col) * inv;
      for (size_t j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    size_t p = piv_[k];
    if (v[p].is_zero()) continue;
    FieldElem f = v[p];
    const Vec& r = rows_[k];
    for (size_t j = p; j < m_; ++j)
      if (!r[j].is_zero()) v[j] -= f * r[j];
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  if (v.size() != m_) throw InputError("SpanBuilder: vector length mismatch");
  Vec r = reduce(v);
  size_t p = 0;
  while (p < m_ && r[p].is_zero()) ++p;
  if (p == m_) return false;
  FieldElem inv = r[p].inverse();
  for (size_t j = p; j < m_; ++j)
    if (!r[j].is_zero()) r[j] *= inv;
  // keep rows fully reduced against the new pivot so reduce() stays one pass
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    FieldElem f = row[p];
    for (size_t j = p; j < m_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const FieldElem& x) { return x.is_zero(); });
}

}  // namespace braidrep
