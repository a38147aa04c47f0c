#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidrep/field.hpp"

namespace braidrep {

using Vec = std::vector<FieldElem>;

// Dense row-major matrix over FieldElem.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Matrix(size_t rows, size_t cols, Vec data);
  Matrix(std::initializer_list<std::initializer_list<FieldElem>> rows);

  static Matrix identity(size_t n);
  static Matrix scalar(size_t n, const FieldElem& s);
  static Matrix diag(const Vec& d);
  static Matrix from_columns(const std::vector<Vec>& cols);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  FieldElem& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const FieldElem& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  const Vec& data() const { return a_; }

  bool is_zero() const;
  bool is_identity() const;
  FieldElem trace() const;
  Matrix transpose() const;
  Vec column(size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const FieldElem& s);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const FieldElem& s) { return a *= s; }
  friend Matrix operator*(const FieldElem& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Matrix& b);

 private:
  size_t r_ = 0, c_ = 0;
  Vec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned k);

struct RrefResult {
  Matrix r;
  std::vector<size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix a);
size_t rank(const Matrix& a);
std::vector<Vec> nullspace(const Matrix& a);
// Particular solution of a x = b with all free variables zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
FieldElem det(const Matrix& a);

// Incremental echelon basis of a subspace of k^m.
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t m) : m_(m) {}
  // Adds v; returns false when v already lies in the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return m_; }

 private:
  Vec reduce(Vec v) const;
  size_t m_;
  std::vector<Vec> rows_;
  std::vector<size_t> piv_;
};

}  // namespace braidrep
