#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/matrix.hpp"
#include "braidrep/polynomial.hpp"

namespace braidrep {

// Truncated power series in h: coefficients of h^0 .. h^D.
class HSeries {
 public:
  HSeries() = default;
  explicit HSeries(int D) : c_(static_cast<size_t>(D) + 1) { check_degree(D); }
  HSeries(Vec coeffs);
  static HSeries constant(const FieldElem& c, int D);
  // exp(c h) truncated at h^D
  static HSeries exp_linear(const FieldElem& c, int D);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const FieldElem& operator[](size_t k) const { return c_[k]; }
  FieldElem& operator[](size_t k) { return c_[k]; }
  const Vec& coeffs() const { return c_; }

  bool is_zero() const;
  // smallest k with nonzero coefficient, or D+1
  int valuation() const;
  HSeries eps() const;
  HSeries inverse() const;
  HSeries exp() const;
  HSeries log() const;
  std::string str() const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const FieldElem& s);
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const FieldElem& s) { return a *= s; }
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend bool operator==(const HSeries& a, const HSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  static void check_degree(int D);

 private:
  Vec c_;
};

// Square matrix over the truncated ring k[h]/h^{D+1}, stored as M_0 .. M_D.
class HMatrix {
 public:
  HMatrix() = default;
  HMatrix(size_t n, int D);
  explicit HMatrix(std::vector<Matrix> coeffs);
  static HMatrix identity(size_t n, int D);
  static HMatrix constant(const Matrix& m, int D);
  // exp(lambda h^g x)
  static HMatrix exp_h(const Matrix& x, const FieldElem& lambda, int g, int D);

  size_t n() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Matrix& coeff(size_t k) const { return c_[k]; }
  Matrix& coeff(size_t k) { return c_[k]; }
  const std::vector<Matrix>& coeffs() const { return c_; }
  HSeries entry(size_t i, size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  int valuation() const;
  HMatrix inverse() const;
  HMatrix eps() const;
  HMatrix transpose() const;
  HSeries trace() const;
  HSeries det() const;
  // apply h -> a h coefficientwise
  HMatrix scale_h(const FieldElem& a) const;
  HMatrix truncated(int D) const;

  HMatrix& operator+=(const HMatrix& o);
  HMatrix& operator-=(const HMatrix& o);
  HMatrix& operator*=(const FieldElem& s);
  HMatrix operator-() const;
  friend HMatrix operator+(HMatrix a, const HMatrix& b) { return a += b; }
  friend HMatrix operator-(HMatrix a, const HMatrix& b) { return a -= b; }
  friend HMatrix operator*(HMatrix a, const FieldElem& s) { return a *= s; }
  friend HMatrix operator*(const HMatrix& a, const HMatrix& b);
  friend HMatrix operator*(const HMatrix& a, const HSeries& s);
  friend bool operator==(const HMatrix& a, const HMatrix& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HMatrix& a, const HMatrix& b) { return !(a == b); }

 private:
  size_t n_ = 0;
  std::vector<Matrix> c_;
};

HMatrix kron(const HMatrix& a, const HMatrix& b);
HMatrix block_diag(const HMatrix& a, const HMatrix& b);
HMatrix conjugate(const HMatrix& a, const Matrix& p);  // p a p^{-1}
// Q(a) for a polynomial with field coefficients
HMatrix eval(const Poly& q, const HMatrix& a);

using Word = std::vector<uint8_t>;

// Noncommutative polynomial in the letters of `alphabet`, truncated beyond
// degree D. Degree-d coefficients live in a dense block of size k^d indexed
// by the base-k value of the word, first letter most significant.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::vector<std::string> alphabet, int D);
  static TruncSeries one(std::vector<std::string> alphabet, int D);
  static TruncSeries letter(std::vector<std::string> alphabet, int D, size_t i);
  static TruncSeries linear(std::vector<std::string> alphabet, int D, const Vec& coeffs);

  const std::vector<std::string>& alphabet() const { return alpha_; }
  size_t k() const { return alpha_.size(); }
  int degree() const { return D_; }
  const Vec& block(int d) const { return blocks_[d]; }
  Vec& block(int d) { return blocks_[d]; }

  FieldElem coeff(const Word& w) const;
  void set(const Word& w, const FieldElem& c);
  FieldElem coeff(const std::string& dotted) const { return coeff(parse_word(dotted)); }
  const FieldElem& constant() const { return blocks_[0][0]; }

  Word parse_word(const std::string& dotted) const;
  std::string word_str(const Word& w) const;
  size_t index(const Word& w) const;
  Word word(size_t idx, int d) const;

  bool is_zero() const;
  // lowest degree with a nonzero coefficient, D+1 if none
  int valuation() const;
  TruncSeries homogeneous(int d) const;
  TruncSeries truncated(int D) const;
  TruncSeries with_alphabet(std::vector<std::string> alphabet) const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const FieldElem& s);
  TruncSeries operator-() const;
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const FieldElem& s) { return a *= s; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  // nonzero coefficients in degree/index order
  std::vector<std::pair<Word, FieldElem>> terms() const;

 private:
  void check_compatible(const TruncSeries& o) const;
  std::vector<std::string> alpha_;
  int D_ = 0;
  std::vector<Vec> blocks_;
};

TruncSeries commutator(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_exp(const TruncSeries& s);
TruncSeries series_log(const TruncSeries& s);

struct ShuffleDefect {
  Word u, v;
  FieldElem value;  // <S, u sh v> - <S,u><S,v>
};
std::vector<ShuffleDefect> shuffle_defects(const TruncSeries& s);
bool is_grouplike(const TruncSeries& s);

// S(images[0], images[1], ...) in another truncated free algebra; images must
// have zero constant term and share the target alphabet and degree.
TruncSeries substitute(const TruncSeries& s, const std::vector<TruncSeries>& images);

// sum_w <S,w> h^{sum of hgrade} images(w), truncated at h^D
HMatrix substitute(const TruncSeries& s, const std::vector<Matrix>& images,
                   const std::vector<int>& hgrade, int D);
HMatrix substitute(const TruncSeries& s, const std::vector<HMatrix>& images,
                   const std::vector<int>& hgrade);

}  // namespace braidrep
