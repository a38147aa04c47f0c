#pragma once

#include <string>
#include <vector>

#include "braidrep/matrix.hpp"

namespace braidrep {

// Univariate polynomial, coefficients stored from the constant term up.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs);
  static Poly monomial(const FieldElem& c, size_t k);
  // prod (X - r) over the given roots
  static Poly from_roots(const Vec& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Vec& coeffs() const { return c_; }
  FieldElem coeff(size_t k) const { return k < c_.size() ? c_[k] : FieldElem(0); }
  FieldElem lead() const { return c_.empty() ? FieldElem(0) : c_.back(); }

  Poly derivative() const;
  Poly monic() const;
  FieldElem eval(const FieldElem& x) const;
  Matrix eval(const Matrix& x) const;
  std::string str(const std::string& var = "X") const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // a = q b + r with deg r < deg b
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

 private:
  void trim();
  Vec c_;
};

Poly gcd(Poly a, Poly b);
bool is_squarefree(const Poly& p);

// det(X - m), via Faddeev-LeVerrier
Poly charpoly(const Matrix& m);
// monic generator of {p : p(m) = 0}, from the first linear dependency among powers of m
Poly minimal_polynomial(const Matrix& m);
// Distinct rational roots, increasing. Candidates come from a floating-point root
// isolation of the squarefree part and each is verified exactly; throws InputError
// on irrational coefficients.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace braidrep
