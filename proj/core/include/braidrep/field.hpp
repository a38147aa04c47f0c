#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

// Malformed input, violated precondition, or unsupported request.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical identity that should hold exactly did not.
struct ResidualError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// Element of Q or of Q(sqrt d). A value with zero irrational part behaves as a
// rational; combining two elements with different nonzero radicands throws.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : x_(v) {}
  FieldElem(long v) : x_(v) {}
  FieldElem(const Rational& q) : x_(q) { x_.canonicalize(); }
  FieldElem(long num, long den) : x_(num, den) { x_.canonicalize(); }

  static FieldElem quad(const Rational& x, const Rational& y, long d);
  static FieldElem sqrt_of(long d) { return quad(0, 1, d); }
  static FieldElem parse(std::string_view s);

  std::string str() const;

  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
  bool is_one() const { return x_ == 1 && sgn(y_) == 0; }
  bool is_rational() const { return sgn(y_) == 0; }
  const Rational& re() const { return x_; }
  const Rational& im() const { return y_; }
  long radicand() const { return d_; }
  Rational to_rational() const;

  FieldElem operator-() const {
    FieldElem r;
    r.x_ = -x_;
    r.y_ = -y_;
    r.d_ = d_;
    return r;
  }
  FieldElem& operator+=(const FieldElem& o) {
    d_ = join(*this, o);
    x_ += o.x_;
    if (sgn(o.y_) != 0) y_ += o.y_;
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) {
    d_ = join(*this, o);
    x_ -= o.x_;
    if (sgn(o.y_) != 0) y_ -= o.y_;
    return *this;
  }
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  FieldElem inverse() const;

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.x_ != b.x_ || a.y_ != b.y_) return false;
    return sgn(a.y_) == 0 || a.d_ == b.d_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // a += b * c without temporaries on the rational fast path
  static void fma(FieldElem& a, const FieldElem& b, const FieldElem& c);

 private:
  static long join(const FieldElem& a, const FieldElem& b);

  Rational x_;
  Rational y_;
  long d_ = 0;
};

// Element of Q(sqrt d_1, ..., sqrt d_k) stored on the monomial basis
// sqrt(prod_{i in S} d_i), S a subset encoded as a bitmask. Only ring operations
// are provided; it is used to test declared spectra.
class MultiQuad {
 public:
  explicit MultiQuad(std::vector<long> radicands);
  MultiQuad(std::vector<long> radicands, std::vector<Rational> coords);

  static MultiQuad embed(const std::vector<long>& radicands, const FieldElem& x);

  const std::vector<long>& radicands() const { return rad_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;

  MultiQuad operator+(const MultiQuad& o) const;
  MultiQuad operator-(const MultiQuad& o) const;
  MultiQuad operator*(const MultiQuad& o) const;

 private:
  std::vector<long> rad_;
  std::vector<Rational> c_;
};

Rational parse_rational(std::string_view s);
std::string rational_str(const Rational& q);

}  // namespace braidrep
