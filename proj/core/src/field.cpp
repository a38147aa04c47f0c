#include "braidrep/field.hpp"

#include <cctype>

namespace braidrep {

namespace {

bool squarefree_nontrivial(long d) {
  if (d == 0 || d == 1) return false;
  long a = d < 0 ? -d : d;
  for (long p = 2; p * p <= a; ++p)
    if (a % (p * p) == 0) return false;
  return true;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Rational parse_rational(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw InputError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  size_t slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  Rational q;
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw InputError("bad rational '" + t + "'");
    q = Rational(t);
  } else {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
      throw InputError("bad rational '" + t + "'");
    mpz_class n(num), dd(den);
    if (dd == 0) throw InputError("zero denominator in '" + t + "'");
    q = Rational(n, dd);
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

FieldElem FieldElem::quad(const Rational& x, const Rational& y, long d) {
  if (!squarefree_nontrivial(d)) throw InputError("radicand must be square-free and not 0 or 1");
  FieldElem r;
  r.x_ = x;
  r.y_ = y;
  r.d_ = d;
  return r;
}

FieldElem FieldElem::parse(std::string_view s) {
  std::string t = trim(s);
  size_t sq = t.find("sqrt(");
  if (sq == std::string::npos) return FieldElem(parse_rational(t));
  size_t close = t.find(')', sq);
  if (close == std::string::npos || close + 1 != t.size())
    throw InputError("bad quadratic scalar '" + t + "'");
  long d = std::stol(t.substr(sq + 5, close - sq - 5));
  // the irrational term starts at the last sign before "sqrt(" that is not
  // the leading sign or part of an exponent-free coefficient
  std::string head = t.substr(0, sq);
  Rational x = 0, y;
  size_t split = std::string::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string coef = split == std::string::npos ? head : head.substr(split);
  if (split != std::string::npos) x = parse_rational(head.substr(0, split));
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  if (coef.empty() || coef == "+")
    y = 1;
  else if (coef == "-")
    y = -1;
  else
    y = parse_rational(coef);
  return quad(x, y, d);
}

std::string FieldElem::str() const {
  if (sgn(y_) == 0) return x_.get_str();
  std::string ys = Rational(abs(y_)).get_str() + "*sqrt(" + std::to_string(d_) + ")";
  if (sgn(x_) == 0) return (sgn(y_) < 0 ? "-" : "") + ys;
  return x_.get_str() + (sgn(y_) < 0 ? "-" : "+") + ys;
}

Rational FieldElem::to_rational() const {
  if (sgn(y_) != 0) throw InputError("expected a rational scalar, got " + str());
  return x_;
}

long FieldElem::join(const FieldElem& a, const FieldElem& b) {
  if (a.d_ == b.d_) return a.d_;
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0) return a.d_;
  if (sgn(a.y_) == 0) return b.d_;
  if (sgn(b.y_) == 0) return a.d_;
  throw InputError("mixing scalars from Q(sqrt " + std::to_string(a.d_) + ") and Q(sqrt " +
                   std::to_string(b.d_) + ")");
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  long d = join(*this, o);
  if (sgn(y_) == 0 && sgn(o.y_) == 0) {
    x_ *= o.x_;
  } else {
    Rational nx = x_ * o.x_ + Rational(d) * y_ * o.y_;
    Rational ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
  }
  d_ = d;
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (sgn(y_) == 0) {
    FieldElem r;
    r.x_ = 1 / x_;
    r.d_ = d_;
    return r;
  }
  Rational norm = x_ * x_ - Rational(d_) * y_ * y_;
  FieldElem r;
  r.x_ = x_ / norm;
  r.y_ = -y_ / norm;
  r.d_ = d_;
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (sgn(o.y_) == 0) {
    if (sgn(o.x_) == 0) throw InputError("division by zero");
    d_ = join(*this, o);
    x_ /= o.x_;
    if (sgn(y_) != 0) y_ /= o.x_;
    return *this;
  }
  return *this *= o.inverse();
}

void FieldElem::fma(FieldElem& a, const FieldElem& b, const FieldElem& c) {
  if (sgn(b.y_) == 0 && sgn(c.y_) == 0) {
    if (sgn(b.x_) == 0 || sgn(c.x_) == 0) return;
    if (a.d_ == 0) a.d_ = b.d_ ? b.d_ : c.d_;
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, b.x_.get_mpq_t(), c.x_.get_mpq_t());
    mpq_add(a.x_.get_mpq_t(), a.x_.get_mpq_t(), t);
    mpq_clear(t);
    return;
  }
  a += b * c;
}

MultiQuad::MultiQuad(std::vector<long> radicands)
    : rad_(std::move(radicands)), c_(size_t(1) << rad_.size()) {}

MultiQuad::MultiQuad(std::vector<long> radicands, std::vector<Rational> coords)
    : rad_(std::move(radicands)), c_(std::move(coords)) {
  if (c_.size() != (size_t(1) << rad_.size()))
    throw InputError("coordinate vector length must be 2^(number of radicands)");
}

MultiQuad MultiQuad::embed(const std::vector<long>& radicands, const FieldElem& x) {
  MultiQuad r(radicands);
  r.c_[0] = x.re();
  if (!x.is_rational()) {
    // sqrt d must be one of the basis monomials
    for (size_t m = 1; m < r.c_.size(); ++m) {
      long p = 1;
      for (size_t i = 0; i < radicands.size(); ++i)
        if (m >> i & 1) p *= radicands[i];
      if (p == x.radicand()) {
        r.c_[m] = x.im();
        return r;
      }
    }
    throw InputError("sqrt(" + std::to_string(x.radicand()) + ") is not a declared basis monomial");
  }
  return r;
}

bool MultiQuad::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

MultiQuad MultiQuad::operator+(const MultiQuad& o) const {
  if (rad_ != o.rad_) throw InputError("MultiQuad radicand mismatch");
  MultiQuad r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

MultiQuad MultiQuad::operator-(const MultiQuad& o) const {
  if (rad_ != o.rad_) throw InputError("MultiQuad radicand mismatch");
  MultiQuad r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

MultiQuad MultiQuad::operator*(const MultiQuad& o) const {
  if (rad_ != o.rad_) throw InputError("MultiQuad radicand mismatch");
  MultiQuad r(rad_);
  for (size_t a = 0; a < c_.size(); ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (size_t b = 0; b < c_.size(); ++b) {
      if (sgn(o.c_[b]) == 0) continue;
      Rational f = c_[a] * o.c_[b];
      size_t common = a & b;
      for (size_t i = 0; i < rad_.size(); ++i)
        if (common >> i & 1) f *= rad_[i];
      r.c_[a ^ b] += f;
    }
  }
  return r;
}

}  // namespace braidrep
