#include "braidrep/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace braidrep {

Poly::Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const FieldElem& c, size_t k) {
  Vec v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const Vec& roots) {
  Poly p(Vec{FieldElem(1)});
  for (const auto& r : roots) p = p * Poly(Vec{-r, FieldElem(1)});
  return p;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  Vec d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * FieldElem(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  FieldElem inv = c_.back().inverse();
  Vec v = c_;
  for (auto& x : v) x *= inv;
  return Poly(std::move(v));
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem r;
  for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
  return r;
}

Matrix Poly::eval(const Matrix& x) const {
  if (!x.square()) throw InputError("polynomial evaluated at a non-square matrix");
  Matrix r(x.rows(), x.cols());
  for (size_t k = c_.size(); k-- > 0;) r = r * x + Matrix::scalar(x.rows(), c_[k]);
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = c_[k].str();
    if (k == 0)
      s += c;
    else
      s += (c == "1" ? "" : "(" + c + ")*") + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  Vec v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) FieldElem::fma(v[i + j], a.c_[i], b.c_[j]);
  return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Vec rem = a.c_;
  Vec quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  FieldElem inv = b.lead().inverse();
  for (size_t k = quo.size(); k-- > 0;) {
    FieldElem f = rem[k + b.c_.size() - 1] * inv;
    quo[k] = f;
    if (f.is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Poly charpoly(const Matrix& m) {
  if (!m.square()) throw InputError("charpoly of non-square matrix");
  size_t n = m.rows();
  // c[n] = 1, M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
  Vec c(n + 1);
  c[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    Matrix am = m * mk;
    c[n - k] = -am.trace() / FieldElem(static_cast<long>(k));
    mk = am + Matrix::scalar(n, c[n - k]);
  }
  return Poly(std::move(c));
}

Poly minimal_polynomial(const Matrix& m) {
  if (!m.square()) throw InputError("minimal polynomial of non-square matrix");
  size_t n = m.rows();
  std::vector<Vec> powers{Matrix::identity(n).data()};
  Matrix p = Matrix::identity(n);
  for (size_t d = 1; d <= n; ++d) {
    p = p * m;
    Vec target = p.data();
    auto c = solve(Matrix::from_columns(powers), target);
    if (c) {
      Vec coeffs(d + 1);
      for (size_t k = 0; k < d; ++k) coeffs[k] = -(*c)[k];
      coeffs[d] = 1;
      return Poly(std::move(coeffs));
    }
    powers.push_back(std::move(target));
  }
  throw ResidualError("no dependency among matrix powers");
}

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_rational()) throw InputError("polynomial has irrational coefficients");
  Poly q = p;
  Poly g = gcd(p, p.derivative());
  if (g.degree() > 0) {
    Poly r;
    Poly::divmod(p, g, q, r);
  }
  q = q.monic();
  int deg = q.degree();
  // primitive integer multiple: a_deg * x is an integer at every rational root
  mpz_class l = 1;
  for (int k = 0; k <= deg; ++k) l = lcm(l, q.coeff(k).to_rational().get_den());
  mpz_class lead = l;
  using C = std::complex<long double>;
  std::vector<long double> a(static_cast<size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) a[k] = static_cast<long double>(q.coeff(k).to_rational().get_d());
  auto eval = [&](C x) {
    C s = 0;
    for (int k = deg; k >= 0; --k) s = s * x + a[k];
    return s;
  };
  long double bound = 1;
  for (int k = 0; k < deg; ++k) bound = std::max(bound, 1 + std::fabs(a[k]));
  std::vector<C> z(deg);
  for (int k = 0; k < deg; ++k) z[k] = std::polar(bound * 0.9L, 2 * 3.14159265358979L * (k + 0.25L) / deg);
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int k = 0; k < deg; ++k) {
      C den = 1;
      for (int j = 0; j < deg; ++j)
        if (j != k) den *= z[k] - z[j];
      C step = eval(z[k]) / den;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15L) break;
  }
  long double ld = static_cast<long double>(lead.get_d());
  for (const auto& x : z) {
    long double guess = std::round(x.real() * ld);
    for (long double off : {0.0L, -1.0L, 1.0L}) {
      Rational cand(mpz_class(std::to_string(static_cast<long long>(guess + off))), lead);
      cand.canonicalize();
      if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
      if (q.eval(FieldElem(cand)).is_zero()) {
        out.push_back(cand);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braidrep
