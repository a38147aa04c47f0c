#include "braidrep/series.hpp"

#include <algorithm>
#include <functional>

namespace braidrep {

namespace {

FieldElem factorial_inv(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return FieldElem(Rational(1) / f);
}

constexpr int kMaxDegree = 64;

}  // namespace

// ---- HSeries

void HSeries::check_degree(int D) {
  if (D < 0 || D > kMaxDegree) throw InputError("truncation degree out of range");
}

HSeries::HSeries(Vec coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InputError("HSeries needs at least one coefficient");
}

HSeries HSeries::constant(const FieldElem& c, int D) {
  HSeries s(D);
  s.c_[0] = c;
  return s;
}

HSeries HSeries::exp_linear(const FieldElem& c, int D) {
  HSeries s(D);
  FieldElem p(1);
  for (int k = 0; k <= D; ++k) {
    s.c_[k] = p * factorial_inv(k);
    p *= c;
  }
  return s;
}

bool HSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

int HSeries::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return degree() + 1;
}

HSeries HSeries::eps() const {
  HSeries s = *this;
  for (size_t k = 1; k < c_.size(); k += 2) s.c_[k] = -s.c_[k];
  return s;
}

HSeries HSeries::inverse() const {
  if (c_[0].is_zero()) throw InputError("series with zero constant term is not invertible");
  HSeries r(degree());
  FieldElem inv = c_[0].inverse();
  r.c_[0] = inv;
  for (size_t k = 1; k < c_.size(); ++k) {
    FieldElem acc;
    for (size_t j = 1; j <= k; ++j) FieldElem::fma(acc, c_[j], r.c_[k - j]);
    r.c_[k] = -acc * inv;
  }
  return r;
}

HSeries HSeries::exp() const {
  if (!c_[0].is_zero()) throw InputError("exp needs zero constant term");
  HSeries r = constant(1, degree()), p = r;
  for (int k = 1; k <= degree(); ++k) {
    p = p * *this;
    r += p * factorial_inv(k);
  }
  return r;
}

HSeries HSeries::log() const {
  if (!c_[0].is_one()) throw InputError("log needs constant term 1");
  HSeries x = *this;
  x.c_[0] = 0;
  HSeries r(degree()), p = constant(1, degree());
  for (int k = 1; k <= degree(); ++k) {
    p = p * x;
    r += p * FieldElem((k % 2 ? 1L : -1L), static_cast<long>(k));
  }
  return r;
}

std::string HSeries::str() const {
  std::string s;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].str() + ")";
    if (k) s += "h^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  if (o.c_.size() != c_.size()) throw InputError("mixing truncation degrees");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  if (o.c_.size() != c_.size()) throw InputError("mixing truncation degrees");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

HSeries& HSeries::operator*=(const FieldElem& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  if (a.c_.size() != b.c_.size()) throw InputError("mixing truncation degrees");
  HSeries r(a.degree());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.c_.size(); ++j) FieldElem::fma(r.c_[i + j], a.c_[i], b.c_[j]);
  }
  return r;
}

// ---- HMatrix

HMatrix::HMatrix(size_t n, int D) : n_(n) {
  HSeries::check_degree(D);
  c_.assign(static_cast<size_t>(D) + 1, Matrix(n, n));
}

HMatrix::HMatrix(std::vector<Matrix> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InputError("HMatrix needs at least one coefficient");
  n_ = c_[0].rows();
  for (const auto& m : c_)
    if (m.rows() != n_ || m.cols() != n_) throw InputError("HMatrix coefficient shape mismatch");
}

HMatrix HMatrix::identity(size_t n, int D) { return constant(Matrix::identity(n), D); }

HMatrix HMatrix::constant(const Matrix& m, int D) {
  if (!m.square()) throw InputError("HMatrix must be square");
  HMatrix r(m.rows(), D);
  r.c_[0] = m;
  return r;
}

HMatrix HMatrix::exp_h(const Matrix& x, const FieldElem& lambda, int g, int D) {
  if (g < 1) throw InputError("exp_h needs a positive h-exponent");
  HMatrix r = identity(x.rows(), D);
  Matrix p = Matrix::identity(x.rows());
  for (int k = 1; k * g <= D; ++k) {
    p = p * x * lambda;
    r.c_[k * g] += p * factorial_inv(k);
  }
  return r;
}

HSeries HMatrix::entry(size_t i, size_t j) const {
  Vec v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k](i, j);
  return HSeries(std::move(v));
}

bool HMatrix::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool HMatrix::is_identity() const {
  if (!c_[0].is_identity()) return false;
  for (size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

int HMatrix::valuation() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return degree() + 1;
}

HMatrix HMatrix::inverse() const {
  auto inv0 = braidrep::inverse(c_[0]);
  if (!inv0) throw InputError("HMatrix with singular constant term is not invertible");
  HMatrix r(n_, degree());
  r.c_[0] = *inv0;
  for (size_t k = 1; k < c_.size(); ++k) {
    Matrix acc(n_, n_);
    for (size_t j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -(*inv0 * acc);
  }
  return r;
}

HMatrix HMatrix::eps() const {
  HMatrix r = *this;
  for (size_t k = 1; k < c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

HMatrix HMatrix::transpose() const {
  HMatrix r = *this;
  for (auto& m : r.c_) m = m.transpose();
  return r;
}

HSeries HMatrix::trace() const {
  Vec v(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].trace();
  return HSeries(std::move(v));
}

HSeries HMatrix::det() const {
  // Faddeev-LeVerrier over the truncated ring; only integer divisions occur
  int D = degree();
  HMatrix mk = identity(n_, D);
  HSeries c = HSeries::constant(1, D);
  for (size_t k = 1; k <= n_; ++k) {
    HMatrix am = *this * mk;
    c = am.trace() * FieldElem(-1L, static_cast<long>(k));
    mk = am;
    for (int d = 0; d <= D; ++d)
      for (size_t i = 0; i < n_; ++i) mk.c_[d](i, i) += c[d];
  }
  // det(A) = (-1)^n c_0
  return (n_ % 2) ? c * FieldElem(-1) : c;
}

HMatrix HMatrix::scale_h(const FieldElem& a) const {
  HMatrix r = *this;
  FieldElem p(1);
  for (size_t k = 1; k < c_.size(); ++k) {
    p *= a;
    r.c_[k] *= p;
  }
  return r;
}

HMatrix HMatrix::truncated(int D) const {
  HSeries::check_degree(D);
  std::vector<Matrix> c(static_cast<size_t>(D) + 1, Matrix(n_, n_));
  for (size_t k = 0; k < c.size() && k < c_.size(); ++k) c[k] = c_[k];
  return HMatrix(std::move(c));
}

HMatrix& HMatrix::operator+=(const HMatrix& o) {
  if (o.c_.size() != c_.size()) throw InputError("mixing truncation degrees");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

HMatrix& HMatrix::operator-=(const HMatrix& o) {
  if (o.c_.size() != c_.size()) throw InputError("mixing truncation degrees");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

HMatrix& HMatrix::operator*=(const FieldElem& s) {
  for (auto& m : c_) m *= s;
  return *this;
}

HMatrix HMatrix::operator-() const {
  HMatrix r = *this;
  for (auto& m : r.c_) m = -m;
  return r;
}

HMatrix operator*(const HMatrix& a, const HMatrix& b) {
  if (a.c_.size() != b.c_.size()) throw InputError("mixing truncation degrees");
  if (a.n_ != b.n_) throw InputError("HMatrix size mismatch");
  HMatrix r(a.n_, a.degree());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < a.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

HMatrix operator*(const HMatrix& a, const HSeries& s) {
  if (static_cast<int>(a.c_.size()) != s.degree() + 1) throw InputError("mixing truncation degrees");
  HMatrix r(a.n_, a.degree());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; i + j < a.c_.size(); ++j)
      if (!s[j].is_zero()) r.c_[i + j] += a.c_[i] * s[j];
  return r;
}

HMatrix kron(const HMatrix& a, const HMatrix& b) {
  if (a.degree() != b.degree()) throw InputError("mixing truncation degrees");
  int D = a.degree();
  HMatrix r(a.n() * b.n(), D);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) {
      if (a.coeff(i).is_zero() || b.coeff(j).is_zero()) continue;
      r.coeff(i + j) += kron(a.coeff(i), b.coeff(j));
    }
  return r;
}

HMatrix block_diag(const HMatrix& a, const HMatrix& b) {
  if (a.degree() != b.degree()) throw InputError("mixing truncation degrees");
  std::vector<Matrix> c;
  for (int k = 0; k <= a.degree(); ++k) c.push_back(block_diag(a.coeff(k), b.coeff(k)));
  return HMatrix(std::move(c));
}

HMatrix conjugate(const HMatrix& a, const Matrix& p) {
  auto pi = inverse(p);
  if (!pi) throw InputError("conjugating by a singular matrix");
  std::vector<Matrix> c;
  for (const auto& m : a.coeffs()) c.push_back(p * m * *pi);
  return HMatrix(std::move(c));
}

HMatrix eval(const Poly& q, const HMatrix& a) {
  HMatrix r(a.n(), a.degree());
  for (size_t k = q.coeffs().size(); k-- > 0;) {
    r = r * a;
    r.coeff(0) += Matrix::scalar(a.n(), q.coeffs()[k]);
  }
  return r;
}

// ---- TruncSeries

TruncSeries::TruncSeries(std::vector<std::string> alphabet, int D) : alpha_(std::move(alphabet)), D_(D) {
  HSeries::check_degree(D);
  if (alpha_.empty() || alpha_.size() > 255) throw InputError("alphabet size must be in 1..255");
  size_t sz = 1;
  for (int d = 0; d <= D; ++d) {
    blocks_.emplace_back(sz);
    sz *= alpha_.size();
  }
}

TruncSeries TruncSeries::one(std::vector<std::string> alphabet, int D) {
  TruncSeries s(std::move(alphabet), D);
  s.blocks_[0][0] = 1;
  return s;
}

TruncSeries TruncSeries::letter(std::vector<std::string> alphabet, int D, size_t i) {
  TruncSeries s(std::move(alphabet), D);
  if (i >= s.k()) throw InputError("letter index out of range");
  if (D >= 1) s.blocks_[1][i] = 1;
  return s;
}

TruncSeries TruncSeries::linear(std::vector<std::string> alphabet, int D, const Vec& coeffs) {
  TruncSeries s(std::move(alphabet), D);
  if (coeffs.size() != s.k()) throw InputError("linear form length mismatch");
  if (D >= 1) s.blocks_[1] = coeffs;
  return s;
}

size_t TruncSeries::index(const Word& w) const {
  size_t idx = 0;
  for (uint8_t a : w) {
    if (a >= k()) throw InputError("letter out of range");
    idx = idx * k() + a;
  }
  return idx;
}

Word TruncSeries::word(size_t idx, int d) const {
  Word w(d);
  for (int i = d - 1; i >= 0; --i) {
    w[i] = static_cast<uint8_t>(idx % k());
    idx /= k();
  }
  return w;
}

FieldElem TruncSeries::coeff(const Word& w) const {
  if (static_cast<int>(w.size()) > D_) return FieldElem(0);
  return blocks_[w.size()][index(w)];
}

void TruncSeries::set(const Word& w, const FieldElem& c) {
  if (static_cast<int>(w.size()) > D_) throw InputError("word longer than truncation degree");
  blocks_[w.size()][index(w)] = c;
}

Word TruncSeries::parse_word(const std::string& dotted) const {
  Word w;
  if (dotted.empty()) return w;
  size_t start = 0;
  while (true) {
    size_t dot = dotted.find('.', start);
    std::string name = dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto it = std::find(alpha_.begin(), alpha_.end(), name);
    if (it == alpha_.end()) throw InputError("unknown generator '" + name + "'");
    w.push_back(static_cast<uint8_t>(it - alpha_.begin()));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string TruncSeries::word_str(const Word& w) const {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += alpha_[w[i]];
  }
  return s;
}

bool TruncSeries::is_zero() const { return valuation() > D_; }

int TruncSeries::valuation() const {
  for (int d = 0; d <= D_; ++d)
    for (const auto& x : blocks_[d])
      if (!x.is_zero()) return d;
  return D_ + 1;
}

TruncSeries TruncSeries::homogeneous(int d) const {
  TruncSeries s(alpha_, D_);
  if (d >= 0 && d <= D_) s.blocks_[d] = blocks_[d];
  return s;
}

TruncSeries TruncSeries::truncated(int D) const {
  TruncSeries s(alpha_, D);
  for (int d = 0; d <= std::min(D, D_); ++d) s.blocks_[d] = blocks_[d];
  return s;
}

TruncSeries TruncSeries::with_alphabet(std::vector<std::string> alphabet) const {
  if (alphabet.size() != alpha_.size()) throw InputError("alphabet size mismatch");
  TruncSeries s = *this;
  s.alpha_ = std::move(alphabet);
  return s;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (D_ != o.D_) throw InputError("mixing truncation degrees");
  if (alpha_ != o.alpha_) throw InputError("mixing alphabets");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  for (int d = 0; d <= D_; ++d)
    for (size_t i = 0; i < blocks_[d].size(); ++i)
      if (!o.blocks_[d][i].is_zero()) blocks_[d][i] += o.blocks_[d][i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  for (int d = 0; d <= D_; ++d)
    for (size_t i = 0; i < blocks_[d].size(); ++i)
      if (!o.blocks_[d][i].is_zero()) blocks_[d][i] -= o.blocks_[d][i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const FieldElem& s) {
  for (auto& b : blocks_)
    for (auto& x : b)
      if (!x.is_zero()) x *= s;
  return *this;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& b : s.blocks_)
    for (auto& x : b) x = -x;
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  TruncSeries r(a.alpha_, a.D_);
  for (int i = 0; i <= a.D_; ++i) {
    const Vec& ba = a.blocks_[i];
    for (size_t x = 0; x < ba.size(); ++x) {
      if (ba[x].is_zero()) continue;
      for (int j = 0; i + j <= a.D_; ++j) {
        const Vec& bb = b.blocks_[j];
        Vec& out = r.blocks_[i + j];
        size_t base = x * bb.size();
        for (size_t y = 0; y < bb.size(); ++y)
          if (!bb[y].is_zero()) FieldElem::fma(out[base + y], ba[x], bb[y]);
      }
    }
  }
  return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.alpha_ == b.alpha_ && a.D_ == b.D_ && a.blocks_ == b.blocks_;
}

std::vector<std::pair<Word, FieldElem>> TruncSeries::terms() const {
  std::vector<std::pair<Word, FieldElem>> t;
  for (int d = 0; d <= D_; ++d)
    for (size_t i = 0; i < blocks_[d].size(); ++i)
      if (!blocks_[d][i].is_zero()) t.emplace_back(word(i, d), blocks_[d][i]);
  return t;
}

TruncSeries commutator(const TruncSeries& a, const TruncSeries& b) { return a * b - b * a; }

TruncSeries series_exp(const TruncSeries& s) {
  if (!s.constant().is_zero()) throw InputError("series_exp needs zero constant term");
  TruncSeries r = TruncSeries::one(s.alphabet(), s.degree()), p = r;
  for (int k = 1; k <= s.degree(); ++k) {
    p = p * s;
    if (p.is_zero()) break;
    r += p * factorial_inv(k);
  }
  return r;
}

TruncSeries series_log(const TruncSeries& s) {
  if (!s.constant().is_one()) throw InputError("series_log needs constant term 1");
  TruncSeries x = s;
  x.block(0)[0] = 0;
  TruncSeries r(s.alphabet(), s.degree()), p = TruncSeries::one(s.alphabet(), s.degree());
  for (int k = 1; k <= s.degree(); ++k) {
    p = p * x;
    if (p.is_zero()) break;
    r += p * FieldElem((k % 2 ? 1L : -1L), static_cast<long>(k));
  }
  return r;
}

namespace {

// all interleavings of u and v, with multiplicity
void shuffles(const Word& u, const Word& v, std::vector<Word>& out) {
  Word cur;
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == u.size() && j == v.size()) {
      out.push_back(cur);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<ShuffleDefect> shuffle_defects(const TruncSeries& s) {
  std::vector<ShuffleDefect> out;
  int D = s.degree();
  for (int a = 1; a < D; ++a)
    for (int b = 1; a + b <= D; ++b) {
      size_t na = s.block(a).size(), nb = s.block(b).size();
      for (size_t iu = 0; iu < na; ++iu)
        for (size_t iv = 0; iv < nb; ++iv) {
          // the pairing is symmetric in (u,v); visit each unordered pair once
          if (a > b || (a == b && iv < iu)) continue;
          Word u = s.word(iu, a), v = s.word(iv, b);
          std::vector<Word> sh;
          shuffles(u, v, sh);
          FieldElem lhs;
          for (const auto& w : sh) lhs += s.block(a + b)[s.index(w)];
          FieldElem def = lhs - s.block(a)[iu] * s.block(b)[iv];
          if (!def.is_zero()) out.push_back({u, v, def});
        }
    }
  return out;
}

bool is_grouplike(const TruncSeries& s) {
  if (!s.constant().is_one()) return false;
  return shuffle_defects(s).empty();
}

TruncSeries substitute(const TruncSeries& s, const std::vector<TruncSeries>& images) {
  if (images.size() != s.k()) throw InputError("substitute: one image per generator required");
  const auto& tgt = images[0];
  for (const auto& im : images) {
    if (im.alphabet() != tgt.alphabet() || im.degree() != tgt.degree())
      throw InputError("substitute: images must share alphabet and degree");
    if (!im.constant().is_zero()) throw InputError("substitute: images need zero constant term");
  }
  int D = tgt.degree();
  TruncSeries r(tgt.alphabet(), D);
  r.block(0)[0] = s.constant();
  std::vector<TruncSeries> prefix(1, TruncSeries::one(tgt.alphabet(), D));
  std::vector<int> val(1, 0);
  std::vector<size_t> idx(1, 0);
  std::vector<int> ival(images.size());
  for (size_t a = 0; a < images.size(); ++a) ival[a] = images[a].valuation();
  // depth-first over words of s, reusing prefix products
  std::function<void(int, size_t)> rec = [&](int d, size_t base) {
    if (d == s.degree()) return;
    for (size_t a = 0; a < s.k(); ++a) {
      if (val[d] + ival[a] > D) continue;
      size_t wi = base * s.k() + a;
      // skip the subtree when every longer coefficient below it is zero
      bool any = false;
      size_t lo = wi, width = 1;
      for (int e = d + 1; e <= s.degree() && !any; ++e) {
        for (size_t t = 0; t < width; ++t)
          if (!s.block(e)[lo + t].is_zero()) {
            any = true;
            break;
          }
        lo *= s.k();
        width *= s.k();
      }
      if (!any) continue;
      TruncSeries p = prefix[d] * images[a];
      const FieldElem& c = s.block(d + 1)[wi];
      if (!c.is_zero()) r += p * c;
      prefix.resize(d + 2);
      val.resize(d + 2);
      prefix[d + 1] = std::move(p);
      val[d + 1] = val[d] + ival[a];
      rec(d + 1, wi);
    }
  };
  rec(0, 0);
  return r;
}

HMatrix substitute(const TruncSeries& s, const std::vector<Matrix>& images, const std::vector<int>& hgrade,
                   int D) {
  if (images.size() != s.k() || hgrade.size() != s.k())
    throw InputError("substitute: one image and h-grade per generator required");
  size_t n = images[0].rows();
  std::vector<HMatrix> him;
  for (size_t a = 0; a < images.size(); ++a) {
    if (images[a].rows() != n || !images[a].square()) throw InputError("substitute: image dimension mismatch");
    him.push_back(HMatrix::constant(images[a], D));
  }
  return substitute(s, him, hgrade);
}

HMatrix substitute(const TruncSeries& s, const std::vector<HMatrix>& images, const std::vector<int>& hgrade) {
  if (images.size() != s.k() || hgrade.size() != s.k())
    throw InputError("substitute: one image and h-grade per generator required");
  size_t n = images[0].n();
  int D = images[0].degree();
  std::vector<int> ival(images.size());
  for (size_t a = 0; a < images.size(); ++a) {
    if (images[a].n() != n || images[a].degree() != D) throw InputError("substitute: image dimension mismatch");
    if (hgrade[a] < 0) throw InputError("substitute: negative h-grade");
    ival[a] = hgrade[a] + images[a].valuation();
  }
  // shift by h^g
  std::vector<HMatrix> shifted;
  for (size_t a = 0; a < images.size(); ++a) {
    HMatrix m(n, D);
    for (int k = 0; k + hgrade[a] <= D; ++k) m.coeff(k + hgrade[a]) = images[a].coeff(k);
    shifted.push_back(std::move(m));
  }
  HMatrix r = HMatrix::identity(n, D) * s.constant();
  std::vector<HMatrix> prefix(1, HMatrix::identity(n, D));
  std::vector<int> val(1, 0);
  std::function<void(int, size_t)> rec = [&](int d, size_t base) {
    if (d == s.degree()) return;
    for (size_t a = 0; a < s.k(); ++a) {
      if (ival[a] == 0) {
        // a zero-valuation letter would need every word length; only allowed if s never uses it
        bool used = false;
        for (int e = d + 1; e <= s.degree() && !used; ++e)
          for (const auto& [w, c] : s.homogeneous(e).terms())
            if (std::find(w.begin(), w.end(), a) != w.end()) used = true;
        if (used) throw InputError("substitute: generator with zero h-valuation occurs in the series");
        continue;
      }
      if (val[d] + ival[a] > D) continue;
      size_t wi = base * s.k() + a;
      bool any = false;
      size_t lo = wi, width = 1;
      for (int e = d + 1; e <= s.degree() && !any; ++e) {
        for (size_t t = 0; t < width; ++t)
          if (!s.block(e)[lo + t].is_zero()) {
            any = true;
            break;
          }
        lo *= s.k();
        width *= s.k();
      }
      if (!any) continue;
      HMatrix p = prefix[d] * shifted[a];
      const FieldElem& c = s.block(d + 1)[wi];
      if (!c.is_zero()) r += p * c;
      prefix.resize(d + 2);
      val.resize(d + 2);
      prefix[d + 1] = std::move(p);
      val[d + 1] = val[d] + ival[a];
      rec(d + 1, wi);
    }
  };
  rec(0, 0);
  return r;
}

}  // namespace braidrep
