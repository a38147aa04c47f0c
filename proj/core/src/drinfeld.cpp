#include "braidrep/drinfeld.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace braidrep {

BraidWord::BraidWord(std::vector<int> letters) : w_(std::move(letters)) {
  for (int x : w_)
    if (x == 0) throw InputError("braid word letters are nonzero");
}

BraidWord BraidWord::sigma(int i, int e) {
  if (i < 1) throw InputError("sigma index must be >= 1");
  std::vector<int> w;
  for (int k = 0; k < std::abs(e); ++k) w.push_back(e > 0 ? i : -i);
  return BraidWord(w);
}

BraidWord BraidWord::xi(int i, int j) {
  if (i < 1 || j <= i) throw InputError("xi_ij needs 1 <= i < j");
  std::vector<int> w;
  for (int k = j - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k < j; ++k) w.push_back(-k);
  return BraidWord(w);
}

BraidWord BraidWord::delta(int r) {
  if (r < 2) throw InputError("delta_r needs r >= 2");
  std::vector<int> w;
  for (int k = r - 1; k >= 2; --k) w.push_back(k);
  w.push_back(1);
  w.push_back(1);
  for (int k = 2; k < r; ++k) w.push_back(k);
  return BraidWord(w);
}

BraidWord BraidWord::gamma(int r) {
  if (r < 2) throw InputError("gamma_r needs r >= 2");
  std::vector<int> w;
  for (int rep = 0; rep < r; ++rep)
    for (int k = 1; k < r; ++k) w.push_back(k);
  return BraidWord(w);
}

BraidWord BraidWord::parse(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string tok;
  std::vector<int> w;
  while (in >> tok) {
    int sign = 1;
    std::string body = tok;
    if (body[0] == 's' || body[0] == 'S') {
      body = body.substr(1);
      auto caret = body.find('^');
      if (caret != std::string::npos) {
        if (body.substr(caret) != "^-1") throw InputError("bad braid letter " + tok);
        sign = -1;
        body = body.substr(0, caret);
      }
    }
    char* end = nullptr;
    long v = std::strtol(body.c_str(), &end, 10);
    if (body.empty() || *end != '\0' || v == 0) throw InputError("bad braid letter " + tok);
    w.push_back(static_cast<int>(v) * sign);
  }
  return BraidWord(w);
}

int BraidWord::max_index() const {
  int m = 0;
  for (int x : w_) m = std::max(m, std::abs(x));
  return m;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> w(w_.rbegin(), w_.rend());
  for (int& x : w) x = -x;
  return BraidWord(w);
}

BraidWord BraidWord::free_reduced() const {
  std::vector<int> st;
  for (int x : w_) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  return BraidWord(st);
}

std::string BraidWord::str() const {
  std::string s;
  for (int x : w_) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(std::abs(x));
    if (x < 0) s += "^-1";
  }
  return s;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<int> w = a.w_;
  w.insert(w.end(), b.w_.begin(), b.w_.end());
  return BraidWord(w);
}

BraidRep make_braid_rep(int n, std::vector<HMatrix> sigmas, Provenance p) {
  if (n < 1 || sigmas.size() != static_cast<size_t>(std::max(n - 1, 0)))
    throw InputError("braid representation needs n-1 generator images");
  BraidRep R;
  R.n = n;
  R.D = sigmas.empty() ? 0 : sigmas[0].degree();
  for (const auto& s : sigmas) {
    if (s.n() != sigmas[0].n() || s.degree() != R.D) throw InputError("generator images must share N and D");
    if (!inverse(s.coeff(0))) throw InputError("generator image with singular constant term");
    R.inverses.push_back(s.inverse());
  }
  R.sigmas = std::move(sigmas);
  R.provenance = std::move(p);
  return R;
}

std::vector<std::string> braid_failures(const BraidRep& R) {
  std::vector<std::string> f;
  for (int i = 1; i + 1 < R.n; ++i) {
    const HMatrix& a = R.sigmas[i - 1];
    const HMatrix& b = R.sigmas[i];
    if (a * b * a != b * a * b) f.push_back("braid s" + std::to_string(i) + " s" + std::to_string(i + 1));
  }
  for (int i = 1; i < R.n; ++i)
    for (int j = i + 2; j < R.n; ++j)
      if (R.sigmas[i - 1] * R.sigmas[j - 1] != R.sigmas[j - 1] * R.sigmas[i - 1])
        f.push_back("locality s" + std::to_string(i) + " s" + std::to_string(j));
  return f;
}

HMatrix lift_sigma(const InfRep& r, const Associator& phi, int i, int D) {
  if (D > phi.D) throw InputError("lift: truncation degree exceeds the associator degree");
  const Matrix& t = r.t(i, i + 1);
  Matrix Y = y_element(r, i);
  TruncSeries f = phi.phi.truncated(D);
  HMatrix left = substitute(f, {t, Y}, {1, 1}, D);
  HMatrix right = substitute(f, {Y, t}, {1, 1}, D);
  return left * HMatrix::constant(r.s(i), D) * HMatrix::exp_h(t, phi.lambda, 1, D) * right;
}

BraidRep lift(const InfRep& r, const Associator& phi) { return lift(r, phi, phi.D); }

BraidRep lift(const InfRep& r, const Associator& phi, int D) {
  ValidationReport v = validate(r);
  if (!v.valid()) {
    std::string msg = "lift: invalid infinitesimal representation:";
    for (const auto& f : v.failures()) msg += " " + f;
    throw InputError(msg);
  }
  std::vector<HMatrix> s;
  for (int i = 1; i < r.n(); ++i) s.push_back(lift_sigma(r, phi, i, D));
  if (r.n() == 1) throw InputError("lift needs n >= 2");
  BraidRep R = make_braid_rep(r.n(), std::move(s), {"", "", phi.lambda, phi.alpha()});
  auto f = braid_failures(R);
  if (!f.empty()) throw ResidualError("lift: relation residual nonzero: " + f[0]);
  return R;
}

HMatrix eval_word(const BraidRep& R, const BraidWord& w) {
  HMatrix p = HMatrix::identity(R.N(), R.D);
  for (int x : w.letters()) {
    int i = std::abs(x);
    if (i >= R.n) throw InputError("braid letter s" + std::to_string(i) + " out of range");
    p = p * (x > 0 ? R.sigmas[i - 1] : R.inverses[i - 1]);
  }
  return p;
}

bool all_zero(const std::vector<HResidual>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const HResidual& r) { return r.zero(); });
}

std::vector<HResidual> delta_identity(const BraidRep& R, const InfRep& r) {
  std::vector<HResidual> out;
  for (int k = 2; k <= R.n; ++k) {
    HMatrix lhs = eval_word(R, BraidWord::delta(k));
    HMatrix rhs = HMatrix::exp_h(y_element(r, k), R.provenance.lambda * FieldElem(2), 1, R.D);
    out.push_back({"delta_" + std::to_string(k), lhs - rhs});
  }
  return out;
}

std::vector<HResidual> gamma_identity(const BraidRep& R, const InfRep& r) {
  HMatrix lhs = eval_word(R, BraidWord::gamma(R.n));
  HMatrix rhs = HMatrix::exp_h(t_total(r), R.provenance.lambda * FieldElem(2), 1, R.D);
  return {{"gamma_" + std::to_string(R.n), lhs - rhs}};
}

HMatrix order3_expansion(const InfRep& r, int i, const FieldElem& lambda, const FieldElem& alpha, int D) {
  size_t N = r.dim();
  auto hx = [&](const Matrix& m) {
    HMatrix x(N, D);
    if (D >= 1) x.coeff(1) = m;
    return x;
  };
  HMatrix t = hx(r.t(i, i + 1));
  HMatrix Y = hx(y_element(r, i));
  HMatrix Yt = Y * t - t * Y;
  HMatrix tY = t * Y - Y * t;
  HMatrix inner = HMatrix::exp_h(r.t(i, i + 1), lambda, 1, D) + Yt * (lambda * lambda / FieldElem(3)) -
                  (t * tY - tY * t) * alpha + (t * Yt + Yt * t) * (lambda * lambda * lambda / FieldElem(6));
  return HMatrix::constant(r.s(i), D) * inner;
}

std::vector<HResidual> first_order_checks(const BraidRep& R, const InfRep& r) {
  std::vector<HResidual> out;
  int D1 = std::min(R.D, 1);
  size_t N = R.N();
  for (int i = 1; i <= R.n; ++i)
    for (int j = i + 1; j <= R.n; ++j) {
      HMatrix lhs = eval_word(R, BraidWord::xi(i, j)).truncated(D1);
      HMatrix rhs = HMatrix::identity(N, D1);
      if (D1 >= 1) rhs.coeff(1) = r.t(i, j) * (R.provenance.lambda * FieldElem(2));
      out.push_back({"xi_" + std::to_string(i) + std::to_string(j), lhs - rhs});
    }
  if (R.n >= 2) {
    int D3 = std::min(R.D, 3);
    int i = R.n - 1;
    HMatrix lhs = R.sigmas[i - 1].truncated(D3);
    HMatrix rhs = order3_expansion(r, i, R.provenance.lambda, R.provenance.alpha, D3);
    out.push_back({"sigma_" + std::to_string(i) + "_order3", lhs - rhs});
  }
  return out;
}

bool admits(const FormReport& f, FormType mode) {
  if (!f.sn_isometric) return false;
  switch (mode) {
    case FormType::orthogonal:
      return f.symmetric && f.tau_antiselfadjoint;
    case FormType::symplectic:
      return f.skew && f.tau_antiselfadjoint;
    case FormType::unitary:
      return f.symmetric && f.tau_selfadjoint;
    default:
      return false;
  }
}

std::vector<HResidual> isometry_check(const BraidRep& R, const InfRep& r, const Matrix& beta, FormType mode) {
  if (!admits(form_type(r, beta), mode))
    throw InputError("isometry_check: form does not have type " + to_string(mode));
  HMatrix b = HMatrix::constant(beta, R.D);
  std::vector<HResidual> out;
  for (int i = 1; i < R.n; ++i) {
    const HMatrix& s = R.sigmas[i - 1];
    HMatrix lhs = mode == FormType::unitary ? s.transpose() * b * s.eps() : s.transpose() * b * s;
    out.push_back({"isometry_s" + std::to_string(i), lhs - b});
  }
  return out;
}

HMatrix hensel_conjugate(const HMatrix& a, const Poly& Q) {
  int D = a.degree();
  size_t N = a.n();
  if (Q.degree() < 1) throw InputError("hensel_conjugate: polynomial of degree >= 1 required");
  if (!eval(Q, a).is_zero()) throw InputError("hensel_conjugate: Q(a) != 0");
  const Matrix& a0 = a.coeff(0);
  if (!inverse(Q.derivative().eval(a0))) throw InputError("hensel_conjugate: Q'(abar) is singular");
  HMatrix abar = HMatrix::constant(a0, D);
  // powers of a and abar up to deg Q - 1
  int m = Q.degree();
  std::vector<HMatrix> pa{HMatrix::identity(N, D)}, pb{HMatrix::identity(N, D)};
  for (int k = 1; k < m; ++k) {
    pa.push_back(pa.back() * a);
    pb.push_back(pb.back() * abar);
  }
  HMatrix P(N, D);
  for (int r = 0; r < m; ++r) {
    const FieldElem c = Q.coeff(r + 1);
    if (c.is_zero()) continue;
    HMatrix I(N, D);
    for (int s = 0; s <= r; ++s) I += pa[r - s] * pb[s];
    P += I * c;
  }
  if (P * abar != a * P) throw ResidualError("hensel_conjugate: P abar != a P");
  return P;
}

size_t hom_infinitesimal(const InfRep& r1, const InfRep& r2) {
  if (r1.n() != r2.n()) throw InputError("hom: strand counts differ");
  std::vector<Matrix> g1 = r1.base().gens, g2 = r2.base().gens;
  g1.push_back(r1.tau());
  g2.push_back(r2.tau());
  return intertwiners(g1, g2).size();
}

HomSpaceResult hom_space(const BraidRep& R1, const BraidRep& R2, const InfRep& r1, const InfRep& r2) {
  if (R1.n != R2.n || R1.D != R2.D) throw InputError("hom_space: representations differ in n or D");
  const int D = R1.D;
  const size_t N1 = R1.N(), N2 = R2.N(), B = N1 * N2;
  const size_t cols = static_cast<size_t>(D + 1) * B;
  HomSpaceResult res;
  res.D = D;
  res.hom_inf = hom_infinitesimal(r1, r2);
  res.hom_sym = intertwiners(r1.base().gens, r2.base().gens).size();
  // X_k is N2 x N1; X R1 = R2 X degree by degree
  std::vector<Vec> rows;
  for (int i = 0; i + 1 < R1.n; ++i)
    for (int m = 0; m <= D; ++m)
      for (size_t a = 0; a < N2; ++a)
        for (size_t b = 0; b < N1; ++b) {
          Vec row(cols);
          for (int k = 0; k <= m; ++k) {
            const Matrix& A1 = R1.sigmas[i].coeff(m - k);
            const Matrix& A2 = R2.sigmas[i].coeff(m - k);
            size_t off = static_cast<size_t>(k) * B;
            for (size_t c = 0; c < N1; ++c) row[off + a * N1 + c] += A1(c, b);
            for (size_t c = 0; c < N2; ++c) row[off + c * N1 + b] -= A2(a, c);
          }
          rows.push_back(std::move(row));
        }
  std::vector<Vec> kernel;
  if (rows.empty()) {
    for (size_t c = 0; c < cols; ++c) {
      Vec e(cols);
      e[c] = 1;
      kernel.push_back(e);
    }
  } else {
    Matrix M(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    kernel = nullspace(M);
  }
  res.truncated_dim = kernel.size();
  SpanBuilder low(static_cast<size_t>(D) * B), con(B);
  for (const auto& v : kernel) {
    if (D > 0) low.add(Vec(v.begin(), v.begin() + static_cast<long>(D * B)));
    con.add(Vec(v.begin(), v.begin() + static_cast<long>(B)));
  }
  res.lifted_dim = D > 0 ? low.dim() : 0;
  res.constant_dim = con.dim();
  return res;
}

IrreducibilityResult abs_irreducible(const BraidRep& R, const InfRep& r) {
  IrreducibilityResult out;
  size_t N = R.N();
  std::vector<Matrix> gens;
  for (const auto& s : R.sigmas) gens.push_back(s.coeff(0));
  if (R.D >= 1)
    for (int i = 1; i <= R.n; ++i)
      for (int j = i + 1; j <= R.n; ++j) gens.push_back(eval_word(R, BraidWord::xi(i, j)).coeff(1));
  out.lifted = generated_algebra_dim(gens, N) == N * N;
  std::vector<Matrix> inf = r.base().gens;
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j) inf.push_back(r.t(i, j));
  out.infinitesimal = generated_algebra_dim(inf, N) == N * N;
  return out;
}

BraidRep tensor(const BraidRep& a, const BraidRep& b) {
  if (a.n != b.n || a.D != b.D) throw InputError("tensor: representations differ in n or D");
  std::vector<HMatrix> s;
  for (size_t i = 0; i < a.sigmas.size(); ++i) s.push_back(kron(a.sigmas[i], b.sigmas[i]));
  return make_braid_rep(a.n, std::move(s), a.provenance);
}

BraidRep dual(const BraidRep& a) {
  std::vector<HMatrix> s;
  for (const auto& x : a.inverses) s.push_back(x.transpose());
  return make_braid_rep(a.n, std::move(s), a.provenance);
}

BraidRep direct_sum(const BraidRep& a, const BraidRep& b) {
  if (a.n != b.n || a.D != b.D) throw InputError("direct_sum: representations differ in n or D");
  std::vector<HMatrix> s;
  for (size_t i = 0; i < a.sigmas.size(); ++i) s.push_back(block_diag(a.sigmas[i], b.sigmas[i]));
  return make_braid_rep(a.n, std::move(s), a.provenance);
}

BraidRep restrict(const BraidRep& a, int m) {
  if (m < 2 || m > a.n) throw InputError("restriction needs 2 <= m <= n");
  return make_braid_rep(m, std::vector<HMatrix>(a.sigmas.begin(), a.sigmas.begin() + (m - 1)), a.provenance);
}

BraidRep scale_h(const BraidRep& a, const FieldElem& alpha) {
  std::vector<HMatrix> s;
  for (const auto& x : a.sigmas) s.push_back(x.scale_h(alpha));
  return make_braid_rep(a.n, std::move(s), a.provenance);
}

bool equal(const BraidRep& a, const BraidRep& b) { return a.n == b.n && a.D == b.D && a.sigmas == b.sigmas; }

}  // namespace braidrep
