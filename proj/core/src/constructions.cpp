#include "braidrep/constructions.hpp"

#include <map>
#include <numeric>

namespace braidrep {

namespace {

Matrix kron_all(const std::vector<Matrix>& fs) {
  Matrix m = Matrix::identity(1);
  for (const auto& f : fs) m = kron(m, f);
  return m;
}

// I (x) .. (x) x (slot k, 0-based) (x) .. (x) I
Matrix slot_op(const std::vector<size_t>& dims, size_t k, const Matrix& x) {
  std::vector<Matrix> fs;
  for (size_t s = 0; s < dims.size(); ++s) fs.push_back(s == k ? x : Matrix::identity(dims[s]));
  return kron_all(fs);
}

Matrix swap_matrix(size_t d) {
  Matrix m(d * d, d * d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) m(b * d + a, a * d + b) = 1;
  return m;
}

Matrix lin_comb(const std::vector<Matrix>& ms, const Vec& c, size_t n) {
  Matrix r(n, n);
  for (size_t k = 0; k < ms.size(); ++k)
    if (!c[k].is_zero()) r += ms[k] * c[k];
  return r;
}

FieldElem dot(const Vec& a, const Vec& b) {
  FieldElem s;
  for (size_t i = 0; i < a.size(); ++i) FieldElem::fma(s, a[i], b[i]);
  return s;
}

// Y with K Y = X K for K with mutually orthogonal columns
Matrix restrict_orthogonal(const std::vector<Vec>& K, const Matrix& X) {
  size_t m = K.size();
  Matrix Y(m, m);
  for (size_t b = 0; b < m; ++b) {
    Vec xk = X * K[b];
    for (size_t a = 0; a < m; ++a) Y(a, b) = dot(K[a], xk) / dot(K[a], K[a]);
  }
  Matrix Km = Matrix::from_columns(K);
  if (Km * Y != X * Km) throw ResidualError("subspace is not invariant");
  return Y;
}

size_t pair_pos(int n, int i, int j) {
  size_t p = 0;
  for (int a = 1; a < i; ++a) p += static_cast<size_t>(n - a);
  return p + static_cast<size_t>(j - i - 1);
}

const Matrix& family_at(const TFamily& ts, int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return ts.at(pair_pos(n, i, j)).second;
}

}  // namespace

// ---- Hecke ----

VarietyPoint hecke_point(const Partition& p, const FieldElem& alpha, const FieldElem& beta) {
  SymRep M = irrep(p);
  if (M.n < 2) throw InputError("Hecke point needs n >= 2");
  Matrix tau = Matrix::scalar(M.dim(), alpha) + M.gens[0] * beta;
  return make_point(M, tau, {M.dim()});
}

InfRep hecke_rep(const Partition& p, const FieldElem& alpha, const FieldElem& beta) {
  return hecke_point(p, alpha, beta).rep;
}

InfRep burau_rep(int n) {
  if (n < 2) throw InputError("Burau needs n >= 2");
  Partition p = n == 2 ? Partition{1, 1} : Partition{n - 1, 1};
  return hecke_rep(p, 0, 1);
}

FieldElem cubic_discriminant(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  return a * b * c * (c - b) * (a - c) * (b - a) * (c * c - c * b + b * b) * (b * b - b * a + a * a) *
         (a * a + b * c) * (b * b + a * c) * (c * c + a * b);
}

CubicHecke cubic_hecke_matrices(const FieldElem& a, const FieldElem& b, const FieldElem& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw InputError("cubic Hecke parameters must be nonzero");
  if (a == b || a == c || b == c) throw InputError("cubic Hecke parameters must be distinct");
  CubicHecke h;
  h.a = a;
  h.b = b;
  h.c = c;
  h.s1 = Matrix::diag({a, b, c});
  FieldElem da = (a - b) * (a - c), db = (b - a) * (b - c), dc = (c - a) * (c - b);
  h.s2 = Matrix{{b * c * (b + c) / da, c * (a * c + b * b) / da, b * (a * b + c * c) / da},
                {c * (b * c + a * a) / db, a * c * (a + c) / db, a * (a * b + c * c) / db},
                {b * (b * c + a * a) / dc, a * (a * c + b * b) / dc, a * b * (a + b) / dc}};
  h.discriminant = cubic_discriminant(a, b, c);
  h.semisimple = !h.discriminant.is_zero();
  h.braid = h.s1 * h.s2 * h.s1 == h.s2 * h.s1 * h.s2;
  auto cubic = [&](const Matrix& s) {
    Matrix I = Matrix::identity(3);
    return ((s - I * a) * (s - I * b) * (s - I * c)).is_zero();
  };
  h.cubic = cubic(h.s1) && cubic(h.s2);
  h.trace_ok = h.s2.trace() == a + b + c;
  h.det_ok = det(h.s2) == a * b * c;
  h.central = power(h.s1 * h.s2, 3);
  FieldElem abc = a * b * c;
  h.central_scalar = h.central == Matrix::scalar(3, abc * abc);
  return h;
}

std::vector<std::string> CubicHecke::failures() const {
  std::vector<std::string> f;
  if (!braid) f.push_back("braid");
  if (!cubic) f.push_back("cubic");
  if (!trace_ok) f.push_back("trace");
  if (!det_ok) f.push_back("det");
  if (!central_scalar) f.push_back("central");
  return f;
}

// ---- Lie algebras and Casimir ----

std::vector<Matrix> LieAlgSpec::ad() const {
  std::vector<Matrix> out;
  for (size_t i = 0; i < dim; ++i) {
    Matrix m(dim, dim);
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) m(k, j) = bracket[i][j][k];
    out.push_back(std::move(m));
  }
  return out;
}

Matrix killing_form(const std::vector<std::vector<Vec>>& bracket) {
  LieAlgSpec tmp;
  tmp.dim = bracket.size();
  tmp.bracket = bracket;
  auto ad = tmp.ad();
  Matrix K(tmp.dim, tmp.dim);
  for (size_t i = 0; i < tmp.dim; ++i)
    for (size_t j = 0; j < tmp.dim; ++j) K(i, j) = (ad[i] * ad[j]).trace();
  return K;
}

bool is_invariant(const LieAlgSpec& g) {
  size_t d = g.dim;
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y)
      for (size_t z = 0; z < d; ++z) {
        FieldElem s;
        for (size_t k = 0; k < d; ++k) {
          FieldElem::fma(s, g.bracket[x][y][k], g.form(k, z));
          FieldElem::fma(s, g.bracket[x][z][k], g.form(y, k));
        }
        if (!s.is_zero()) return false;
      }
  return true;
}

LieAlgSpec make_lie_algebra(std::string name, std::vector<std::vector<Vec>> bracket, std::optional<Matrix> form) {
  LieAlgSpec g;
  g.name = std::move(name);
  g.dim = bracket.size();
  for (const auto& row : bracket) {
    if (row.size() != g.dim) throw InputError("structure constants must be dim x dim x dim");
    for (const auto& v : row)
      if (v.size() != g.dim) throw InputError("structure constants must be dim x dim x dim");
  }
  g.bracket = std::move(bracket);
  g.form = form ? *form : killing_form(g.bracket);
  if (g.form.rows() != g.dim || g.form.cols() != g.dim) throw InputError("form has the wrong size");
  if (!is_invariant(g)) throw InputError("form is not invariant");
  auto fi = inverse(g.form);
  if (!fi) throw InputError("form is degenerate");
  for (size_t i = 0; i < g.dim; ++i) g.dual.push_back(fi->column(i));
  return g;
}

LieAlgSpec lie_sl2() {
  auto v = [](int x, int y, int z) { return Vec{FieldElem(x), FieldElem(y), FieldElem(z)}; };
  std::vector<std::vector<Vec>> br(3, std::vector<Vec>(3, v(0, 0, 0)));
  br[0][1] = v(0, 0, 1);
  br[1][0] = v(0, 0, -1);
  br[2][0] = v(2, 0, 0);
  br[0][2] = v(-2, 0, 0);
  br[2][1] = v(0, -2, 0);
  br[1][2] = v(0, 2, 0);
  return make_lie_algebra("sl2", br);
}

namespace {
std::vector<Matrix> so_basis(int m) {
  std::vector<Matrix> b;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Matrix x(m, m);
      x(i, j) = 1;
      x(j, i) = -1;
      b.push_back(std::move(x));
    }
  return b;
}
}  // namespace

LieAlgSpec lie_so(int m) {
  if (m < 3 || m > 5) throw InputError("so_m is available for m in {3, 4, 5}");
  auto basis = so_basis(m);
  size_t d = basis.size();
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) idx.push_back({i, j});
  std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d, Vec(d)));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      Matrix c = commutator(basis[a], basis[b]);
      for (size_t k = 0; k < d; ++k) br[a][b][k] = c(idx[k].first, idx[k].second);
    }
  return make_lie_algebra("so" + std::to_string(m), br);
}

LieAlgSpec lie_algebra(const std::string& name) {
  if (name == "sl2") return lie_sl2();
  if (name.size() == 3 && name.rfind("so", 0) == 0) return lie_so(name[2] - '0');
  throw InputError("unknown Lie algebra '" + name + "'");
}

LieModule sl2_irrep(int k) {
  if (k < 0) throw InputError("highest weight must be nonnegative");
  size_t d = static_cast<size_t>(k) + 1;
  Matrix e(d, d), f(d, d), h(d, d);
  for (int j = 0; j <= k; ++j) {
    h(j, j) = k - 2 * j;
    if (j < k) f(j + 1, j) = 1;
    if (j > 0) e(j - 1, j) = j * (k - j + 1);
  }
  return {"V" + std::to_string(k), {e, f, h}};
}

LieModule so_defining(int m) {
  if (m < 3 || m > 5) throw InputError("so_m is available for m in {3, 4, 5}");
  return {"Q" + std::to_string(m), so_basis(m)};
}

bool is_module(const LieAlgSpec& g, const LieModule& V) {
  if (V.action.size() != g.dim) return false;
  size_t n = V.dim();
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = 0; j < g.dim; ++j)
      if (commutator(V.action[i], V.action[j]) != lin_comb(V.action, g.bracket[i][j], n)) return false;
  return true;
}

std::optional<Matrix> invariant_form(const LieModule& V) {
  size_t d = V.dim();
  // unknown B(p,q) at index p*d+q; equations (x^T B + B x)(r,c) = 0
  Matrix sys(V.action.size() * d * d, d * d);
  size_t row = 0;
  for (const auto& x : V.action)
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c, ++row)
        for (size_t k = 0; k < d; ++k) {
          sys(row, k * d + c) += x(k, r);
          sys(row, r * d + k) += x(k, c);
        }
  auto ns = nullspace(sys);
  if (ns.empty()) return std::nullopt;
  for (const auto& v : ns) {
    Matrix B = unvectorize(v, d, d);
    if (inverse(B)) return B;
  }
  Vec s(d * d);
  for (const auto& v : ns)
    for (size_t i = 0; i < s.size(); ++i) s[i] += v[i];
  Matrix B = unvectorize(s, d, d);
  if (inverse(B)) return B;
  return std::nullopt;
}

Matrix casimir_tensor(const LieAlgSpec& g, const LieModule& V, const LieModule& W) {
  Matrix c(V.dim() * W.dim(), V.dim() * W.dim());
  for (size_t l = 0; l < g.dim; ++l) c += kron(V.action[l], lin_comb(W.action, g.dual[l], W.dim()));
  return c * FieldElem(2);
}

std::vector<std::string> tn_relation_failures(const TFamily& ts, int n) {
  std::vector<std::string> f;
  auto t = [&](int i, int j) -> const Matrix& { return family_at(ts, n, i, j); };
  auto nm = [](int i, int j) { return "t" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (!commutator(t(i, j), t(i, k) + t(j, k)).is_zero())
          f.push_back("[" + nm(i, j) + ", " + nm(i, k) + " + " + nm(j, k) + "]");
        for (int l = k + 1; l <= n; ++l) {
          if (l == i || l == j || k < i) continue;
          if (!commutator(t(i, j), t(k, l)).is_zero()) f.push_back("[" + nm(i, j) + ", " + nm(k, l) + "]");
        }
      }
  return f;
}

const Matrix& CasimirRep::tau(int i, int j) const { return family_at(taus, n, i, j); }

CasimirRep casimir_rep(const LieAlgSpec& g, const std::vector<LieModule>& factors) {
  if (factors.size() < 2) throw InputError("Casimir construction needs at least two factors");
  CasimirRep out;
  out.n = static_cast<int>(factors.size());
  for (const auto& V : factors) {
    if (!is_module(g, V)) throw InputError("factor " + V.name + " is not a module");
    out.dims.push_back(V.dim());
  }
  size_t n = factors.size();
  size_t N = 1;
  for (auto d : out.dims) N *= d;
  std::vector<std::vector<Matrix>> duals(n);
  for (size_t s = 0; s < n; ++s)
    for (size_t l = 0; l < g.dim; ++l) duals[s].push_back(lin_comb(factors[s].action, g.dual[l], out.dims[s]));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Matrix t(N, N);
      for (size_t l = 0; l < g.dim; ++l) {
        std::vector<Matrix> fs;
        for (size_t s = 0; s < n; ++s)
          fs.push_back(s == i ? factors[s].action[l] : s == j ? duals[s][l] : Matrix::identity(out.dims[s]));
        t += kron_all(fs);
      }
      out.taus.push_back({{static_cast<int>(i + 1), static_cast<int>(j + 1)}, t * FieldElem(2)});
    }
  for (size_t l = 0; l < g.dim; ++l) {
    Matrix d(N, N);
    for (size_t s = 0; s < n; ++s) d += slot_op(out.dims, s, factors[s].action[l]);
    out.diagonal.push_back(std::move(d));
  }
  out.relation_failures = tn_relation_failures(out.taus, out.n);
  out.commutes_diagonal = true;
  Matrix total(N, N);
  for (const auto& [ij, t] : out.taus) {
    total += t;
    for (const auto& d : out.diagonal)
      if (!commutator(t, d).is_zero()) out.commutes_diagonal = false;
  }
  out.total_commutes = true;
  for (const auto& d : out.diagonal)
    if (!commutator(total, d).is_zero()) out.total_commutes = false;

  std::vector<Matrix> forms;
  for (const auto& V : factors) {
    auto B = invariant_form(V);
    if (!B) break;
    forms.push_back(*B);
  }
  if (forms.size() == n) {
    out.form = kron_all(forms);
    out.selfadjoint = true;
    for (const auto& [ij, t] : out.taus)
      if (adjoint(t, *out.form) != t) out.selfadjoint = false;
  }

  bool equal = true;
  for (size_t s = 1; s < n; ++s)
    if (factors[s].action != factors[0].action) equal = false;
  if (equal) {
    SymRep base;
    base.n = out.n;
    size_t d = out.dims[0];
    for (size_t k = 0; k + 1 < n; ++k) {
      size_t left = 1, right = 1;
      for (size_t s = 0; s < k; ++s) left *= d;
      for (size_t s = k + 2; s < n; ++s) right *= d;
      base.gens.push_back(kron(kron(Matrix::identity(left), swap_matrix(d)), Matrix::identity(right)));
    }
    base.form.assign(N, FieldElem(1));
    InfRep r(std::move(base), out.taus[0].second);
    for (const auto& [ij, t] : out.taus)
      if (r.t(ij.first, ij.second) != t)
        out.relation_failures.push_back("slot conjugation t" + std::to_string(ij.first) + std::to_string(ij.second));
    out.rep = std::move(r);
  }
  return out;
}

CasimirRep casimir_rep(const LieAlgSpec& g, const LieModule& V, int n) {
  if (n < 2) throw InputError("Casimir construction needs n >= 2");
  return casimir_rep(g, std::vector<LieModule>(static_cast<size_t>(n), V));
}

HighestWeightSub highest_weight_sub(const std::vector<int>& weights, uint64_t seed, int trials) {
  if (weights.empty()) throw InputError("need at least one factor");
  HighestWeightSub out;
  out.weights = weights;
  out.seed = seed;
  std::vector<LieModule> fs;
  std::vector<size_t> dims;
  for (int k : weights) {
    fs.push_back(sl2_irrep(k));
    dims.push_back(fs.back().dim());
  }
  size_t N = 1;
  for (auto d : dims) N *= d;
  Matrix De(N, N);
  for (size_t s = 0; s < fs.size(); ++s) De += slot_op(dims, s, fs[s].action[0]);
  std::vector<Vec> K;
  for (const auto& v : nullspace(De)) {
    Vec u = v;
    for (const auto& w : K) {
      FieldElem c = dot(v, w) / dot(w, w);
      for (size_t i = 0; i < N; ++i) u[i] -= c * w[i];
    }
    K.push_back(std::move(u));
  }
  out.basis = Matrix::from_columns(K);
  int n = static_cast<int>(weights.size());
  if (n >= 2) {
    LieAlgSpec g = lie_sl2();
    CasimirRep c = casimir_rep(g, fs);
    for (const auto& [ij, t] : c.taus) out.taus.push_back({ij, restrict_orthogonal(K, t)});
    out.relation_failures = tn_relation_failures(out.taus, n);
    if (c.rep) {
      SymRep base;
      base.n = n;
      for (const auto& s : c.rep->base().gens) base.gens.push_back(restrict_orthogonal(K, s));
      for (const auto& k : K) base.form.push_back(dot(k, k));
      out.rep = InfRep(std::move(base), out.taus[0].second);
    }
  }
  out.witness = is_agregating(out.taus, K.size(), seed, trials);
  return out;
}

// ---- Artin action and Long induction ----

std::vector<std::string> long_failures(const LongRep& L) {
  std::vector<std::string> f;
  int n = L.n();
  if (static_cast<int>(L.g.size()) != n) {
    f.push_back("need one g per strand");
    return f;
  }
  for (const auto& x : validate(L.core).failures()) f.push_back(x);
  auto idx = [](int a) { return std::to_string(a); };
  for (int i = 1; i < n; ++i) {
    Perm s = Perm::adjacent(n, i);
    for (int k = 1; k <= n; ++k)
      if (act(L.core.base(), s, L.g[k - 1]) != L.g[s(k) - 1])
        f.push_back("equivariance s" + idx(i) + " g" + idx(k));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Matrix& t = L.core.t(i, j);
      for (int k = 1; k <= n; ++k) {
        Matrix lhs = commutator(t, L.g[k - 1]);
        Matrix rhs(L.dim(), L.dim());
        if (k == i) rhs = commutator(L.g[i - 1], L.g[j - 1]);
        if (k == j) rhs = commutator(L.g[j - 1], L.g[i - 1]);
        if (lhs != rhs) f.push_back("derivation t" + idx(i) + idx(j) + " g" + idx(k));
      }
    }
  return f;
}

LongRep artin_restriction(const InfRep& r) {
  int n = r.n() - 1;
  if (n < 2) throw InputError("Artin restriction needs at least three strands");
  LongRep L{restrict(r, n), {}};
  for (int k = 1; k <= n; ++k) L.g.push_back(r.t(k, n + 1));
  return L;
}

LongRep long_from_base(const InfRep& r) {
  return LongRep{r, std::vector<Matrix>(static_cast<size_t>(r.n()), Matrix(r.dim(), r.dim()))};
}

Matrix long_t_plus(const LongRep& L, const FieldElem& alpha, int i, int j) {
  int n = L.n();
  size_t m = L.dim();
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw InputError("t+_ij needs 1 <= i != j <= n");
  Matrix gi = L.g[i - 1] + Matrix::scalar(m, alpha), gj = L.g[j - 1] + Matrix::scalar(m, alpha);
  const Matrix& t = L.core.t(i, j);
  Matrix out(n * m, n * m);
  for (int k = 0; k < n; ++k) out.set_block(k * m, k * m, t);
  size_t a = (i - 1) * m, b = (j - 1) * m;
  out.set_block(a, a, t + gj);
  out.set_block(a, b, -gj);
  out.set_block(b, b, t + gi);
  out.set_block(b, a, -gi);
  return out;
}

Matrix long_s_plus(const LongRep& L, int i) {
  int n = L.n();
  size_t m = L.dim();
  Perm s = Perm::adjacent(n, i);
  Matrix out(n * m, n * m);
  for (int k = 1; k <= n; ++k) out.set_block((k - 1) * m, (s.inverse()(k) - 1) * m, L.core.s(i));
  return out;
}

InfRep long_plus(const LongRep& L, const FieldElem& alpha) {
  auto f = long_failures(L);
  if (!f.empty()) throw ResidualError("invalid Long data: " + f.front());
  SymRep base;
  base.n = L.n();
  for (int i = 1; i < L.n(); ++i) base.gens.push_back(long_s_plus(L, i));
  for (int k = 0; k < L.n(); ++k)
    for (const auto& x : L.core.base().form) base.form.push_back(x);
  return InfRep(std::move(base), long_t_plus(L, alpha, 1, 2));
}

HyperbolicDouble hyperbolic_double(const InfRep& r, int eps) {
  if (eps != 1 && eps != -1) throw InputError("eps must be +1 or -1");
  size_t m = r.dim();
  Matrix F(2 * m, 2 * m);
  F.set_block(0, m, Matrix::identity(m));
  F.set_block(m, 0, Matrix::scalar(m, eps));
  return {direct_sum(r, dual(r)), F};
}

namespace {
int adjoint_sign(const Matrix& x, const Matrix& beta) {
  Matrix a = adjoint(x, beta);
  if (a == x) return 1;
  if (a == -x) return -1;
  return 0;
}
}  // namespace

LongFormReport long_form(const LongRep& L, const Matrix& beta, const FieldElem& alpha) {
  size_t m = L.dim();
  int n = L.n();
  if (beta.rows() != m || beta.cols() != m) throw InputError("inner form has the wrong size");
  if (!inverse(beta)) throw InputError("inner form is degenerate");
  for (const auto& s : L.core.base().gens)
    if (s.transpose() * beta * s != beta) throw InputError("inner form is not S_n-isometric");

  LongFormReport rep;
  std::vector<Matrix> g;
  for (const auto& x : L.g) g.push_back(x + Matrix::scalar(m, alpha));
  rep.form = Matrix(n * m, n * m);
  for (int k = 0; k < n; ++k) rep.form.set_block(k * m, k * m, g[k].transpose() * beta);
  rep.det = det(rep.form);
  rep.nondegenerate = !rep.det.is_zero();
  for (const auto& x : L.g)
    if (charpoly(x).eval(-alpha).is_zero()) rep.degeneracy_predicted = true;

  const Matrix& F = rep.form;
  rep.isometry = true;
  for (int i = 1; i < n; ++i) {
    Matrix s = long_s_plus(L, i);
    if (s.transpose() * F * s != F) rep.isometry = false;
  }

  rep.t_sign = adjoint_sign(L.core.tau(), beta);
  rep.g_sign = adjoint_sign(g[0], beta);
  for (const auto& x : g)
    if (adjoint_sign(x, beta) != rep.g_sign) rep.g_sign = 0;

  rep.d_identity = rep.t_sign != 0;
  rep.m_identity = rep.g_sign != 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      size_t a = (i - 1) * m, b = (j - 1) * m;
      Matrix delta(n * m, n * m);
      delta.set_block(b, b, commutator(g[i - 1], g[j - 1]).transpose() * beta);
      delta.set_block(a, a, commutator(g[j - 1], g[i - 1]).transpose() * beta);
      Matrix d(n * m, n * m);
      for (int k = 0; k < n; ++k) d.set_block(k * m, k * m, L.core.t(i, j));
      Matrix mm = long_t_plus(L, alpha, i, j) - d;
      if (rep.t_sign != 0 && d.transpose() * F - F * d * FieldElem(rep.t_sign) != delta) rep.d_identity = false;
      if (rep.g_sign != 0 && mm.transpose() * F - F * mm * FieldElem(rep.g_sign) != -delta) rep.m_identity = false;
    }

  bool sym = beta.transpose() == beta, skew = beta.transpose() == -beta;
  if (sym && rep.t_sign == 1 && rep.g_sign == 1)
    rep.base_type = FormType::unitary;
  else if (sym && rep.t_sign == -1 && rep.g_sign == -1)
    rep.base_type = FormType::orthogonal;
  else if (skew && rep.t_sign == -1 && rep.g_sign == -1)
    rep.base_type = FormType::symplectic;
  switch (rep.base_type) {
    case FormType::unitary: rep.expected = FormType::unitary; break;
    case FormType::orthogonal: rep.expected = FormType::symplectic; break;
    case FormType::symplectic: rep.expected = FormType::orthogonal; break;
    case FormType::none: break;
  }
  if (rep.nondegenerate) rep.plus_type = form_type(long_plus(L, alpha), F).type;
  return rep;
}

std::vector<std::string> LongFormReport::failures() const {
  std::vector<std::string> f;
  if (!isometry) f.push_back("isometry");
  if (t_sign != 0 && !d_identity) f.push_back("d_identity");
  if (g_sign != 0 && !m_identity) f.push_back("m_identity");
  if (nondegenerate == degeneracy_predicted) f.push_back("degeneracy");
  if (nondegenerate && expected != FormType::none && plus_type != expected) f.push_back("classification");
  return f;
}

}  // namespace braidrep
