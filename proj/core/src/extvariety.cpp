#include "braidrep/extvariety.hpp"

#include <algorithm>

#include "braidrep/constructions.hpp"

namespace braidrep {

namespace {

std::vector<int> s2n2(int n) { return n == 2 ? std::vector<int>{2} : std::vector<int>{2, n - 2}; }

std::vector<Matrix> young_gens(const SymRep& M) {
  std::vector<Matrix> g;
  for (int i : young_generators(s2n2(M.n))) g.push_back(M.gens[i - 1]);
  return g;
}

SymRep block_rep(const SymRep& M, size_t off, size_t sz) {
  SymRep r;
  r.n = M.n;
  for (const auto& g : M.gens) r.gens.push_back(g.block(off, off, sz, sz));
  r.form.assign(M.form.begin() + static_cast<long>(off), M.form.begin() + static_cast<long>(off + sz));
  r.label = decompose(r);
  return r;
}

FieldElem param(const FamilyParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("missing family parameter '" + key + "'");
  return FieldElem::parse(it->second);
}

FieldElem param_or(const FamilyParams& p, const std::string& key, const FieldElem& dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : FieldElem::parse(it->second);
}

int int_param(const FamilyParams& p, const std::string& key) {
  Rational q = param(p, key).to_rational();
  if (q.get_den() != 1) throw InputError("parameter '" + key + "' must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

PointCheck verify_point(const SymRep& M, const Matrix& tau, std::vector<size_t> blocks) {
  PointCheck pc;
  InfRep r(M, tau);
  pc.report = validate(r);
  pc.in_commutant = pc.report.in_commutant;
  pc.c_zero = pc.report.c_zero();
  if (!pc.report.valid()) return pc;
  if (blocks.empty()) blocks = {M.dim()};
  size_t total = 0;
  for (size_t b : blocks) total += b;
  if (total != M.dim()) throw InputError("block sizes do not add up to the module dimension");
  VarietyPoint p;
  p.M = M;
  p.blocks = std::move(blocks);
  p.basis = commutant_basis(M, s2n2(M.n));
  std::vector<Vec> cols;
  for (const auto& b : p.basis) cols.push_back(vectorize(b));
  auto x = solve(Matrix::from_columns(cols), vectorize(tau));
  if (!x) throw ResidualError("tau commutes with S_{2,n-2} but is outside the computed commutant basis");
  p.coords = *x;
  p.rep = std::move(r);
  pc.point = std::move(p);
  return pc;
}

VarietyPoint make_point(const SymRep& M, const Matrix& tau, std::vector<size_t> blocks) {
  PointCheck pc = verify_point(M, tau, std::move(blocks));
  if (!pc.in_commutant) throw InputError("tau is not in End_{S_{2,n-2}}(M)");
  if (!pc.point) {
    std::string msg = "tau is not a point of V(M):";
    for (const auto& f : pc.report.failures()) msg += " " + f;
    throw InputError(msg);
  }
  return *pc.point;
}

bool is_surjective(const VarietyPoint& p) {
  std::vector<Matrix> g = p.M.gens;
  g.push_back(p.tau());
  size_t N = p.M.dim();
  return generated_algebra_dim(g, N) == N * N;
}

namespace {

size_t tri_index(size_t K, size_t k, size_t l) { return k * K - k * (k - 1) / 2 + (l - k); }

}  // namespace

FieldElem QuadForm::at(size_t k, size_t l) const {
  if (k > l) std::swap(k, l);
  return coeffs[tri_index(vars, k, l)];
}

FieldElem QuadForm::eval(const Vec& x) const {
  FieldElem s;
  for (size_t k = 0; k < vars; ++k)
    for (size_t l = k; l < vars; ++l) s += at(k, l) * x[k] * x[l];
  return s;
}

QuadForm QuadForm::product(const Vec& a, const Vec& b) {
  QuadForm q;
  q.vars = a.size();
  q.coeffs.assign(q.vars * (q.vars + 1) / 2, FieldElem());
  for (size_t k = 0; k < q.vars; ++k)
    for (size_t l = 0; l < q.vars; ++l) {
      size_t i = k <= l ? tri_index(q.vars, k, l) : tri_index(q.vars, l, k);
      q.coeffs[i] += a[k] * b[l];
    }
  return q;
}

std::vector<QuadForm> validity_quadrics(const SymRep& M, const std::vector<Matrix>& basis) {
  const size_t K = basis.size(), N = M.dim();
  const size_t T = K * (K + 1) / 2;
  // C(x) = [x, phi(x)] for the linear maps phi of C_1 and C_2
  std::vector<std::vector<Matrix>> images;
  if (M.n >= 3) {
    std::vector<Matrix> im;
    for (const auto& b : basis)
      im.push_back(act(M, Perm::transposition(M.n, 1, 3), b) + act(M, Perm::transposition(M.n, 2, 3), b));
    images.push_back(std::move(im));
  }
  if (M.n >= 4) {
    Perm p = Perm::transposition(M.n, 1, 3) * Perm::transposition(M.n, 2, 4);
    std::vector<Matrix> im;
    for (const auto& b : basis) im.push_back(act(M, p, b));
    images.push_back(std::move(im));
  }
  SpanBuilder sb(T);
  std::vector<QuadForm> out;
  for (const auto& im : images) {
    // coefficient matrices per monomial
    std::vector<Matrix> coef(T, Matrix(N, N));
    for (size_t k = 0; k < K; ++k)
      for (size_t l = 0; l < K; ++l) {
        size_t i = k <= l ? tri_index(K, k, l) : tri_index(K, l, k);
        coef[i] += commutator(basis[k], im[l]);
      }
    for (size_t a = 0; a < N; ++a)
      for (size_t b = 0; b < N; ++b) {
        QuadForm q;
        q.vars = K;
        q.coeffs.resize(T);
        for (size_t i = 0; i < T; ++i) q.coeffs[i] = coef[i](a, b);
        if (sb.add(q.coeffs)) out.push_back(std::move(q));
      }
  }
  return out;
}

bool same_span(const std::vector<QuadForm>& a, const std::vector<QuadForm>& b) {
  size_t T = !a.empty() ? a[0].coeffs.size() : (!b.empty() ? b[0].coeffs.size() : 0);
  SpanBuilder sa(T), sb(T), sab(T);
  for (const auto& q : a) {
    sa.add(q.coeffs);
    sab.add(q.coeffs);
  }
  for (const auto& q : b) {
    sb.add(q.coeffs);
    sab.add(q.coeffs);
  }
  return sa.dim() == sab.dim() && sb.dim() == sab.dim();
}

GuardCertificate vsvide_guard(const SymRep& B, const SymRep& C) {
  if (B.n != C.n) throw InputError("vsvide_guard: modules of different S_n");
  GuardCertificate g;
  g.hom_dim = intertwiners(young_gens(C), young_gens(B)).size();
  g.certified = g.hom_dim == 0;
  return g;
}

bool upper_splits(const std::vector<Matrix>& gens, size_t n1) {
  // complement {(X v, v)}: s1 X - X s2 = -(off-diagonal block)
  if (gens.empty()) return true;
  size_t N = gens[0].rows(), n2 = N - n1;
  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& g : gens) {
    Matrix s1 = g.block(0, 0, n1, n1), s2 = g.block(n1, n1, n2, n2), off = g.block(0, n1, n1, n2);
    for (size_t a = 0; a < n1; ++a)
      for (size_t b = 0; b < n2; ++b) {
        Vec row(n1 * n2);
        for (size_t c = 0; c < n1; ++c) row[c * n2 + b] += s1(a, c);
        for (size_t c = 0; c < n2; ++c) row[a * n2 + c] -= s2(c, b);
        rows.push_back(std::move(row));
        rhs.push_back(-off(a, b));
      }
  }
  Matrix A(rows.size(), n1 * n2);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < n1 * n2; ++c) A(r, c) = rows[r][c];
  return solve(A, rhs).has_value();
}

bool lower_splits(const std::vector<Matrix>& gens, size_t n1) {
  // complement {(v, Y v)}: s2 Y - Y s1 = -(off-diagonal block)
  if (gens.empty()) return true;
  size_t N = gens[0].rows(), n2 = N - n1;
  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& g : gens) {
    Matrix s1 = g.block(0, 0, n1, n1), s2 = g.block(n1, n1, n2, n2), off = g.block(n1, 0, n2, n1);
    for (size_t a = 0; a < n2; ++a)
      for (size_t b = 0; b < n1; ++b) {
        Vec row(n2 * n1);
        for (size_t c = 0; c < n2; ++c) row[c * n1 + b] += s2(a, c);
        for (size_t c = 0; c < n1; ++c) row[a * n1 + c] -= s1(c, b);
        rows.push_back(std::move(row));
        rhs.push_back(-off(a, b));
      }
  }
  Matrix A(rows.size(), n1 * n2);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < n1 * n2; ++c) A(r, c) = rows[r][c];
  return solve(A, rhs).has_value();
}

ExtensionPair extension_pair(const VarietyPoint& p, const FieldElem& lambda) {
  if (p.blocks.size() != 2) throw InputError("extension_pair needs M = M_1 + M_2");
  ExtensionPair e;
  e.n1 = p.blocks[0];
  e.n2 = p.blocks[1];
  for (const auto& g : p.M.gens)
    if (!g.block(0, e.n1, e.n1, e.n2).is_zero() || !g.block(e.n1, 0, e.n2, e.n1).is_zero())
      throw InputError("extension_pair: S_n action does not preserve the blocks");
  for (auto [off, sz] : {std::pair{size_t{0}, e.n1}, std::pair{e.n1, e.n2}}) {
    Label l = block_rep(p.M, off, sz).label;
    if (l.size() != 1 || l[0].second != 1) throw InputError("extension_pair: blocks must be irreducible");
  }
  const int n = p.M.n;
  for (int i = 1; i < n; ++i) {
    const Matrix& s = p.M.gens[i - 1];
    const Matrix& t = p.rep.t(i, i + 1);
    Matrix s1 = s.block(0, 0, e.n1, e.n1), s2 = s.block(e.n1, e.n1, e.n2, e.n2);
    Matrix up = s, lo = s;
    up.set_block(0, e.n1, s1 * t.block(0, e.n1, e.n1, e.n2) * lambda);
    lo.set_block(e.n1, 0, s2 * t.block(e.n1, 0, e.n2, e.n1) * lambda);
    e.upper.push_back(std::move(up));
    e.lower.push_back(std::move(lo));
  }
  e.upper_failures = braid_relation_failures(e.upper);
  e.lower_failures = braid_relation_failures(e.lower);
  e.upper_split = upper_splits(e.upper, e.n1);
  e.lower_split = lower_splits(e.lower, e.n1);
  return e;
}

Matrix koszul_d(int n, int p) {
  if (p < 1 || p > n) throw InputError("koszul_d: degree out of range");
  auto rows = subsets(n, p - 1), cols = subsets(n, p);
  Matrix d(rows.size(), cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (int j = 0; j < p; ++j) {
      std::vector<int> s = cols[c];
      s.erase(s.begin() + j);
      size_t r = static_cast<size_t>(std::find(rows.begin(), rows.end(), s) - rows.begin());
      d(r, c) = (j % 2 == 0) ? 1 : -1;
    }
  return d;
}

Matrix wedge_left(const Vec& y, int p) {
  int n = static_cast<int>(y.size());
  if (p < 1 || p > n) throw InputError("wedge_left: degree out of range");
  auto rows = subsets(n, p), cols = subsets(n, p - 1);
  Matrix w(rows.size(), cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (int a = 0; a < n; ++a) {
      if (y[a].is_zero()) continue;
      const auto& s = cols[c];
      if (std::find(s.begin(), s.end(), a) != s.end()) continue;
      long below = std::count_if(s.begin(), s.end(), [&](int x) { return x < a; });
      std::vector<int> u = s;
      u.insert(std::lower_bound(u.begin(), u.end(), a), a);
      size_t r = static_cast<size_t>(std::find(rows.begin(), rows.end(), u) - rows.begin());
      w(r, c) += below % 2 == 0 ? y[a] : -y[a];
    }
  return w;
}

std::vector<Matrix> hook_f_matrices(int n, const FieldElem& alpha) {
  FieldElem nn(n * n);
  FieldElem c = alpha * FieldElem(n - 2) / nn, r = -(alpha * FieldElem(2) / nn);
  std::vector<Matrix> out;
  for (int k = 0; k + 1 < n; ++k) {
    Matrix m(n, n);
    for (int col = 0; col < n; ++col) {
      int img = col == k ? k + 1 : (col == k + 1 ? k : col);
      m(img, col) += 1;
      FieldElem add = (col == k || col == k + 1) ? c : r;
      for (int row = 0; row < n; ++row) m(row, col) += add;
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

Vec hook_y(int n, int k, const FieldElem& alpha) {
  Vec y(n, -(alpha * FieldElem(2) / FieldElem(n * n)));
  y[k] += alpha / FieldElem(n);
  y[k + 1] += alpha / FieldElem(n);
  return y;
}

}  // namespace

std::vector<Matrix> hook_g_matrices(int n, const FieldElem& alpha) {
  std::vector<Matrix> out;
  SymRep P = permutation_rep(n);
  for (int k = 0; k + 1 < n; ++k) {
    Vec y = hook_y(n, k, alpha);
    Matrix m = P.gens[k];
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row) m(row, col) += y[row];
    out.push_back(std::move(m));
  }
  return out;
}

HookFamily hook_family(int n, int p, const FieldElem& alpha) {
  if (n < 2) throw InputError("hook_family needs n >= 2");
  if (p < 0 || p > n - 1) throw InputError("hook_family: p must be in 0..n-1");
  HookFamily h;
  h.n = n;
  h.p = p;
  h.alpha = alpha;
  SymRep P = permutation_rep(n);
  auto fE = hook_f_matrices(n, alpha);
  for (int k = 0; k + 1 < n; ++k) {
    h.f.push_back(compound(fE[k], p));
    Matrix g = compound(P.gens[k], p);
    if (p >= 1) g += wedge_left(hook_y(n, k, alpha), p) * koszul_d(n, p);
    h.g.push_back(std::move(g));
  }
  for (const auto& f : braid_relation_failures(h.f)) h.failures.push_back("f: " + f);
  for (const auto& f : braid_relation_failures(h.g)) h.failures.push_back("g: " + f);
  return h;
}

bool transvection_guard(const VarietyPoint& p) {
  if (p.M.n < 3) throw InputError("transvection_guard needs n >= 3");
  const Matrix& t = p.tau();
  if (rank(t) != 1 || !(t * t).is_zero()) return false;
  if (!commutator(p.rep.t(1, 2), p.rep.t(2, 3)).is_zero())
    throw ResidualError("rank-one nilpotent tau with [t12, t23] != 0");
  return true;
}

std::pair<Rational, long> sqrt_decompose(const Rational& r) {
  if (sgn(r) == 0) return {0, 1};
  mpz_class m = r.get_num() * r.get_den();
  int sign = sgn(m) < 0 ? -1 : 1;
  m = abs(m);
  if (m > mpz_class("1000000000000")) throw InputError("sqrt_decompose: radicand too large");
  unsigned long long x = m.get_ui(), s = 1, d = 1;
  for (unsigned long long p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      x /= p;
      if (x % p == 0) {
        x /= p;
        s *= p;
      } else {
        d *= p;
      }
    }
  d *= x;
  Rational c(mpz_class(static_cast<unsigned long>(s)), r.get_den());
  c.canonicalize();
  return {c, sign * static_cast<long>(d)};
}

SymRep s3_orthogonal_std_plus_triv() {
  FieldElem h(1, 2), r = FieldElem::quad(0, Rational(1, 2), 3);
  SymRep M;
  M.n = 3;
  M.gens.push_back(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  M.gens.push_back(Matrix{{1, 0, 0}, {0, -h, r}, {0, r, h}});
  M.form.assign(3, FieldElem(1));
  M.label = {{Partition{3}, 1}, {Partition{2, 1}, 1}};
  return M;
}

Matrix s3_std_plus_triv_tau(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d,
                            const FieldElem& l) {
  return Matrix{{a, b, 0}, {c, d, 0}, {0, 0, l}};
}

SymRep s3_square_module() {
  return direct_sum(direct_sum(trivial_rep(3), irrep({1, 1, 1})), irrep({2, 1}));
}

Matrix s3_square_tau(const FieldElem& x, const FieldElem& y, const FieldElem& u, const FieldElem& v) {
  // basis (trivial, sign, T1, T2); s_1 = diag(1,-1,1,-1)
  Matrix t(4, 4);
  FieldElem a = (x + y) / FieldElem(2);
  t(0, 0) = a;
  t(0, 2) = 1;
  t(2, 0) = u / FieldElem(16);
  t(2, 2) = x;
  t(1, 1) = a;
  t(1, 3) = 1;
  t(3, 1) = v / FieldElem(16);
  t(3, 3) = y;
  return t;
}

DeclaredSpectrum s3_square_spectrum(const FieldElem& x, const FieldElem& y, const FieldElem& u, const FieldElem& v) {
  FieldElem dxy = (x - y) * (x - y);
  auto [c1, d1] = sqrt_decompose((dxy + u).to_rational());
  auto [c2, d2] = sqrt_decompose((dxy + v).to_rational());
  DeclaredSpectrum s;
  auto addrad = [&](long d) {
    if (d != 1 && d != 0 && std::find(s.radicands.begin(), s.radicands.end(), d) == s.radicands.end())
      s.radicands.push_back(d);
  };
  for (const auto& e : {x, y, u, v}) addrad(e.is_rational() ? 1 : e.radicand());
  addrad(d1);
  addrad(d2);
  auto root = [&](const Rational& c, long d) {
    if (d == 1) return MultiQuad::embed(s.radicands, FieldElem(c));
    return MultiQuad::embed(s.radicands, FieldElem::quad(0, c, d));
  };
  FieldElem q(1, 4);
  MultiQuad b1 = MultiQuad::embed(s.radicands, (FieldElem(3) * x + y) * q);
  MultiQuad b2 = MultiQuad::embed(s.radicands, (FieldElem(3) * y + x) * q);
  MultiQuad r1 = root(c1 / 4, d1), r2 = root(c2 / 4, d2);
  for (const auto& e : {b1 + r1, b1 - r1, b2 + r2, b2 - r2}) s.eigenvalues.push_back(e.coords());
  return s;
}

Matrix adapted_basis(int n) {
  Matrix B(n, n);
  for (int i = 0; i < n; ++i) B(i, 0) = 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) B(i, j) = 1;
    B(j, j) = -j;
  }
  return B;
}

SymRep adapted_permutation_module(int n) {
  if (n < 2) throw InputError("adapted_permutation_module needs n >= 2");
  Matrix B = adapted_basis(n), Bi = *inverse(B);
  SymRep P = permutation_rep(n), M;
  M.n = n;
  for (const auto& g : P.gens) M.gens.push_back(Bi * g * B);
  M.form.push_back(FieldElem(n));
  for (int j = 1; j < n; ++j) M.form.push_back(FieldElem(j * (j + 1)));
  M.label = P.label;
  return M;
}

VarietyPoint hooks_chain(int n, const FieldElem& alpha, const FieldElem& lambda) {
  if (lambda.is_zero()) throw InputError("hooks_chain needs lambda != 0");
  Matrix B = adapted_basis(n), Bi = *inverse(B);
  Matrix P12(n, n);
  P12(0, 0) = 1;
  P12(1, 1) = 1;
  Matrix tau = Bi * P12 * B * (alpha / lambda);
  return make_point(adapted_permutation_module(n), tau, {1, static_cast<size_t>(n - 1)});
}

std::vector<std::string> family_names() {
  return {"hecke", "s3_std", "s3_std_plus_triv", "s3_std_plus_triv_orthogonal", "s3_square", "hooks_chain"};
}

VarietyPoint family_catalog(const std::string& name, const FamilyParams& params) {
  if (name == "hecke") {
    auto it = params.find("partition");
    if (it == params.end()) throw InputError("missing family parameter 'partition'");
    return hecke_point(parse_partition(it->second), param(params, "alpha"), param(params, "beta"));
  }
  if (name == "s3_std") {
    SymRep M = irrep({2, 1});
    return make_point(M, Matrix::diag({param(params, "a"), param(params, "b")}));
  }
  if (name == "s3_std_plus_triv" || name == "s3_std_plus_triv_orthogonal") {
    SymRep M = name == "s3_std_plus_triv" ? direct_sum(trivial_rep(3), irrep({2, 1})) : s3_orthogonal_std_plus_triv();
    FieldElem a = param(params, "a"), b = param(params, "b"), c = param(params, "c"), d = param(params, "d");
    FieldElem l = param_or(params, "l", FieldElem(2) * a - d);
    return make_point(M, s3_std_plus_triv_tau(a, b, c, d, l), {1, 2});
  }
  if (name == "s3_square") {
    FieldElem u = param(params, "u"), v = param(params, "v");
    if (u.is_zero() || v.is_zero()) throw InputError("s3_square needs u, v nonzero");
    return make_point(s3_square_module(), s3_square_tau(param(params, "x"), param(params, "y"), u, v), {1, 1, 2});
  }
  if (name == "hooks_chain")
    return hooks_chain(int_param(params, "n"), param(params, "alpha"), param_or(params, "lambda", FieldElem(1)));
  throw InputError("unknown family '" + name + "'");
}

}  // namespace braidrep
