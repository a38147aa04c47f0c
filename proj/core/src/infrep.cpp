#include "braidrep/infrep.hpp"

#include <random>

namespace braidrep {

namespace {

size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // row-major over i < j
  size_t idx = 0;
  for (int a = 1; a < i; ++a) idx += n - a;
  return idx + (j - i - 1);
}

Perm sending_12_to(int n, int i, int j) {
  std::vector<int> img;
  img.push_back(i);
  img.push_back(j);
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j) img.push_back(k);
  return Perm::from_images(img);
}

}  // namespace

InfRep::InfRep(SymRep base, Matrix tau) : base_(std::move(base)), tau_(std::move(tau)) {
  if (tau_.rows() != base_.dim() || tau_.cols() != base_.dim())
    throw InputError("tau must be a square matrix of the module dimension");
  if (base_.n < 2) throw InputError("need at least two strands");
  if (static_cast<int>(base_.gens.size()) != base_.n - 1) throw InputError("need n-1 generators");
  auto tab = std::make_shared<std::vector<Matrix>>();
  int n = base_.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) tab->push_back(act(base_, sending_12_to(n, i, j), tau_));
  ttab_ = std::move(tab);
}

const Matrix& InfRep::t(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > n() || j > n()) throw InputError("t_ij needs 1 <= i != j <= n");
  return (*ttab_)[pair_index(n(), i, j)];
}

Matrix t_image(const InfRep& r, int i, int j) { return r.t(i, j); }

Matrix y_element(const InfRep& r, int k) {
  if (k < 1 || k > r.n()) throw InputError("Y_k index out of range");
  Matrix y(r.dim(), r.dim());
  for (int i = 1; i < k; ++i) y += r.t(i, k);
  return y;
}

Matrix t_total(const InfRep& r) {
  Matrix t(r.dim(), r.dim());
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j) t += r.t(i, j);
  return t;
}

Matrix act(const SymRep& m, const Perm& p, const Matrix& x) {
  return perm_matrix(m, p) * x * perm_matrix(m, p.inverse());
}

Matrix C1(const SymRep& m, const Matrix& x) {
  if (m.n < 3) return Matrix(x.rows(), x.cols());
  Matrix y = act(m, Perm::transposition(m.n, 1, 3), x) + act(m, Perm::transposition(m.n, 2, 3), x);
  return commutator(x, y);
}

Matrix C2(const SymRep& m, const Matrix& x) {
  if (m.n < 4) return Matrix(x.rows(), x.cols());
  Perm p = Perm::transposition(m.n, 1, 3) * Perm::transposition(m.n, 2, 4);
  return commutator(x, act(m, p, x));
}

bool ValidationReport::c_zero() const {
  for (const auto& r : c_residuals)
    if (!r.zero()) return false;
  return true;
}

bool ValidationReport::valid() const {
  if (!in_commutant || !c_zero()) return false;
  for (const auto& r : relations)
    if (!r.zero()) return false;
  return true;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto* v : {&commutant, &c_residuals, &relations})
    for (const auto& r : *v)
      if (!r.zero()) out.push_back(r.name);
  return out;
}

ValidationReport validate(const InfRep& r) {
  ValidationReport rep;
  int n = r.n();
  for (int i : young_generators(n > 2 ? std::vector<int>{2, n - 2} : std::vector<int>{2})) {
    Residual res{"[tau, s" + std::to_string(i) + "]", commutator(r.tau(), r.s(i))};
    if (!res.zero()) rep.in_commutant = false;
    rep.commutant.push_back(std::move(res));
  }
  rep.c_residuals.push_back({"C1(tau)", C1(r.base(), r.tau())});
  rep.c_residuals.push_back({"C2(tau)", C2(r.base(), r.tau())});
  auto nm = [](int i, int j) { return "t" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          if (std::make_pair(k, l) < std::make_pair(i, j)) continue;
          rep.relations.push_back({"[" + nm(i, j) + "," + nm(k, l) + "]", commutator(r.t(i, j), r.t(k, l))});
        }
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        rep.relations.push_back({"[" + nm(i, j) + "," + nm(i, k) + "+" + nm(j, k) + "]",
                                 commutator(r.t(i, j), r.t(i, k) + r.t(j, k))});
      }
      // S_n-equivariance of the derived family
      for (int s = 1; s < n; ++s) {
        Perm p = Perm::adjacent(n, s);
        rep.relations.push_back({"s" + std::to_string(s) + "." + nm(i, j) + " - " + nm(p(i), p(j)),
                                 act(r.base(), p, r.t(i, j)) - r.t(p(i), p(j))});
      }
    }
  return rep;
}

InfRep tensor(const InfRep& a, const InfRep& b) {
  if (a.n() != b.n()) throw InputError("tensor of representations on different strand counts");
  Matrix tau = kron(a.tau(), Matrix::identity(b.dim())) + kron(Matrix::identity(a.dim()), b.tau());
  return InfRep(tensor(a.base(), b.base()), tau);
}

InfRep dual(const InfRep& a) { return InfRep(dual(a.base()), -a.tau().transpose()); }

InfRep direct_sum(const InfRep& a, const InfRep& b) {
  if (a.n() != b.n()) throw InputError("direct sum of representations on different strand counts");
  return InfRep(direct_sum(a.base(), b.base()), block_diag(a.tau(), b.tau()));
}

InfRep twist(const InfRep& a, const FieldElem& alpha) { return InfRep(a.base(), a.tau() * alpha); }

InfRep restrict(const InfRep& a, int m) {
  if (m < 2 || m > a.n()) throw InputError("restriction needs 2 <= m <= n");
  return InfRep(restrict(a.base(), m), a.tau());
}

std::optional<Vec> essential_purity_certificate(const InfRep& r) {
  size_t N = r.dim();
  std::vector<Vec> cols;
  Matrix p = Matrix::identity(N);
  for (size_t k = 0; k < N; ++k) {
    cols.push_back(vectorize(p));
    p = p * r.tau();
  }
  if (r.n() < 2) return std::nullopt;
  return solve(Matrix::from_columns(cols), vectorize(r.s(1)));
}

bool is_essentially_pure(const InfRep& r) { return essential_purity_certificate(r).has_value(); }

std::string to_string(SimplicialStatus s) {
  switch (s) {
    case SimplicialStatus::simplex: return "simplex";
    case SimplicialStatus::affinely_dependent: return "affinely dependent";
    case SimplicialStatus::not_diagonalizable: return "not diagonalizable";
    case SimplicialStatus::spectrum_mismatch: return "declared spectrum does not match";
  }
  return "?";
}

bool affinely_independent(const std::vector<std::vector<Rational>>& pts) {
  if (pts.size() <= 1) return true;
  size_t dim = pts[0].size();
  Matrix m(pts.size() - 1, dim);
  for (size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].size() != dim) throw InputError("points of different dimension");
    for (size_t j = 0; j < dim; ++j) m(i - 1, j) = FieldElem(pts[i][j] - pts[0][j]);
  }
  return rank(m) == pts.size() - 1;
}

namespace {

using MQMatrix = std::vector<std::vector<MultiQuad>>;

MQMatrix mq_mul(const MQMatrix& a, const MQMatrix& b, const std::vector<long>& rad) {
  size_t n = a.size();
  MQMatrix c(n, std::vector<MultiQuad>(n, MultiQuad(rad)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

bool mq_zero(const MQMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace

SimplicialResult is_simplicial(const InfRep& r, const std::vector<long>& radicands,
                               const std::vector<std::vector<Rational>>& eigenvalues) {
  const Matrix& tau = r.tau();
  size_t N = r.dim();
  // diagonalizable iff the squarefree part of the characteristic polynomial kills tau
  Poly cp = charpoly(tau);
  Poly q, rem;
  Poly::divmod(cp, gcd(cp, cp.derivative()), q, rem);
  if (!q.eval(tau).is_zero()) return {SimplicialStatus::not_diagonalizable, "minimal polynomial has a repeated root"};
  size_t basis = size_t(1) << radicands.size();
  for (const auto& e : eigenvalues)
    if (e.size() != basis) throw InputError("eigenvalue coordinate vector has the wrong length");
  if (static_cast<int>(eigenvalues.size()) != q.degree())
    return {SimplicialStatus::spectrum_mismatch,
            "declared " + std::to_string(eigenvalues.size()) + " eigenvalues, tau has " +
                std::to_string(q.degree()) + " distinct ones"};
  MQMatrix t(N, std::vector<MultiQuad>(N, MultiQuad(radicands)));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) t[i][j] = MultiQuad::embed(radicands, tau(i, j));
  auto shifted = [&](size_t k) {
    MQMatrix m = t;
    MultiQuad mu(radicands, eigenvalues[k]);
    for (size_t i = 0; i < N; ++i) m[i][i] = m[i][i] - mu;
    return m;
  };
  // every declared value must be needed in prod (tau - mu_i) = 0
  for (size_t skip = 0; skip <= eigenvalues.size(); ++skip) {
    MQMatrix p(N, std::vector<MultiQuad>(N, MultiQuad(radicands)));
    for (size_t i = 0; i < N; ++i) p[i][i] = MultiQuad(radicands, [&] {
      std::vector<Rational> one(basis);
      one[0] = 1;
      return one;
    }());
    for (size_t k = 0; k < eigenvalues.size(); ++k)
      if (k != skip) p = mq_mul(p, shifted(k), radicands);
    bool z = mq_zero(p);
    if (skip == eigenvalues.size() && !z)
      return {SimplicialStatus::spectrum_mismatch, "product of (tau - mu_i) is not zero"};
    if (skip < eigenvalues.size() && z)
      return {SimplicialStatus::spectrum_mismatch, "declared eigenvalue " + std::to_string(skip) + " is not needed"};
  }
  if (!affinely_independent(eigenvalues)) return {SimplicialStatus::affinely_dependent, ""};
  return {SimplicialStatus::simplex, ""};
}

AgregatingResult is_agregating(const InfRep& r, uint64_t seed, int trials) {
  TFamily ts;
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j) ts.push_back({{i, j}, r.t(i, j)});
  return is_agregating(ts, r.dim(), seed, trials);
}

AgregatingResult is_agregating(const TFamily& ts, size_t dim, uint64_t seed, int trials) {
  if (trials < 1) throw InputError("trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  AgregatingResult res;
  for (int t = 0; t < trials; ++t) {
    res.trials_used = t + 1;
    Matrix m(dim, dim);
    std::vector<std::pair<std::pair<int, int>, Rational>> coeffs;
    for (const auto& [ij, x] : ts) {
      Rational c(dist(rng));
      coeffs.push_back({ij, c});
      if (c != 0) m += x * FieldElem(c);
    }
    Poly cp = charpoly(m);
    if (is_squarefree(cp)) {
      res.found = true;
      res.coefficients = std::move(coeffs);
      res.element = std::move(m);
      res.charpoly = std::move(cp);
      return res;
    }
  }
  return res;
}

std::string to_string(FormType t) {
  switch (t) {
    case FormType::orthogonal: return "orthogonal";
    case FormType::symplectic: return "symplectic";
    case FormType::unitary: return "unitary";
    case FormType::none: return "none";
  }
  return "?";
}

Matrix adjoint(const Matrix& x, const Matrix& beta) {
  auto bi = inverse(beta);
  if (!bi) throw InputError("degenerate bilinear form");
  return *bi * x.transpose() * beta;
}

FormReport form_type(const InfRep& r, const Matrix& beta) {
  if (!inverse(beta)) throw InputError("degenerate bilinear form");
  FormReport f;
  f.symmetric = beta.transpose() == beta;
  f.skew = beta.transpose() == -beta;
  f.sn_isometric = true;
  for (const auto& g : r.base().gens)
    if (g.transpose() * beta * g != beta) f.sn_isometric = false;
  Matrix ad = adjoint(r.tau(), beta);
  f.tau_selfadjoint = ad == r.tau();
  f.tau_antiselfadjoint = ad == -r.tau();
  if (!f.sn_isometric) return f;
  if (f.symmetric && f.tau_selfadjoint)
    f.type = FormType::unitary;
  else if (f.symmetric && f.tau_antiselfadjoint)
    f.type = FormType::orthogonal;
  else if (f.skew && f.tau_antiselfadjoint)
    f.type = FormType::symplectic;
  return f;
}

LieClosure lie_closure(const InfRep& r) {
  size_t N = r.dim();
  SpanBuilder sb(N * N);
  LieClosure lc;
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j)
      if (sb.add(vectorize(r.t(i, j)))) lc.basis.push_back(r.t(i, j));
  for (size_t a = 0; a < lc.basis.size(); ++a)
    for (size_t b = 0; b < a; ++b) {
      Matrix c = commutator(lc.basis[a], lc.basis[b]);
      if (sb.add(vectorize(c))) lc.basis.push_back(std::move(c));
    }
  lc.dim = lc.basis.size();
  // center: x = sum c_k b_k with [x, b_l] = 0 for all l
  if (lc.dim) {
    Matrix sys(lc.dim * N * N, lc.dim);
    for (size_t k = 0; k < lc.dim; ++k)
      for (size_t l = 0; l < lc.dim; ++l) {
        Vec v = vectorize(commutator(lc.basis[k], lc.basis[l]));
        for (size_t e = 0; e < v.size(); ++e) sys(l * N * N + e, k) = v[e];
      }
    for (const auto& c : nullspace(sys)) {
      Matrix z(N, N);
      for (size_t k = 0; k < lc.dim; ++k)
        if (!c[k].is_zero()) z += lc.basis[k] * c[k];
      lc.center_basis.push_back(std::move(z));
    }
  }
  Matrix T = t_total(r);
  lc.t_total_central = true;
  for (const auto& b : lc.basis)
    if (!commutator(T, b).is_zero()) lc.t_total_central = false;
  return lc;
}

QuotientFlags quotient_flags(const InfRep& r) {
  QuotientFlags f;
  f.center_kills = t_total(r).is_zero();
  f.hurwitz = y_element(r, r.n()).is_zero();
  f.z_times_sn = true;
  for (const auto& g : r.base().gens)
    if (!commutator(r.tau(), g).is_zero()) f.z_times_sn = false;
  f.enhanced_sym = r.n() < 3 || commutator(r.t(1, 2), r.t(2, 3)).is_zero();
  return f;
}

size_t linear_independence_dim(const InfRep& r) {
  SpanBuilder sb(r.dim() * r.dim());
  for (int i = 1; i <= r.n(); ++i)
    for (int j = i + 1; j <= r.n(); ++j) sb.add(vectorize(r.t(i, j)));
  return sb.dim();
}

size_t generated_algebra_dim(const std::vector<Matrix>& gens, size_t n) {
  SpanBuilder sb(n * n);
  std::vector<Matrix> basis{Matrix::identity(n)};
  sb.add(vectorize(basis[0]));
  for (size_t a = 0; a < basis.size(); ++a)
    for (const auto& g : gens) {
      Matrix p = basis[a] * g;
      if (sb.add(vectorize(p))) basis.push_back(std::move(p));
      if (sb.dim() == n * n) return sb.dim();
    }
  return sb.dim();
}

}  // namespace braidrep
