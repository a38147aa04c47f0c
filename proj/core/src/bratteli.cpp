#include "braidrep/bratteli.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace braidrep {

namespace {

Matrix column_space(const Matrix& E) {
  auto rr = rref(E);
  std::vector<Vec> cols;
  for (size_t p : rr.pivots) cols.push_back(E.column(p));
  if (cols.empty()) return Matrix(E.rows(), 0);
  return Matrix::from_columns(cols);
}

// Y with B Y = X B; B has full column rank and spans an X-stable subspace
Matrix restrict_to(const Matrix& B, const Matrix& X) {
  size_t k = B.cols();
  Matrix XB = X * B, Y(k, k);
  for (size_t c = 0; c < k; ++c) {
    auto y = solve(B, XB.column(c));
    if (!y) throw InputError("subspace is not stable under the chain");
    for (size_t r = 0; r < k; ++r) Y(r, c) = (*y)[r];
  }
  return Y;
}

std::optional<FieldElem> scalar_of(const Matrix& m) {
  if (m.rows() == 0) return std::nullopt;
  FieldElem c = m(0, 0);
  if (m != Matrix::scalar(m.rows(), c)) return std::nullopt;
  return c;
}

Matrix t_sum(const InfRep& r, int m) {
  Matrix T(r.dim(), r.dim());
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) T += r.t(i, j);
  return T;
}

// basis of the unital algebra generated by gens
std::vector<Matrix> algebra_basis(const std::vector<Matrix>& gens, size_t N) {
  SpanBuilder sb(N * N);
  std::vector<Matrix> basis;
  auto push = [&](const Matrix& m) {
    if (sb.add(vectorize(m))) basis.push_back(m);
  };
  push(Matrix::identity(N));
  for (size_t k = 0; k < basis.size(); ++k)
    for (const auto& g : gens) push(basis[k] * g);
  return basis;
}

// primitive central idempotents of the algebra generated by gens, split over Q
std::vector<Matrix> central_idempotents(const std::vector<Matrix>& gens, size_t N) {
  auto A = algebra_basis(gens, N);
  size_t m = A.size();
  Matrix sys(gens.size() * N * N, m);
  for (size_t k = 0; k < m; ++k) {
    size_t row = 0;
    for (const auto& g : gens) {
      Matrix c = commutator(A[k], g);
      for (const auto& x : c.data()) sys(row++, k) = x;
    }
  }
  std::vector<Matrix> center;
  for (const auto& v : nullspace(sys)) {
    Matrix z(N, N);
    for (size_t k = 0; k < m; ++k)
      if (!v[k].is_zero()) z += A[k] * v[k];
    center.push_back(std::move(z));
  }
  for (long shift = 1; shift <= 8; ++shift) {
    Matrix z(N, N);
    for (size_t k = 0; k < center.size(); ++k) z += center[k] * FieldElem(static_cast<long>(k) * shift + 1);
    Poly mp = minimal_polynomial(z);
    auto roots = rational_roots(mp);
    if (roots.size() != center.size() || mp.degree() != static_cast<int>(roots.size())) continue;
    std::vector<Matrix> out;
    for (const auto& c : roots) {
      Matrix P = Matrix::identity(N);
      for (const auto& c2 : roots)
        if (c2 != c) P = P * (z - Matrix::scalar(N, FieldElem(c2))) * FieldElem(Rational(1) / (c - c2));
      out.push_back(std::move(P));
    }
    return out;
  }
  throw InputError("the center of the chain algebra does not split over Q");
}

size_t isqrt_exact(size_t k) {
  size_t m = 0;
  while ((m + 1) * (m + 1) <= k) ++m;
  if (m * m != k) throw InputError("component is not isotypic for the chain");
  return m;
}

Color scalar_color(const FieldElem& c) { return Color{c}; }

}  // namespace

bool BratteliDiagram::multiplicity_free() const {
  for (const auto& lvl : edges)
    for (const auto& e : lvl)
      if (e.multiplicity != 1) return false;
  return true;
}

std::vector<size_t> BratteliDiagram::parents(int level, size_t v) const {
  std::vector<size_t> out;
  for (const auto& e : edges.at(level - 2))
    if (e.to == v) out.push_back(e.from);
  return out;
}

std::vector<std::string> BratteliDiagram::invariant_failures() const {
  std::vector<std::string> f;
  if (levels.empty()) return {"empty diagram"};
  if (levels[0].size() != 1 || levels[0][0].dim != 1) f.push_back("source O must be a single 1-dimensional vertex");
  if (edges.size() + 1 != levels.size()) f.push_back("edge levels do not match vertex levels");
  for (size_t k = 0; k < edges.size() && k + 1 < levels.size(); ++k) {
    std::vector<size_t> in(levels[k + 1].size(), 0);
    for (const auto& e : edges[k]) {
      if (e.from >= levels[k].size() || e.to >= levels[k + 1].size()) {
        f.push_back("edge out of range at level " + std::to_string(k + 1));
        continue;
      }
      in[e.to] += e.multiplicity * levels[k][e.from].dim;
    }
    for (size_t v = 0; v < in.size(); ++v)
      if (in[v] != levels[k + 1][v].dim)
        f.push_back("dimension at level " + std::to_string(k + 2) + " vertex " + levels[k + 1][v].label);
  }
  return f;
}

BratteliDiagram build_from_chain(const InfRep& r) {
  if (!is_essentially_pure(r)) throw InputError("build_from_chain needs an essentially pure representation");
  int n = r.n();
  size_t N = r.dim();
  BratteliDiagram d;
  BratteliVertex O;
  O.label = "O";
  O.dim = 1;
  O.multiplicity = N;
  O.color = scalar_color(0);
  O.basis = Matrix::identity(N);
  d.levels.push_back({O});
  std::vector<std::vector<Matrix>> proj{{Matrix::identity(N)}};

  for (int lv = 2; lv <= n; ++lv) {
    Matrix T = t_sum(r, lv);
    std::vector<Matrix> gens;
    for (int i = 1; i < lv; ++i) gens.push_back(r.s(i));
    gens.push_back(r.tau());
    std::vector<BratteliVertex> verts;
    std::vector<Matrix> ps;
    for (auto& P : central_idempotents(gens, N)) {
      BratteliVertex v;
      v.basis = column_space(P);
      auto Tc = scalar_of(restrict_to(v.basis, T));
      if (!Tc) throw InputError("T_" + std::to_string(lv) + " is not scalar on a component");
      v.color = scalar_color(*Tc);
      std::vector<Matrix> rg;
      for (const auto& g : gens) rg.push_back(restrict_to(v.basis, g));
      size_t k = v.basis.cols();
      v.multiplicity = isqrt_exact(commutant(rg, k).size());
      v.dim = k / v.multiplicity;
      SymRep sr;
      sr.n = lv;
      sr.gens.assign(rg.begin(), rg.end() - 1);
      sr.form.assign(k, FieldElem(1));
      Label lab = decompose(sr);
      v.label = lab.size() == 1 ? partition_str(lab[0].first) : "T=" + Tc->str();
      verts.push_back(std::move(v));
      ps.push_back(std::move(P));
    }
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b)
        if (verts[a].label == verts[b].label) {
          for (auto* v : {&verts[a], &verts[b]})
            if (v->label.find('|') == std::string::npos) v->label += "|" + (*v->color)[0].str();
        }
    Matrix Y = T - t_sum(r, lv - 1);
    std::vector<BratteliEdge> es;
    for (size_t q = 0; q < verts.size(); ++q)
      for (size_t p = 0; p < d.levels.back().size(); ++p) {
        Matrix I = column_space(proj.back()[p] * verts[q].basis);
        if (I.cols() == 0) continue;
        BratteliEdge e;
        e.from = p;
        e.to = q;
        size_t unit = verts[q].multiplicity * d.levels.back()[p].dim;
        if (I.cols() % unit != 0) throw InputError("inconsistent branching at level " + std::to_string(lv));
        e.multiplicity = I.cols() / unit;
        auto yc = scalar_of(restrict_to(I, Y));
        if (!yc) throw InputError("Y_" + std::to_string(lv) + " is not scalar on an edge component");
        e.color = scalar_color(*yc);
        e.basis = std::move(I);
        es.push_back(std::move(e));
      }
    d.levels.push_back(std::move(verts));
    d.edges.push_back(std::move(es));
    proj.push_back(std::move(ps));
  }
  for (auto& lvl : d.levels)
    for (auto& v : lvl)
      if (v.color) {
        int lv = static_cast<int>(&lvl - &d.levels[0]) + 1;
        if (lv >= 2) v.z = Color{(*v.color)[0] * FieldElem(2) / FieldElem(static_cast<long>(lv * (lv - 1)))};
      }
  return d;
}

BratteliDiagram formal_coloring(const BratteliDiagram& in, const std::vector<Color>& level2) {
  if (!in.multiplicity_free()) throw InputError("formal coloring needs a multiplicity-free diagram");
  auto bad = in.invariant_failures();
  if (!bad.empty()) throw InputError("invalid diagram: " + bad.front());
  if (in.n() < 2) throw InputError("diagram needs at least two levels");
  if (level2.size() != in.levels[1].size()) throw InputError("one color per level-2 vertex is required");
  size_t w = level2.empty() ? 0 : level2[0].size();
  for (const auto& c : level2)
    if (c.size() != w) throw InputError("level-2 colors must have a common length");
  BratteliDiagram d = in;
  d.levels[0][0].color = Color(w);
  d.levels[0][0].z.reset();
  for (size_t v = 0; v < level2.size(); ++v) {
    d.levels[1][v].color = level2[v];
    d.levels[1][v].z = level2[v];
  }
  for (int lv = 3; lv <= d.n(); ++lv) {
    auto& cur = d.levels[lv - 1];
    const auto& prev = d.levels[lv - 2];
    for (auto& v : cur) v.z = Color(w);
    for (const auto& e : d.edges[lv - 2]) {
      FieldElem wt = FieldElem(static_cast<long>(prev[e.from].dim)) / FieldElem(static_cast<long>(cur[e.to].dim));
      for (size_t k = 0; k < w; ++k) FieldElem::fma((*cur[e.to].z)[k], wt, (*prev[e.from].z)[k]);
    }
    FieldElem half = FieldElem(static_cast<long>(lv * (lv - 1))) / FieldElem(2);
    for (auto& v : cur) {
      Color t(w);
      for (size_t k = 0; k < w; ++k) t[k] = (*v.z)[k] * half;
      v.color = std::move(t);
    }
  }
  for (size_t k = 0; k < d.edges.size(); ++k)
    for (auto& e : d.edges[k]) {
      const Color& tq = *d.levels[k + 1][e.to].color;
      const Color& tp = *d.levels[k][e.from].color;
      Color y(w);
      for (size_t i = 0; i < w; ++i) y[i] = tq[i] - tp[i];
      e.color = std::move(y);
    }
  return d;
}

std::vector<Rational> barycentric_weights(const BratteliDiagram& d, int level, size_t v) {
  if (level < 2 || level > d.n()) throw InputError("weights need 2 <= level <= n");
  size_t m = d.levels[1].size();
  std::vector<std::vector<Rational>> cur(m, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < m; ++i) cur[i][i] = 1;
  for (int lv = 3; lv <= level; ++lv) {
    std::vector<std::vector<Rational>> next(d.levels[lv - 1].size(), std::vector<Rational>(m, Rational(0)));
    for (const auto& e : d.edges[lv - 2]) {
      Rational wt(static_cast<long>(e.multiplicity * d.levels[lv - 2][e.from].dim),
                  static_cast<long>(d.levels[lv - 1][e.to].dim));
      wt.canonicalize();
      for (size_t k = 0; k < m; ++k) next[e.to][k] += wt * cur[e.from][k];
    }
    cur = std::move(next);
  }
  return cur.at(v);
}

bool same_coloring(const BratteliDiagram& a, const BratteliDiagram& b) {
  if (a.levels.size() != b.levels.size() || a.edges.size() != b.edges.size()) return false;
  for (size_t k = 0; k < a.levels.size(); ++k) {
    if (a.levels[k].size() != b.levels[k].size()) return false;
    for (size_t v = 0; v < a.levels[k].size(); ++v) {
      const auto &x = a.levels[k][v], &y = b.levels[k][v];
      if (x.dim != y.dim || !x.color || !y.color || *x.color != *y.color) return false;
    }
  }
  for (size_t k = 0; k < a.edges.size(); ++k) {
    if (a.edges[k].size() != b.edges[k].size()) return false;
    for (size_t i = 0; i < a.edges[k].size(); ++i) {
      const auto &x = a.edges[k][i], &y = b.edges[k][i];
      if (x.from != y.from || x.to != y.to) return false;
      if (x.color && y.color && *x.color != *y.color) return false;
    }
  }
  return true;
}

std::vector<std::vector<Color>> path_colors(const BratteliDiagram& d, int level) {
  if (level < 1 || level > d.n()) throw InputError("path level out of range");
  std::vector<std::vector<Color>> out;
  std::vector<Color> stack;
  std::function<void(int, size_t)> walk = [&](int lv, size_t v) {
    const auto& vert = d.levels[lv - 1][v];
    if (!vert.color) throw InputError("path colors need a colored diagram");
    stack.push_back(*vert.color);
    if (lv == 1) {
      out.emplace_back(stack.rbegin(), stack.rend());
    } else {
      for (const auto& e : d.edges[lv - 2])
        if (e.to == v)
          for (size_t m = 0; m < e.multiplicity; ++m) walk(lv - 1, e.from);
    }
    stack.pop_back();
  };
  for (size_t v = 0; v < d.levels[level - 1].size(); ++v) walk(level, v);
  return out;
}

InjectivityVerdict injectivity_agregation(const BratteliDiagram& colored, const InfRep& r, uint64_t seed,
                                          int trials) {
  if (!colored.multiplicity_free()) throw InputError("injectivity needs a multiplicity-free diagram");
  InjectivityVerdict v;
  auto paths = path_colors(colored, colored.n());
  v.paths = paths.size();
  std::sort(paths.begin(), paths.end(), [](const std::vector<Color>& a, const std::vector<Color>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a[i] == b[i]) continue;
      for (size_t k = 0; k < std::min(a[i].size(), b[i].size()); ++k) {
        if (a[i][k] == b[i][k]) continue;
        return a[i][k].str() < b[i][k].str();
      }
      return a[i].size() < b[i].size();
    }
    return a.size() < b.size();
  });
  v.injective = std::adjacent_find(paths.begin(), paths.end()) == paths.end();
  if (v.injective) {
    v.checked = true;
    v.witness = is_agregating(r, seed, trials);
  }
  return v;
}

std::vector<std::vector<Color>> zn_recovery(const BratteliDiagram& d, int level, const std::vector<Color>& exps) {
  if (level < 2 || level > d.n()) throw InputError("recovery starts at a level in [2, n]");
  if (exps.size() != d.levels[level - 1].size()) throw InputError("one exponent per vertex is required");
  size_t w = exps.empty() ? 0 : exps[0].size();
  std::vector<std::vector<Color>> out{exps};
  for (int lv = level + 1; lv <= d.n(); ++lv) {
    const auto& prev = out.back();
    std::vector<Color> cur(d.levels[lv - 1].size(), Color(w));
    for (const auto& e : d.edges[lv - 2]) {
      FieldElem wt = FieldElem(static_cast<long>(e.multiplicity * d.levels[lv - 2][e.from].dim)) /
                     FieldElem(static_cast<long>(d.levels[lv - 1][e.to].dim));
      for (size_t k = 0; k < w; ++k) FieldElem::fma(cur[e.to][k], wt, prev[e.from][k]);
    }
    out.push_back(std::move(cur));
  }
  return out;
}

FieldElem log_det_linear(const BraidRep& R) {
  if (R.sigmas.empty()) throw InputError("representation has no generators");
  if (R.D < 1) throw InputError("need degree at least 1");
  HSeries d = R.sigmas[0].det();
  return d[1] / d[0];
}

}  // namespace braidrep
