#include "braidrep/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace braidrep {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::from_images(const std::vector<int>& images1) {
  Perm p(static_cast<int>(images1.size()));
  std::vector<bool> seen(images1.size(), false);
  for (size_t i = 0; i < images1.size(); ++i) {
    int v = images1[i] - 1;
    if (v < 0 || v >= static_cast<int>(images1.size()) || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
    p.img_[i] = v;
  }
  return p;
}

Perm Perm::adjacent(int n, int i) { return transposition(n, i, i + 1); }

Perm Perm::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw InputError("bad transposition");
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

std::vector<int> Perm::images() const {
  std::vector<int> v(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
  return v;
}

Perm Perm::inverse() const {
  Perm p(size());
  for (int i = 0; i < size(); ++i) p.img_[img_[i]] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::sign() const { return reduced_word().size() % 2 ? -1 : 1; }

std::vector<int> Perm::reduced_word() const {
  // bubble sort the one-line notation; swapping positions k,k+1 is p -> p s_k
  std::vector<int> a = img_, w;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (size_t k = 0; k + 1 < a.size(); ++k)
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        w.push_back(static_cast<int>(k) + 1);
        swapped = true;
      }
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> ct;
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw InputError("composing permutations of different degree");
  Perm r(p.size());
  for (int i = 0; i < p.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
  return r;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(a));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm p(n);
  for (int i : word) p = p * Perm::adjacent(n, i);
  return p;
}

bool is_partition_of(const Partition& p, int n) {
  if (p.empty()) return n == 0;
  int s = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
    s += p[i];
  }
  return s == n;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_str(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("bad partition '" + s + "'");
      p.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad partition '" + s + "'");
    }
  }
  int n = std::accumulate(p.begin(), p.end(), 0);
  if (!is_partition_of(p, n) || n == 0) throw InputError("bad partition '" + s + "'");
  return p;
}

long content_sum(const Partition& p) {
  long s = 0;
  for (size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) s += c - static_cast<long>(r);
  return s;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  std::vector<Tableau> out;
  Tableau cur;
  std::vector<int> filled(p.size(), 0);
  // entries 1..n placed in turn; output is lexicographic in the row sequence
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (size_t r = 0; r < p.size(); ++r) {
      if (filled[r] >= p[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      cur.emplace_back(static_cast<int>(r), filled[r]);
      ++filled[r];
      rec(k + 1);
      --filled[r];
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

SymRep irrep(const Partition& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  if (!is_partition_of(p, n) || n == 0) throw InputError("invalid partition");
  auto tabs = standard_tableaux(p);
  size_t N = tabs.size();
  std::map<Tableau, size_t> pos;
  for (size_t i = 0; i < N; ++i) pos[tabs[i]] = i;
  auto content = [](const Tableau& t, int k) { return t[k - 1].second - t[k - 1].first; };
  SymRep r;
  r.n = n;
  r.label = {{p, 1}};
  for (int i = 1; i < n; ++i) {
    Matrix g(N, N);
    for (size_t col = 0; col < N; ++col) {
      const Tableau& t = tabs[col];
      FieldElem a(1L, static_cast<long>(content(t, i + 1) - content(t, i)));
      g(col, col) = a;
      Tableau st = t;
      std::swap(st[i - 1], st[i]);
      auto it = pos.find(st);
      if (it != pos.end()) g(it->second, col) = FieldElem(1) + a;
    }
    r.gens.push_back(std::move(g));
  }
  // invariant diagonal form: b_{s_i T} = b_T (1-a)/(1+a), propagated from the first tableau
  r.form.assign(N, FieldElem(0));
  std::vector<bool> done(N, false);
  std::queue<size_t> q;
  r.form[0] = 1;
  done[0] = true;
  q.push(0);
  while (!q.empty()) {
    size_t c = q.front();
    q.pop();
    for (int i = 1; i < n; ++i) {
      Tableau st = tabs[c];
      std::swap(st[i - 1], st[i]);
      auto it = pos.find(st);
      if (it == pos.end() || done[it->second]) continue;
      FieldElem a = r.gens[i - 1](c, c);
      r.form[it->second] = r.form[c] * (FieldElem(1) - a) / (FieldElem(1) + a);
      done[it->second] = true;
      q.push(it->second);
    }
  }
  return r;
}

SymRep trivial_rep(int n, size_t dim) {
  SymRep r;
  r.n = n;
  for (int i = 1; i < n; ++i) r.gens.push_back(Matrix::identity(dim));
  r.form.assign(dim, FieldElem(1));
  r.label = {{Partition{n}, static_cast<int>(dim)}};
  return r;
}

SymRep permutation_rep(int n) {
  SymRep r;
  r.n = n;
  for (int i = 1; i < n; ++i) {
    Matrix g = Matrix::identity(n);
    g(i - 1, i - 1) = 0;
    g(i, i) = 0;
    g(i - 1, i) = 1;
    g(i, i - 1) = 1;
    r.gens.push_back(std::move(g));
  }
  r.form.assign(n, FieldElem(1));
  r.label = {{Partition{n}, 1}};
  if (n > 1) r.label.push_back({Partition{n - 1, 1}, 1});
  return r;
}

Label merge_labels(const Label& a, const Label& b) {
  std::map<Partition, int, std::greater<Partition>> m;
  for (const auto& [p, k] : a) m[p] += k;
  for (const auto& [p, k] : b) m[p] += k;
  Label out;
  for (const auto& [p, k] : m)
    if (k) out.emplace_back(p, k);
  return out;
}

SymRep direct_sum(const SymRep& a, const SymRep& b) {
  if (a.n != b.n) throw InputError("direct sum of representations of different S_n");
  SymRep r;
  r.n = a.n;
  for (size_t i = 0; i < a.gens.size(); ++i) r.gens.push_back(block_diag(a.gens[i], b.gens[i]));
  r.form = a.form;
  r.form.insert(r.form.end(), b.form.begin(), b.form.end());
  r.label = merge_labels(a.label, b.label);
  return r;
}

SymRep tensor(const SymRep& a, const SymRep& b) {
  if (a.n != b.n) throw InputError("tensor product of representations of different S_n");
  SymRep r;
  r.n = a.n;
  for (size_t i = 0; i < a.gens.size(); ++i) r.gens.push_back(kron(a.gens[i], b.gens[i]));
  for (const auto& x : a.form)
    for (const auto& y : b.form) r.form.push_back(x * y);
  r.label = decompose(r);
  return r;
}

SymRep dual(const SymRep& a) {
  SymRep r = a;
  for (auto& g : r.gens) {
    auto gi = inverse(g);
    if (!gi) throw InputError("singular generator");
    g = gi->transpose();
  }
  for (auto& x : r.form) x = x.inverse();
  return r;
}

SymRep restrict(const SymRep& a, int m) {
  if (m < 1 || m > a.n) throw InputError("restriction to an invalid S_m");
  SymRep r;
  r.n = m;
  r.gens.assign(a.gens.begin(), a.gens.begin() + (m - 1));
  r.form = a.form;
  r.label = decompose(r);
  return r;
}

std::vector<std::vector<int>> subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Matrix compound(const Matrix& m, int p) {
  auto rs = subsets(static_cast<int>(m.rows()), p), cs = subsets(static_cast<int>(m.cols()), p);
  Matrix c(rs.size(), cs.size());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) {
      Matrix sub(p, p);
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) sub(a, b) = m(rs[i][a], cs[j][b]);
      c(i, j) = p ? det(sub) : FieldElem(1);
    }
  return c;
}

SymRep exterior_power(const SymRep& a, int p) {
  if (p < 0 || p > static_cast<int>(a.dim())) throw InputError("exterior power degree out of range");
  SymRep r;
  r.n = a.n;
  for (const auto& g : a.gens) r.gens.push_back(compound(g, p));
  for (const auto& s : subsets(static_cast<int>(a.dim()), p)) {
    FieldElem f(1);
    for (int i : s) f *= a.form[i];
    r.form.push_back(f);
  }
  r.label = decompose(r);
  return r;
}

Matrix perm_matrix(const SymRep& r, const Perm& p) {
  if (p.size() != r.n) throw InputError("permutation degree does not match representation");
  Matrix m = Matrix::identity(r.dim());
  for (int i : p.reduced_word()) m = m * r.gens[i - 1];
  return m;
}

std::vector<std::string> braid_relation_failures(const std::vector<Matrix>& g) {
  std::vector<std::string> out;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (g[i] * g[j] * g[i] != g[j] * g[i] * g[j])
          out.push_back("braid relation fails for s" + std::to_string(i + 1) + ", s" + std::to_string(j + 1));
      } else if (g[i] * g[j] != g[j] * g[i]) {
        out.push_back("locality fails for s" + std::to_string(i + 1) + ", s" + std::to_string(j + 1));
      }
    }
  return out;
}

std::vector<std::string> moore_failures(const std::vector<Matrix>& g) {
  std::vector<std::string> out;
  for (size_t i = 0; i < g.size(); ++i)
    if (!(g[i] * g[i]).is_identity()) out.push_back("s" + std::to_string(i + 1) + "^2 != 1");
  for (auto& f : braid_relation_failures(g)) out.push_back(std::move(f));
  return out;
}

bool form_invariant(const SymRep& r) {
  Matrix b = Matrix::diag(r.form);
  for (const auto& g : r.gens)
    if (g.transpose() * b * g != b) return false;
  return true;
}

FieldElem character(const SymRep& r, const Perm& p) { return perm_matrix(r, p).trace(); }

namespace {

// one representative and the class size for each cycle type
std::vector<std::pair<Perm, long>> class_reps(int n) {
  std::map<std::vector<int>, std::pair<Perm, long>> m;
  for (const auto& p : all_perms(n)) {
    auto ct = p.cycle_type();
    auto it = m.find(ct);
    if (it == m.end())
      m.emplace(ct, std::make_pair(p, 1L));
    else
      ++it->second.second;
  }
  std::vector<std::pair<Perm, long>> out;
  for (auto& [ct, v] : m) out.push_back(v);
  return out;
}

}  // namespace

Label decompose(const SymRep& r) {
  if (r.n > 8) throw InputError("character decomposition limited to n <= 8");
  auto reps = class_reps(r.n);
  long order = 0;
  for (const auto& c : reps) order += c.second;
  Label out;
  for (const auto& p : partitions(r.n)) {
    SymRep irr = irrep(p);
    FieldElem s;
    // characters of S_n are real and class functions; chi(g^-1) = chi(g)
    for (const auto& [g, sz] : reps) s += character(r, g) * character(irr, g) * FieldElem(sz);
    s /= FieldElem(order);
    Rational q = s.to_rational();
    if (q.get_den() != 1) throw InputError("non-integral multiplicity: not a representation");
    if (q != 0) out.emplace_back(p, static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

Vec vectorize(const Matrix& m) { return m.data(); }

Matrix unvectorize(const Vec& v, size_t rows, size_t cols) { return Matrix(rows, cols, v); }

std::vector<Matrix> intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw InputError("intertwiners: generator count mismatch");
  if (a.empty()) throw InputError("intertwiners: no generators");
  size_t p = a[0].rows(), q = b[0].rows();
  // unknown X (q x p), equations (X a - b X)_{ij}
  Matrix sys(a.size() * q * p, q * p);
  size_t row = 0;
  for (size_t g = 0; g < a.size(); ++g)
    for (size_t i = 0; i < q; ++i)
      for (size_t j = 0; j < p; ++j, ++row) {
        for (size_t k = 0; k < p; ++k)
          if (!a[g](k, j).is_zero()) sys(row, i * p + k) += a[g](k, j);
        for (size_t k = 0; k < q; ++k)
          if (!b[g](i, k).is_zero()) sys(row, k * p + j) -= b[g](i, k);
      }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(sys)) out.push_back(unvectorize(v, q, p));
  return out;
}

std::vector<Matrix> commutant(const std::vector<Matrix>& gens, size_t n) {
  if (gens.empty()) {
    std::vector<Matrix> out;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Matrix e(n, n);
        e(i, j) = 1;
        out.push_back(std::move(e));
      }
    return out;
  }
  return intertwiners(gens, gens);
}

std::vector<int> young_generators(const std::vector<int>& composition) {
  std::vector<int> g;
  int start = 1;
  for (int c : composition) {
    if (c <= 0) throw InputError("composition parts must be positive");
    for (int i = start; i < start + c - 1; ++i) g.push_back(i);
    start += c;
  }
  return g;
}

std::vector<Matrix> commutant_basis(const SymRep& r, const std::vector<int>& composition) {
  if (std::accumulate(composition.begin(), composition.end(), 0) != r.n)
    throw InputError("composition does not sum to n");
  std::vector<Matrix> gens;
  for (int i : young_generators(composition)) gens.push_back(r.gens[i - 1]);
  return commutant(gens, r.dim());
}

}  // namespace braidrep
