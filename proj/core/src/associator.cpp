#include "braidrep/associator.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace braidrep {

namespace {

size_t ipow(size_t k, int d) {
  size_t r = 1;
  for (int i = 0; i < d; ++i) r *= k;
  return r;
}

using RowMap = std::map<uint32_t, Rational, std::greater<>>;

}  // namespace

GradedQuotient::GradedQuotient(std::vector<std::string> alphabet, const std::vector<TruncSeries>& relations,
                               int D)
    : alpha_(std::move(alphabet)), D_(D) {
  HSeries::check_degree(D);
  const size_t k = alpha_.size();
  if (k == 0) throw InputError("GradedQuotient: empty alphabet");
  if (static_cast<double>(ipow(k, D)) > 2.0e7) throw InputError("GradedQuotient: degree slice too large");

  std::vector<SparseRow> rels;
  for (const auto& r : relations) {
    if (r.alphabet() != alpha_) throw InputError("GradedQuotient: relation over a different alphabet");
    SparseRow row;
    for (const auto& [w, c] : r.terms()) {
      if (w.size() != 2) throw InputError("GradedQuotient: relations must be homogeneous quadratic");
      row.emplace_back(static_cast<uint32_t>(w[0] * k + w[1]), c.to_rational());
    }
    if (!row.empty()) rels.push_back(std::move(row));
  }

  tail_.resize(D + 1);
  lead_.resize(D + 1);
  pos_.resize(D + 1);
  normal_.resize(D + 1);
  for (int d = 0; d <= D; ++d) {
    size_t n = ipow(k, d);
    tail_[d].resize(n);
    lead_[d].assign(n, 0);
    if (d >= 3) {
      // I_d = I_{d-1} W + W^{d-2} R; the first part is already in echelon form
      for (size_t p = 0; p < tail_[d - 1].size(); ++p) {
        if (!lead_[d - 1][p]) continue;
        for (size_t x = 0; x < k; ++x) {
          size_t q = p * k + x;
          lead_[d][q] = 1;
          SparseRow& t = tail_[d][q];
          t.reserve(tail_[d - 1][p].size());
          for (const auto& [j, c] : tail_[d - 1][p]) t.emplace_back(static_cast<uint32_t>(j * k + x), c);
        }
      }
    }
    if (d >= 2) {
      size_t nu = ipow(k, d - 2);
      for (size_t u = 0; u < nu; ++u)
        for (const auto& rel : rels) {
          RowMap m;
          for (const auto& [j, c] : rel) m[static_cast<uint32_t>(u * k * k + j)] += c;
          while (!m.empty()) {
            auto it = m.begin();
            if (sgn(it->second) == 0) {
              m.erase(it);
              continue;
            }
            uint32_t col = it->first;
            if (lead_[d][col]) {
              Rational c = it->second;
              m.erase(it);
              for (const auto& [j, r] : tail_[d][col]) {
                Rational& e = m[j];
                e -= c * r;
                if (sgn(e) == 0) m.erase(j);
              }
              continue;
            }
            Rational inv = 1 / it->second;
            m.erase(it);
            SparseRow t;
            t.reserve(m.size());
            for (const auto& [j, r] : m)
              if (sgn(r) != 0) t.emplace_back(j, r * inv);
            lead_[d][col] = 1;
            tail_[d][col] = std::move(t);
            break;
          }
        }
    }
    pos_[d].assign(n, -1);
    for (size_t i = 0; i < n; ++i)
      if (!lead_[d][i]) {
        pos_[d][i] = static_cast<int32_t>(normal_[d].size());
        normal_[d].push_back(static_cast<uint32_t>(i));
      }
  }
}

std::vector<Word> GradedQuotient::basis(int d) const {
  std::vector<Word> out;
  for (uint32_t i : normal_.at(d)) {
    Word w(d);
    size_t x = i;
    for (int p = d - 1; p >= 0; --p) {
      w[p] = static_cast<uint8_t>(x % k());
      x /= k();
    }
    out.push_back(std::move(w));
  }
  return out;
}

size_t GradedQuotient::generator(const std::string& name) const {
  auto it = std::find(alpha_.begin(), alpha_.end(), name);
  if (it == alpha_.end()) throw InputError("unknown generator " + name);
  return static_cast<size_t>(it - alpha_.begin());
}

Vec GradedQuotient::normal_form(const TruncSeries& s, int d) const {
  if (s.alphabet() != alpha_) throw InputError("normal_form: alphabet mismatch");
  if (d > s.degree()) return Vec(dim(d));
  return normal_form(s.block(d), d);
}

Vec GradedQuotient::normal_form(const Vec& block, int d) const {
  if (d < 0 || d > D_) throw InputError("normal_form: degree outside the quotient");
  if (block.size() != lead_[d].size()) throw InputError("normal_form: block size mismatch");
  Vec w = block;
  Vec out(dim(d));
  // leading words are larger than every word of their tail
  for (size_t i = w.size(); i-- > 0;) {
    if (w[i].is_zero()) continue;
    if (lead_[d][i]) {
      FieldElem c = -w[i];
      for (const auto& [j, r] : tail_[d][i]) FieldElem::fma(w[j], c, FieldElem(r));
    } else {
      out[pos_[d][i]] = w[i];
    }
  }
  return out;
}

Vec GradedQuotient::multiply(const Vec& a, int i, const Vec& b, int j) const {
  if (i + j > D_) throw InputError("multiply: degree beyond truncation");
  if (a.size() != dim(i) || b.size() != dim(j)) throw InputError("multiply: coordinate size mismatch");
  Vec block(ipow(k(), i + j));
  size_t nb = ipow(k(), j);
  for (size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (size_t y = 0; y < b.size(); ++y)
      if (!b[y].is_zero()) FieldElem::fma(block[normal_[i][x] * nb + normal_[j][y]], a[x], b[y]);
  }
  return normal_form(block, i + j);
}

bool GradedQuotient::vanishes(const TruncSeries& s) const {
  for (int d = 0; d <= std::min(D_, s.degree()); ++d)
    for (const auto& c : normal_form(s, d))
      if (!c.is_zero()) return false;
  for (int d = D_ + 1; d <= s.degree(); ++d)
    for (const auto& c : s.block(d))
      if (!c.is_zero()) throw InputError("vanishes: series has terms beyond the quotient degree");
  return true;
}

std::string ut_name(int i, int j) {
  if (i > j) std::swap(i, j);
  return "t" + std::to_string(i) + std::to_string(j);
}

GradedQuotient build_ut(int m, int D) {
  if (m < 2 || m > 9) throw InputError("build_ut: strand count must be in 2..9");
  std::vector<std::string> alpha;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) alpha.push_back(ut_name(i, j));
  auto gen = [&](int i, int j) {
    size_t a = static_cast<size_t>(std::find(alpha.begin(), alpha.end(), ut_name(i, j)) - alpha.begin());
    return TruncSeries::letter(alpha, 2, a);
  };
  std::vector<TruncSeries> rels;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k) {
        if (k == i || k == j) continue;
        rels.push_back(commutator(gen(i, j), gen(i, k) + gen(j, k)));
        for (int l = k + 1; l <= m; ++l)
          if (l != i && l != j && std::make_pair(i, j) < std::make_pair(k, l))
            rels.push_back(commutator(gen(i, j), gen(k, l)));
      }
  return GradedQuotient(alpha, rels, D);
}

GradedQuotient build_ut4(int D) {
  if (D < 0 || D > 6) throw InputError("build_ut4: degree must be in 0..6");
  return build_ut(4, D);
}

GradedQuotient build_central_ab(int D) {
  std::vector<std::string> alpha{"A", "B", "Z"};
  auto g = [&](size_t a) { return TruncSeries::letter(alpha, 2, a); };
  return GradedQuotient(alpha, {commutator(g(2), g(0)), commutator(g(2), g(1))}, D);
}

std::vector<Word> lyndon_words(size_t k, int d) {
  std::vector<Word> out;
  if (d <= 0 || k == 0) return out;
  // Duval's generation of Lyndon words of length <= d
  std::vector<int> w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.emplace_back(w.begin(), w.end());
    size_t m = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(k) - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

bool is_lyndon(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return !w.empty();
}

}  // namespace

TruncSeries lyndon_bracket(const Word& w, const std::vector<std::string>& alphabet, int D) {
  if (!is_lyndon(w)) throw InputError("lyndon_bracket: not a Lyndon word");
  if (w.size() == 1) return TruncSeries::letter(alphabet, D, w[0]);
  // longest proper Lyndon suffix
  for (size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) {
      Word u(w.begin(), w.begin() + i);
      return commutator(lyndon_bracket(u, alphabet, D), lyndon_bracket(v, alphabet, D));
    }
  }
  throw InputError("lyndon_bracket: no factorization");
}

size_t witt_dimension(size_t k, int d) {
  if (d <= 0) return 0;
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
      }
    if (n > 1) r = -r;
    return r;
  };
  long long s = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) s += mobius(e) * static_cast<long long>(ipow(k, d / e));
  return static_cast<size_t>(s / d);
}

std::vector<std::string> ab_alphabet() { return {"A", "B"}; }

FieldElem Associator::alpha() const {
  if (D < 3) return FieldElem();
  return phi.coeff(Word{0, 0, 1});
}

Associator make_associator(const FieldElem& lambda, const TruncSeries& phi, bool even) {
  if (phi.alphabet() != ab_alphabet()) throw InputError("associator must be a series in A, B");
  if (!phi.constant().is_one()) throw InputError("associator must have constant term 1");
  Associator a;
  a.lambda = lambda;
  a.D = phi.degree();
  a.even = even;
  a.phi = phi;
  a.psi = series_log(phi);
  return a;
}

Associator taylor3(const FieldElem& lambda, const FieldElem& alpha) {
  auto AB = ab_alphabet();
  TruncSeries A = TruncSeries::letter(AB, 3, 0), B = TruncSeries::letter(AB, 3, 1);
  TruncSeries phi = TruncSeries::one(AB, 3) + commutator(A, B) * (lambda * lambda / FieldElem(6)) +
                    (commutator(A, commutator(A, B)) - commutator(B, commutator(B, A))) * alpha;
  return make_associator(lambda, phi, alpha.is_zero());
}

namespace {

TruncSeries letter_ab(int D, size_t i) { return TruncSeries::letter(ab_alphabet(), D, i); }

TruncSeries sub2(const TruncSeries& s, const TruncSeries& x, const TruncSeries& y) { return substitute(s, {x, y}); }

std::vector<std::string> ut4_alphabet() { return {"t12", "t13", "t14", "t23", "t24", "t34"}; }

struct Ut4Images {
  TruncSeries t12, t13, t14, t23, t24, t34;
  explicit Ut4Images(int D) {
    auto a = ut4_alphabet();
    t12 = TruncSeries::letter(a, D, 0);
    t13 = TruncSeries::letter(a, D, 1);
    t14 = TruncSeries::letter(a, D, 2);
    t23 = TruncSeries::letter(a, D, 3);
    t24 = TruncSeries::letter(a, D, 4);
    t34 = TruncSeries::letter(a, D, 5);
  }
};

TruncSeries hexagon_linear(const TruncSeries& L) {
  int D = L.degree();
  TruncSeries A = letter_ab(D, 0), B = letter_ab(D, 1), C = -(A + B);
  return sub2(L, C, A) + sub2(L, B, C) + L;
}

TruncSeries pentagon_linear(const TruncSeries& L) {
  Ut4Images t(L.degree());
  return sub2(L, t.t12, t.t23 + t.t24) + sub2(L, t.t13 + t.t23, t.t34) - sub2(L, t.t23, t.t34) -
         sub2(L, t.t12 + t.t13, t.t24 + t.t34) - sub2(L, t.t12, t.t23);
}

void append(Vec& out, const Vec& v) { out.insert(out.end(), v.begin(), v.end()); }

}  // namespace

TruncSeries inverse_residual(const TruncSeries& phi) {
  int D = phi.degree();
  TruncSeries A = letter_ab(D, 0), B = letter_ab(D, 1);
  return sub2(phi, B, A) * phi - TruncSeries::one(ab_alphabet(), D);
}

TruncSeries hexagon_residual(const TruncSeries& phi, const FieldElem& lambda) {
  int D = phi.degree();
  TruncSeries A = letter_ab(D, 0), B = letter_ab(D, 1), C = -(A + B);
  TruncSeries eA = series_exp(A * lambda), eB = series_exp(B * lambda), eC = series_exp(C * lambda);
  return eA * sub2(phi, C, A) * eC * sub2(phi, B, C) * eB * phi - TruncSeries::one(ab_alphabet(), D);
}

TruncSeries pentagon_free(const TruncSeries& phi, const GradedQuotient& ut4) {
  if (ut4.alphabet() != ut4_alphabet()) throw InputError("pentagon: quotient is not U T_4");
  if (phi.degree() > ut4.degree()) throw InputError("pentagon: quotient degree below associator degree");
  Ut4Images t(phi.degree());
  TruncSeries lhs = sub2(phi, t.t12, t.t23 + t.t24) * sub2(phi, t.t13 + t.t23, t.t34);
  TruncSeries rhs = sub2(phi, t.t23, t.t34) * sub2(phi, t.t12 + t.t13, t.t24 + t.t34) * sub2(phi, t.t12, t.t23);
  return lhs - rhs;
}

TruncSeries central_shift_free(const TruncSeries& phi) {
  int D = phi.degree();
  std::vector<std::string> abz{"A", "B", "Z"};
  TruncSeries A = TruncSeries::letter(abz, D, 0), B = TruncSeries::letter(abz, D, 1),
              Z = TruncSeries::letter(abz, D, 2);
  return sub2(phi, A + Z, B) - sub2(phi, A, B);
}

Associator solve(const Rational& lambda, int D, bool even) {
  if (D < 0 || D > 6) throw InputError("solve: degree must be in 0..6");
  auto AB = ab_alphabet();
  GradedQuotient ut4 = build_ut4(D);
  TruncSeries psi(AB, D);
  const FieldElem lam(lambda);
  for (int d = 2; d <= D; ++d) {
    TruncSeries phi = series_exp(psi.truncated(d));
    Vec rhs;
    append(rhs, inverse_residual(phi).block(d));
    append(rhs, hexagon_residual(phi, lam).block(d));
    append(rhs, ut4.normal_form(pentagon_free(phi, ut4), d));
    for (auto& x : rhs) x = -x;

    if (even && d % 2 == 1) {
      for (const auto& x : rhs)
        if (!x.is_zero())
          throw ResidualError("solve: even associator does not extend to degree " + std::to_string(d));
      continue;
    }
    auto words = lyndon_words(2, d);
    std::vector<TruncSeries> brackets;
    std::vector<Vec> cols;
    for (const auto& w : words) {
      TruncSeries L = lyndon_bracket(w, AB, d);
      Vec col;
      append(col, (sub2(L, letter_ab(d, 1), letter_ab(d, 0)) + L).block(d));
      append(col, hexagon_linear(L).block(d));
      append(col, ut4.normal_form(pentagon_linear(L), d));
      cols.push_back(std::move(col));
      brackets.push_back(std::move(L));
    }
    Matrix M = Matrix::from_columns(cols);
    auto x = braidrep::solve(M, rhs);
    if (!x) throw ResidualError("solve: inconsistent linear system in degree " + std::to_string(d));
    for (size_t i = 0; i < brackets.size(); ++i) {
      if ((*x)[i].is_zero()) continue;
      const Vec& b = brackets[i].block(d);
      for (size_t j = 0; j < b.size(); ++j) FieldElem::fma(psi.block(d)[j], (*x)[i], b[j]);
    }
  }
  Associator a;
  a.lambda = lam;
  a.D = D;
  a.even = even;
  a.psi = psi;
  a.phi = series_exp(psi);
  return a;
}

Associator rescale(const Associator& a, const FieldElem& mu) {
  TruncSeries phi = a.phi;
  FieldElem p = 1;
  for (int d = 0; d <= phi.degree(); ++d) {
    for (auto& c : phi.block(d)) c *= p;
    p *= mu;
  }
  return make_associator(a.lambda * mu, phi, a.even);
}

bool AssociatorReport::pentagon_ok() const {
  for (const auto& v : pentagon)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

bool AssociatorReport::central_shift_ok() const {
  for (const auto& v : central_shift)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

bool AssociatorReport::ok() const { return failures().empty(); }

std::vector<std::string> AssociatorReport::failures() const {
  std::vector<std::string> f;
  if (!grouplike_ok()) f.push_back("grouplike");
  if (!inverse.is_zero()) f.push_back("inverse");
  if (!hexagon.is_zero()) f.push_back("hexagon");
  if (!pentagon_ok()) f.push_back("pentagon");
  if (!central_shift_ok()) f.push_back("central_shift");
  return f;
}

AssociatorReport verify(const Associator& a, int D) {
  if (D < 0 || D > 6) throw InputError("verify: degree must be in 0..6");
  return verify(a, D, build_ut4(D));
}

AssociatorReport verify(const Associator& a, int D, const GradedQuotient& ut4) {
  if (D > a.D) throw InputError("verify: degree exceeds the associator truncation");
  TruncSeries phi = a.phi.truncated(D);
  AssociatorReport r;
  r.D = D;
  if (!phi.constant().is_one()) r.grouplike.push_back({Word{}, Word{}, phi.constant() - FieldElem(1)});
  for (auto& s : shuffle_defects(phi)) r.grouplike.push_back(std::move(s));
  r.inverse = inverse_residual(phi);
  r.hexagon = hexagon_residual(phi, a.lambda);
  TruncSeries pent = pentagon_free(phi, ut4);
  GradedQuotient cz = build_central_ab(D);
  TruncSeries shift = central_shift_free(phi);
  for (int d = 0; d <= D; ++d) {
    r.pentagon.push_back(ut4.normal_form(pent, d));
    r.central_shift.push_back(cz.normal_form(shift, d));
  }
  return r;
}

}  // namespace braidrep
