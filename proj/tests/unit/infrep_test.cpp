#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace braidrep;

namespace {

// t_ij = alpha + beta (i j) on the irrep
Matrix hecke_t(const Partition& p, const FieldElem& a, const FieldElem& b, int i, int j) {
  SymRep r = irrep(p);
  int n = r.n;
  return Matrix::scalar(r.dim(), a) + b * perm_matrix(r, Perm::transposition(n, i, j));
}

InfRep random_hecke(oracle::Gen& g, int n) {
  auto ps = partitions(n);
  const Partition& p = ps[static_cast<size_t>(g.integer(0, static_cast<long>(ps.size()) - 1))];
  return hecke_rep(p, FieldElem(g.rational()), FieldElem(g.nonzero_rational()));
}

}  // namespace

TEST(InfRep, TImagesOfHeckeRepresentations) {
  FieldElem a(1, 3), b(2);
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : partitions(n)) {
      InfRep r = hecke_rep(p, a, b);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          EXPECT_EQ(r.t(i, j), hecke_t(p, a, b, i, j));
          EXPECT_EQ(r.t(j, i), r.t(i, j));
          EXPECT_EQ(t_image(r, i, j), r.t(i, j));
        }
      EXPECT_TRUE(oracle::tn_failures(n, [&](int i, int j) { return r.t(i, j); }).empty());
    }
}

TEST(InfRep, BurauTauIsTheTransposition) {
  InfRep r = burau_rep(4);
  SymRep m = irrep({3, 1});
  EXPECT_EQ(t_image(r, 1, 3), perm_matrix(m, Perm::transposition(4, 1, 3)));
}

// T acts by binom(n,2) alpha + beta * (content sum)
TEST(InfRep, TotalIsContentScalar) {
  FieldElem a(-2, 5), b(3);
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : partitions(n)) {
      InfRep r = hecke_rep(p, a, b);
      FieldElem want = a * FieldElem(n * (n - 1) / 2) + b * FieldElem(oracle::contents(p));
      EXPECT_EQ(t_total(r), Matrix::scalar(r.dim(), want)) << partition_str(p);
    }
}

TEST(InfRep, YElementsCommute) {
  InfRep r = hecke_rep({3, 2}, FieldElem(1, 2), FieldElem(5));
  for (int k = 2; k <= 5; ++k) {
    Matrix y(r.dim(), r.dim());
    for (int i = 1; i < k; ++i) y += r.t(i, k);
    EXPECT_EQ(y_element(r, k), y);
    for (int l = 2; l <= 5; ++l) EXPECT_TRUE(commutator(y_element(r, k), y_element(r, l)).is_zero());
  }
}

TEST(Validate, RejectsTauOutsideCommutant) {
  SymRep m = irrep({2, 1});
  Matrix tau{{0, 1}, {0, 0}};
  ValidationReport rep = validate(InfRep(m, tau));
  EXPECT_FALSE(rep.in_commutant);
  EXPECT_FALSE(rep.valid());
  EXPECT_FALSE(rep.failures().empty());
}

TEST(Validate, C1C2DetectBrokenRelations) {
  // a commutant element that is not a point: tau = diag on V[3,1] restricted pieces
  SymRep m = permutation_rep(3);
  Matrix tau = Matrix::diag({1, 0, 0});
  ValidationReport rep = validate(InfRep(m, tau));
  EXPECT_FALSE(rep.in_commutant && rep.c_zero());
}

TEST(ValidateProperty, ConstructionsStayValid) {
  oracle::Gen g(401);
  for (int trial = 0; trial < 12; ++trial) {
    int n = static_cast<int>(g.integer(2, 4));
    InfRep a = random_hecke(g, n), b = random_hecke(g, n);
    EXPECT_TRUE(validate(a).valid());
    InfRep t = tensor(a, b);
    EXPECT_TRUE(validate(t).valid());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        EXPECT_EQ(t.t(i, j), kron(a.t(i, j), Matrix::identity(b.dim())) + kron(Matrix::identity(a.dim()), b.t(i, j)));
    InfRep d = dual(a);
    EXPECT_TRUE(validate(d).valid());
    EXPECT_EQ(d.t(1, n), -a.t(1, n).transpose());
    EXPECT_TRUE(validate(direct_sum(a, b)).valid());
    FieldElem s(g.rational());
    InfRep tw = twist(a, s);
    EXPECT_TRUE(validate(tw).valid());
    EXPECT_EQ(tw.t(1, n), a.t(1, n) * s);
    if (n >= 3) {
      InfRep res = restrict(a, n - 1);
      EXPECT_EQ(res.t(1, n - 1), a.t(1, n - 1));
      EXPECT_TRUE(validate(res).valid());
    }
  }
}

TEST(Purity, HeckeIsPureUnlessBetaVanishes) {
  FieldElem a(2, 3), b(-3);
  InfRep r = hecke_rep({3, 1}, a, b);
  auto c = essential_purity_certificate(r);
  ASSERT_TRUE(c);
  Matrix sum(r.dim(), r.dim()), pw = Matrix::identity(r.dim());
  for (const auto& ck : *c) {
    sum += ck * pw;
    pw = pw * r.tau();
  }
  EXPECT_EQ(sum, r.s(1));
  EXPECT_FALSE(is_essentially_pure(hecke_rep({3, 1}, a, FieldElem(0))));
  EXPECT_TRUE(is_essentially_pure(hecke_rep({3}, a, FieldElem(0))));
}

TEST(Simplicial, Examples) {
  // spectrum {1, -1}
  EXPECT_TRUE(is_simplicial(burau_rep(3), {}, {{1}, {-1}}).simplicial());
  // spectrum {+-sqrt 3}
  InfRep r3 = hecke_rep({2, 1}, FieldElem(0), FieldElem::sqrt_of(3));
  EXPECT_TRUE(is_simplicial(r3, {3}, {{0, 1}, {0, -1}}).simplicial());
  // three collinear eigenvalues 1, -1, 2
  InfRep s = direct_sum(direct_sum(hecke_rep({2}, 0, 1), hecke_rep({1, 1}, 0, 1)), twist(hecke_rep({2}, 0, 1), 2));
  auto res = is_simplicial(s, {}, {{1}, {-1}, {2}});
  EXPECT_EQ(res.status, SimplicialStatus::affinely_dependent);
  // declaring the wrong spectrum
  EXPECT_EQ(is_simplicial(burau_rep(3), {}, {{1}, {2}}).status, SimplicialStatus::spectrum_mismatch);
  EXPECT_EQ(is_simplicial(burau_rep(3), {}, {{1}}).status, SimplicialStatus::spectrum_mismatch);
}

TEST(Simplicial, NonDiagonalizableTau) {
  SymRep m = trivial_rep(2, 2);
  InfRep r(m, Matrix{{1, 1}, {0, 1}});
  EXPECT_EQ(is_simplicial(r, {}, {{1}}).status, SimplicialStatus::not_diagonalizable);
}

TEST(AffineIndependence, SmallCases) {
  EXPECT_TRUE(affinely_independent({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_FALSE(affinely_independent({{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_TRUE(affinely_independent({{Rational(1, 2)}}));
}

TEST(Agregating, FoundWitnessIsChecked) {
  InfRep r = burau_rep(4);
  AgregatingResult res = is_agregating(r, 11, 50);
  ASSERT_TRUE(res.found);
  Matrix sum(r.dim(), r.dim());
  for (const auto& [ij, c] : res.coefficients) sum += FieldElem(c) * r.t(ij.first, ij.second);
  EXPECT_EQ(sum, res.element);
  EXPECT_TRUE(oracle::squarefree_charpoly(res.element));
  EXPECT_EQ(res.charpoly, charpoly(res.element));
}

TEST(Agregating, ScalarFamilyNeverAgregates) {
  InfRep r = direct_sum(hecke_rep({3}, 1, 0), hecke_rep({3}, 1, 0));
  EXPECT_FALSE(is_agregating(r, 5, 20).found);
}

TEST(AgregatingProperty, DeterministicInSeed) {
  InfRep r = hecke_rep({2, 1}, FieldElem(1, 3), FieldElem(2));
  for (uint64_t seed : {1u, 2u, 3u}) {
    auto x = is_agregating(r, seed, 20), y = is_agregating(r, seed, 20);
    EXPECT_EQ(x.found, y.found);
    EXPECT_EQ(x.element, y.element);
  }
}

TEST(FormType, HeckeFormIsSymmetricAndInvariant) {
  InfRep r = hecke_rep({3, 1}, FieldElem(1, 2), FieldElem(2));
  FormReport f = form_type(r, Matrix::diag(r.base().form));
  EXPECT_TRUE(f.symmetric);
  EXPECT_FALSE(f.skew);
  EXPECT_TRUE(f.sn_isometric);
  EXPECT_TRUE(f.tau_selfadjoint);
  Matrix beta = Matrix::diag(r.base().form);
  EXPECT_EQ(adjoint(r.tau(), beta), r.tau());
}

TEST(LieClosure, ClosedAndTotalCentral) {
  InfRep r = hecke_rep({2, 1}, FieldElem(1), FieldElem(1, 2));
  LieClosure L = lie_closure(r);
  EXPECT_EQ(L.dim, L.basis.size());
  EXPECT_TRUE(L.t_total_central);
  SpanBuilder span(r.dim() * r.dim());
  for (const auto& x : L.basis) span.add(vectorize(x));
  for (const auto& x : L.basis)
    for (const auto& y : L.basis) EXPECT_TRUE(span.contains(vectorize(commutator(x, y))));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) EXPECT_TRUE(span.contains(vectorize(r.t(i, j))));
  for (const auto& z : L.center_basis)
    for (const auto& x : L.basis) EXPECT_TRUE(commutator(z, x).is_zero());
}

TEST(QuotientFlags, HeckeExamples) {
  // contents of [2,1] sum to 0, so T = 0 when alpha = 0
  QuotientFlags f = quotient_flags(hecke_rep({2, 1}, 0, 1));
  EXPECT_TRUE(f.center_kills);
  EXPECT_FALSE(f.hurwitz);
  EXPECT_FALSE(f.z_times_sn);
  EXPECT_FALSE(f.enhanced_sym);
  QuotientFlags g = quotient_flags(hecke_rep({2, 1}, 1, 0));
  EXPECT_FALSE(g.center_kills);
  EXPECT_TRUE(g.z_times_sn);
  EXPECT_TRUE(g.enhanced_sym);
  // [1^3] at alpha = 1, beta = 1: t_ij = 1 - 1 = 0
  QuotientFlags z = quotient_flags(hecke_rep({1, 1, 1}, 1, 1));
  EXPECT_TRUE(z.center_kills && z.hurwitz && z.z_times_sn && z.enhanced_sym);
}

TEST(GeneratedAlgebra, Dimensions) {
  EXPECT_EQ(generated_algebra_dim({}, 3), 1u);
  InfRep r = burau_rep(3);
  std::vector<Matrix> gens{r.s(1), r.s(2)};
  EXPECT_EQ(generated_algebra_dim(gens, 2), 4u);
  EXPECT_EQ(generated_algebra_dim({Matrix::diag({1, 2, 3})}, 3), 3u);
}
