#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace braidrep;

TEST(LieAlgebras, InvariantForms) {
  EXPECT_TRUE(is_invariant(lie_sl2()));
  for (int m = 3; m <= 5; ++m) {
    LieAlgSpec g = lie_so(m);
    EXPECT_EQ(g.dim, static_cast<size_t>(m * (m - 1) / 2));
    EXPECT_TRUE(is_invariant(g));
  }
  EXPECT_THROW(lie_so(6), InputError);
  EXPECT_THROW(lie_algebra("e8"), InputError);
}

TEST(LieAlgebras, KillingFormOfSl2) {
  // basis e, f, h
  Matrix k = killing_form(lie_sl2().bracket);
  EXPECT_EQ(k(0, 1), FieldElem(4));
  EXPECT_EQ(k(2, 2), FieldElem(8));
  EXPECT_EQ(k(0, 0), FieldElem(0));
}

TEST(LieAlgebras, DualBasisPairsToIdentity) {
  for (const char* name : {"sl2", "so3", "so4", "so5"}) {
    LieAlgSpec g = lie_algebra(name);
    for (size_t i = 0; i < g.dim; ++i) {
      Vec row = g.form * g.dual[i];
      for (size_t j = 0; j < g.dim; ++j) EXPECT_EQ(row[j], FieldElem(i == j ? 1 : 0)) << name;
    }
  }
}

TEST(Modules, Sl2IrrepsAndDefiningSo) {
  for (int k = 0; k <= 3; ++k) {
    LieModule V = sl2_irrep(k);
    EXPECT_EQ(V.dim(), static_cast<size_t>(k + 1));
    EXPECT_TRUE(is_module(lie_sl2(), V));
  }
  for (int m = 3; m <= 5; ++m) EXPECT_TRUE(is_module(lie_so(m), so_defining(m)));
  EXPECT_FALSE(is_module(lie_sl2(), so_defining(3)));
}

TEST(Modules, InvariantFormParity) {
  auto b1 = invariant_form(sl2_irrep(1));
  ASSERT_TRUE(b1);
  EXPECT_EQ(b1->transpose(), -*b1);
  auto b2 = invariant_form(sl2_irrep(2));
  ASSERT_TRUE(b2);
  EXPECT_EQ(b2->transpose(), *b2);
}

TEST(Casimir, Sl2FundamentalEigenvalues) {
  // V (x) V = Sym^2 (3-dim) + Lambda^2 (1-dim)
  CasimirRep c = casimir_rep(lie_sl2(), sl2_irrep(1), 2);
  Vec roots{FieldElem(1, 4), FieldElem(1, 4), FieldElem(1, 4), FieldElem(-3, 4)};
  EXPECT_EQ(charpoly(c.tau(1, 2)), Poly::from_roots(roots));
  EXPECT_EQ(casimir_tensor(lie_sl2(), sl2_irrep(1), sl2_irrep(1)), c.tau(1, 2));
}

TEST(CasimirProperty, FamiliesSatisfyTnRelations) {
  for (const char* alg : {"sl2", "so3"})
    for (int n = 2; n <= 4; ++n) {
      LieModule V = std::string(alg) == "sl2" ? sl2_irrep(1) : so_defining(3);
      CasimirRep c = casimir_rep(lie_algebra(alg), V, n);
      EXPECT_TRUE(c.relation_failures.empty());
      EXPECT_TRUE(oracle::tn_failures(n, [&](int i, int j) { return c.tau(std::min(i, j), std::max(i, j)); }).empty());
      EXPECT_TRUE(c.commutes_diagonal);
      EXPECT_TRUE(c.total_commutes);
      EXPECT_TRUE(c.selfadjoint);
      ASSERT_TRUE(c.rep.has_value());
      EXPECT_TRUE(validate(*c.rep).valid());
    }
}

TEST(Casimir, MixedFactors) {
  CasimirRep c = casimir_rep(lie_sl2(), {sl2_irrep(1), sl2_irrep(2), sl2_irrep(1)});
  EXPECT_EQ(c.dims, (std::vector<size_t>{2, 3, 2}));
  EXPECT_TRUE(c.relation_failures.empty());
  EXPECT_FALSE(c.rep.has_value());
  EXPECT_TRUE(tn_relation_failures(c.taus, 3).empty());
}

TEST(HighestWeight, ThreeFundamentals) {
  // V^{(x)3} = V_3 + 2 V_1: three highest weight vectors
  HighestWeightSub s = highest_weight_sub({1, 1, 1}, 7);
  EXPECT_EQ(s.basis.cols(), 3u);
  EXPECT_TRUE(s.relation_failures.empty());
  ASSERT_TRUE(s.rep.has_value());
  EXPECT_TRUE(validate(*s.rep).valid());
  if (s.witness.found) EXPECT_TRUE(oracle::squarefree_charpoly(s.witness.element));
}

TEST(CubicHecke, Example235) {
  CubicHecke h = cubic_hecke_matrices(2, 3, 5);
  EXPECT_TRUE(h.failures().empty());
  EXPECT_EQ(h.discriminant, FieldElem(-267912540));
  EXPECT_TRUE(h.semisimple);
  // (s1 s2)^3 = (abc)^2 on the 3-dim irreducible
  EXPECT_EQ(h.central, Matrix::scalar(3, FieldElem(900)));
  EXPECT_EQ(power(h.s1 * h.s2, 3), h.central);
}

TEST(CubicHecke, CoincidentOrZeroParametersRejected) {
  EXPECT_THROW(cubic_hecke_matrices(1, 1, 2), InputError);
  EXPECT_THROW(cubic_hecke_matrices(0, 1, 2), InputError);
}

TEST(CubicHeckeProperty, RandomTriples) {
  oracle::Gen g(901);
  int done = 0;
  while (done < 8) {
    FieldElem a(g.nonzero_rational()), b(g.nonzero_rational()), c(g.nonzero_rational());
    if (a == b || b == c || a == c || cubic_discriminant(a, b, c).is_zero()) continue;
    CubicHecke h = cubic_hecke_matrices(a, b, c);
    EXPECT_TRUE(h.braid && h.cubic && h.trace_ok && h.det_ok);
    EXPECT_TRUE(h.central_scalar);
    EXPECT_EQ(h.central, Matrix::scalar(3, a * a * b * b * c * c));
    ++done;
  }
}

TEST(Long, ArtinRestrictionOfBurau) {
  LongRep L = artin_restriction(burau_rep(4));
  EXPECT_EQ(L.n(), 3);
  EXPECT_EQ(L.g.size(), 3u);
  EXPECT_TRUE(long_failures(L).empty());
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(L.g[k - 1], burau_rep(4).t(k, 4));
}

TEST(Long, FromBaseHasZeroG) {
  LongRep L = long_from_base(burau_rep(3));
  EXPECT_TRUE(long_failures(L).empty());
  for (const auto& g : L.g) EXPECT_TRUE(g.is_zero());
}

TEST(LongProperty, PlusRepresentationIsValid) {
  LongRep L = artin_restriction(burau_rep(4));
  for (long num : {0L, 1L, -2L, 5L}) {
    FieldElem a(num, 3);
    InfRep plus = long_plus(L, a);
    EXPECT_EQ(plus.dim(), L.dim() * static_cast<size_t>(L.n()));
    EXPECT_TRUE(validate(plus).valid()) << a.str();
    EXPECT_EQ(plus.tau(), long_t_plus(L, a, 1, 2));
  }
}

TEST(Long, HyperbolicDoubleForms) {
  for (int eps : {1, -1}) {
    HyperbolicDouble hd = hyperbolic_double(burau_rep(4), eps);
    EXPECT_EQ(hd.form.transpose(), FieldElem(eps) * hd.form);
    EXPECT_TRUE(validate(hd.rep).valid());
    LongFormReport f = long_form(artin_restriction(hd.rep), hd.form, 0);
    EXPECT_TRUE(f.nondegenerate);
    EXPECT_TRUE(f.failures().empty());
    EXPECT_EQ(f.plus_type, eps == 1 ? FormType::symplectic : FormType::orthogonal);
  }
}
