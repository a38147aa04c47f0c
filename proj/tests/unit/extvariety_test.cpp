#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace braidrep;

namespace {

Matrix d_block(const oracle::Exterior& X, int p) {
  // rows: degree p-1, columns: degree p
  std::vector<size_t> rows, cols;
  for (size_t i = 0; i < X.dim(); ++i) {
    if (static_cast<int>(X.basis[i].size()) == p - 1) rows.push_back(i);
    if (static_cast<int>(X.basis[i].size()) == p) cols.push_back(i);
  }
  Matrix full = X.d(), b(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) b(i, j) = full(rows[i], cols[j]);
  return b;
}

}  // namespace

TEST(Koszul, SquaresToZeroAndMatchesOracle) {
  for (int n = 1; n <= 6; ++n) {
    oracle::Exterior X(n);
    for (int p = 1; p <= n; ++p) {
      Matrix d = koszul_d(n, p);
      EXPECT_EQ(d, d_block(X, p)) << n << " " << p;
      if (p >= 2) EXPECT_TRUE((koszul_d(n, p - 1) * d).is_zero());
    }
  }
}

TEST(Koszul, WedgeMatchesOracle) {
  oracle::Gen g(701);
  for (int n = 2; n <= 5; ++n) {
    oracle::Exterior X(n);
    Vec y;
    for (int i = 0; i < n; ++i) y.push_back(FieldElem(g.rational()));
    Matrix full = X.wedge(y);
    for (int p = 1; p <= n; ++p) {
      Matrix w = wedge_left(y, p);
      std::vector<size_t> rows, cols;
      for (size_t i = 0; i < X.dim(); ++i) {
        if (static_cast<int>(X.basis[i].size()) == p) rows.push_back(i);
        if (static_cast<int>(X.basis[i].size()) == p - 1) cols.push_back(i);
      }
      ASSERT_EQ(w.rows(), rows.size());
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) EXPECT_EQ(w(i, j), full(rows[i], cols[j]));
    }
  }
}

TEST(Catalog, EveryFamilyBuildsAValidPoint) {
  std::map<std::string, FamilyParams> params{
      {"hecke", {{"partition", "3,1"}, {"alpha", "1/2"}, {"beta", "3"}}},
      {"s3_std", {{"a", "1"}, {"b", "-2/3"}}},
      {"s3_std_plus_triv", {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}}},
      {"s3_std_plus_triv_orthogonal", {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}}},
      {"s3_square", {{"x", "1"}, {"y", "2"}, {"u", "3"}, {"v", "5"}}},
      {"hooks_chain", {{"n", "4"}, {"alpha", "1"}, {"lambda", "1"}}},
  };
  for (const auto& name : family_names()) {
    ASSERT_TRUE(params.count(name)) << name;
    VarietyPoint p = family_catalog(name, params[name]);
    EXPECT_TRUE(validate(p.rep).valid()) << name;
    EXPECT_EQ(p.basis.size(), p.coords.size());
    Matrix rebuilt(p.rep.dim(), p.rep.dim());
    for (size_t k = 0; k < p.basis.size(); ++k) rebuilt += p.coords[k] * p.basis[k];
    EXPECT_EQ(rebuilt, p.tau()) << name;
  }
  EXPECT_THROW(family_catalog("nope", {}), InputError);
  EXPECT_THROW(family_catalog("s3_std", {{"a", "1"}}), InputError);
}

TEST(MakePoint, RejectsInvalidTau) {
  SymRep M = s3_orthogonal_std_plus_triv();
  // off the hyperplane l = 2a - d with bc != 0
  Matrix tau = s3_std_plus_triv_tau(1, 1, 1, 1, 5);
  EXPECT_THROW(make_point(M, tau), InputError);
  PointCheck pc = verify_point(M, tau);
  EXPECT_TRUE(pc.in_commutant);
  EXPECT_FALSE(pc.c_zero);
  EXPECT_FALSE(pc.point.has_value());
}

TEST(Surjectivity, DependsOnOffDiagonalBlocks) {
  SymRep M = s3_orthogonal_std_plus_triv();
  EXPECT_TRUE(is_surjective(make_point(M, s3_std_plus_triv_tau(1, 2, 3, 4, -2))));
  EXPECT_FALSE(is_surjective(make_point(M, s3_std_plus_triv_tau(1, 0, 3, 4, -2))));
}

TEST(Transvection, RankOneNilpotentForcesCommutation) {
  SymRep M = s3_orthogonal_std_plus_triv();
  VarietyPoint p = make_point(M, s3_std_plus_triv_tau(0, 1, 0, 0, 0));
  EXPECT_TRUE(transvection_guard(p));
  EXPECT_TRUE(commutator(p.rep.t(1, 2), p.rep.t(2, 3)).is_zero());
  EXPECT_FALSE(transvection_guard(hecke_point({2, 1}, 1, 1)));
}

TEST(Guard, IsomorphicSummandsAreNotCertified) {
  GuardCertificate g = vsvide_guard(irrep({2, 1}), irrep({2, 1}));
  EXPECT_FALSE(g.certified);
  EXPECT_GT(g.hom_dim, 0u);
  EXPECT_TRUE(vsvide_guard(irrep({4}), irrep({1, 1, 1, 1})).certified);
}

TEST(Splitting, BlockDiagonalGeneratorsSplit) {
  SymRep a = irrep({2, 1}), b = trivial_rep(3);
  SymRep s = direct_sum(a, b);
  EXPECT_TRUE(upper_splits(s.gens, a.dim()));
  EXPECT_TRUE(lower_splits(s.gens, a.dim()));
}

TEST(SqrtDecompose, Examples) {
  EXPECT_EQ(sqrt_decompose(12), (std::pair<Rational, long>{2, 3}));
  EXPECT_EQ(sqrt_decompose(Rational(1, 8)), (std::pair<Rational, long>{Rational(1, 4), 2}));
  EXPECT_EQ(sqrt_decompose(Rational(9, 4)), (std::pair<Rational, long>{Rational(3, 2), 1}));
  EXPECT_EQ(sqrt_decompose(-3).second, -3);
}

TEST(SqrtDecomposeProperty, SquareRecoversInput) {
  oracle::Gen g(702);
  for (int trial = 0; trial < 100; ++trial) {
    Rational r = g.nonzero_rational(500, 50);
    auto [c, d] = sqrt_decompose(r);
    EXPECT_EQ(Rational(c * c * d), r);
  }
}

TEST(S3Square, SpectrumMatchesCharpolyWhenRational) {
  oracle::Gen g(703);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    FieldElem x(g.rational()), y(g.rational()), s1(g.nonzero_rational()), s2(g.nonzero_rational());
    // (x-y)^2 + u = s1^2 and likewise for v
    FieldElem u = s1 * s1 - (x - y) * (x - y), v = s2 * s2 - (x - y) * (x - y);
    if (u.is_zero() || v.is_zero()) continue;
    Matrix tau = s3_square_tau(x, y, u, v);
    FieldElem q(1, 4);
    Vec roots{(FieldElem(3) * x + y) * q + s1 * q, (FieldElem(3) * x + y) * q - s1 * q,
              (FieldElem(3) * y + x) * q + s2 * q, (FieldElem(3) * y + x) * q - s2 * q};
    EXPECT_EQ(charpoly(tau), Poly::from_roots(roots));
    DeclaredSpectrum sp = s3_square_spectrum(x, y, u, v);
    EXPECT_TRUE(sp.radicands.empty());
    ASSERT_EQ(sp.eigenvalues.size(), 4u);
    std::vector<Rational> got, want;
    for (size_t k = 0; k < 4; ++k) {
      got.push_back(sp.eigenvalues[k][0]);
      want.push_back(roots[k].re());
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(S3Square, IrrationalSpectrumUsesRadicands) {
  DeclaredSpectrum sp = s3_square_spectrum(0, 0, 2, 3);
  EXPECT_EQ(sp.radicands, (std::vector<long>{2, 3}));
  VarietyPoint p = family_catalog("s3_square", {{"x", "0"}, {"y", "0"}, {"u", "2"}, {"v", "3"}});
  EXPECT_NE(is_simplicial(p.rep, sp.radicands, sp.eigenvalues).status, SimplicialStatus::spectrum_mismatch);
}

TEST(Tensor, TensorOfPointsIsAPoint) {
  VarietyPoint a = hecke_point({2, 1}, FieldElem(1, 2), 1), b = hecke_point({2, 1}, 0, 2);
  InfRep t = tensor(a.rep, b.rep);
  VarietyPoint p = make_point(t.base(), t.tau());
  EXPECT_EQ(p.tau(), kron(a.tau(), Matrix::identity(2)) + kron(Matrix::identity(2), b.tau()));
}

TEST(AdaptedBasis, ConjugatesPermutationModule) {
  for (int n = 2; n <= 5; ++n) {
    Matrix B = adapted_basis(n);
    SymRep A = adapted_permutation_module(n);
    auto Binv = inverse(B);
    ASSERT_TRUE(Binv);
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(B * A.gens[k - 1] * *Binv, oracle::permutation(oracle::swap_perm(n, k)));
  }
}

TEST(HookFamily, DegreeZeroIsTrivial) {
  for (int n = 3; n <= 5; ++n) {
    HookFamily h0 = hook_family(n, 0, FieldElem(1));
    for (const auto& g : h0.g) EXPECT_TRUE(g.is_identity());
    EXPECT_THROW(hook_family(n, n, FieldElem(1)), InputError);
    auto f = hook_f_matrices(n, FieldElem(1, 2));
    EXPECT_TRUE(braid_relation_failures(f).empty());
    auto gm = hook_g_matrices(n, FieldElem(1, 2));
    EXPECT_TRUE(braid_relation_failures(gm).empty());
  }
}
