#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace braidrep;

namespace {

const Associator& phi4() {
  static const Associator a = solve(1, 4, true);
  return a;
}

// exp(c h) through h^D, from the factorial series
HSeries exp_oracle(const FieldElem& c, int D) {
  Vec v;
  FieldElem term(1);
  for (int k = 0; k <= D; ++k) {
    v.push_back(term);
    term = term * c / FieldElem(k + 1);
  }
  return HSeries(v);
}

}  // namespace

TEST(BraidWord, ParseAndInverse) {
  BraidWord w = BraidWord::parse("s1 s2^-1 3");
  EXPECT_EQ(w.letters(), (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(w.inverse().letters(), (std::vector<int>{-3, 2, -1}));
  EXPECT_TRUE((w * w.inverse()).free_reduced().empty());
  EXPECT_EQ(w.max_index(), 3);
  EXPECT_THROW(BraidWord::parse("s0"), InputError);
  EXPECT_THROW(BraidWord::parse("s1^2"), InputError);
  EXPECT_EQ(BraidWord::delta(3).letters(), (std::vector<int>{2, 1, 1, 2}));
  EXPECT_EQ(BraidWord::gamma(3).letters().size(), 6u);
  EXPECT_EQ(BraidWord::xi(1, 3).letters(), (std::vector<int>{2, 1, 1, -2}));
}

TEST(Lift, SigmaOneEigenvalues) {
  // on Burau, sigma_1 = s_1 exp(lambda h s_1): roots e^{lambda h} and -e^{-lambda h}
  const int D = 4;
  InfRep r = burau_rep(3);
  BraidRep R = lift(r, phi4());
  const HMatrix& x = R.sigmas[0];
  HSeries a = exp_oracle(FieldElem(1), D), b = exp_oracle(FieldElem(-1), D);
  EXPECT_EQ(a, HSeries::exp_linear(1, D));
  HMatrix I = HMatrix::identity(x.n(), D);
  HMatrix q = x * x + x * (b - a) - I * (a * b);
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(R.sigmas[0].coeff(0), r.s(1));
}

TEST(Lift, EvalWordRespectsInverses) {
  BraidRep R = lift(hecke_rep({2, 1}, FieldElem(1, 3), FieldElem(2)), phi4());
  EXPECT_TRUE(eval_word(R, BraidWord::parse("1 -1 2 -2")).is_identity());
  EXPECT_EQ(eval_word(R, BraidWord::parse("1 2 1")), eval_word(R, BraidWord::parse("2 1 2")));
  EXPECT_EQ(eval_word(R, BraidWord::sigma(2)), R.sigmas[1]);
  EXPECT_EQ(eval_word(R, BraidWord::sigma(1, -1)), R.inverses[0]);
  EXPECT_THROW(eval_word(R, BraidWord::sigma(3)), InputError);
}

TEST(Lift, RejectsInvalidRepresentation) {
  InfRep bad(irrep({2, 1}), Matrix{{0, 1}, {0, 0}});
  EXPECT_THROW(lift(bad, phi4()), InputError);
  EXPECT_THROW(lift(burau_rep(3), phi4(), 5), InputError);
}

TEST(LiftProperty, DeltaAndGammaIdentities) {
  oracle::Gen g(601);
  for (int trial = 0; trial < 4; ++trial) {
    int n = static_cast<int>(g.integer(3, 4));
    auto ps = partitions(n);
    InfRep r = hecke_rep(ps[static_cast<size_t>(g.integer(0, static_cast<long>(ps.size()) - 1))],
                         FieldElem(g.rational()), FieldElem(g.nonzero_rational()));
    BraidRep R = lift(r, phi4(), 3);
    EXPECT_TRUE(braid_failures(R).empty());
    EXPECT_TRUE(all_zero(delta_identity(R, r)));
    EXPECT_TRUE(all_zero(gamma_identity(R, r)));
    EXPECT_TRUE(all_zero(first_order_checks(R, r)));
  }
}

TEST(Lift, RestrictionCommutesWithLift) {
  InfRep r = hecke_rep({2, 1, 1}, FieldElem(1, 2), FieldElem(-1));
  BraidRep a = restrict(lift(r, phi4(), 3), 3);
  BraidRep b = lift(restrict(r, 3), phi4(), 3);
  EXPECT_TRUE(equal(a, b));
}

TEST(Lift, Order3ExpansionMatchesTaylor3) {
  InfRep r = hecke_rep({3, 1}, FieldElem(1, 3), FieldElem(2));
  for (long al : {0L, 1L}) {
    Associator t = taylor3(FieldElem(1), FieldElem(al));
    EXPECT_EQ(lift_sigma(r, t, 3, 3), order3_expansion(r, 3, FieldElem(1), FieldElem(al), 3)) << al;
  }
}

TEST(Hensel, ConjugatesSymmetryBackToConstantTerm) {
  oracle::Gen g(602);
  Matrix x = Matrix::diag({1, 1, -1});
  Poly Q(Vec{FieldElem(-1), FieldElem(0), FieldElem(1)});
  for (int trial = 0; trial < 10; ++trial) {
    HMatrix u = g.unipotent(3, 4);
    HMatrix a = u * HMatrix::constant(x, 4) * u.inverse();
    HMatrix P = hensel_conjugate(a, Q);
    EXPECT_EQ(P * HMatrix::constant(a.coeff(0), 4), a * P);
    EXPECT_TRUE(inverse(P.coeff(0)).has_value());
  }
}

TEST(Hensel, ConjugatesIdempotent) {
  oracle::Gen g(603);
  Matrix e = Matrix::diag({1, 0, 0, 1});
  Poly Q(Vec{FieldElem(0), FieldElem(-1), FieldElem(1)});
  HMatrix u = g.unipotent(4, 5);
  HMatrix a = u * HMatrix::constant(e, 5) * u.inverse();
  HMatrix P = hensel_conjugate(a, Q);
  EXPECT_EQ(P * HMatrix::constant(e, 5), a * P);
}

TEST(HomSpace, SchurOnLiftedIrreps) {
  const int D = 2;
  InfRep a = hecke_rep({2, 1}, FieldElem(1, 3), FieldElem(2));
  InfRep b = hecke_rep({3}, FieldElem(1, 3), FieldElem(2));
  BraidRep Ra = lift(a, phi4(), D), Rb = lift(b, phi4(), D);
  HomSpaceResult same = hom_space(Ra, Ra, a, a);
  EXPECT_EQ(same.hom_inf, 1u);
  EXPECT_EQ(same.truncated_dim, 3u);
  EXPECT_TRUE(same.matches_full());
  EXPECT_TRUE(same.free_of_rank());
  HomSpaceResult diff = hom_space(Ra, Rb, a, b);
  EXPECT_EQ(diff.hom_inf, 0u);
  EXPECT_EQ(diff.truncated_dim, 0u);
  InfRep aa = direct_sum(a, a);
  BraidRep Raa = lift(aa, phi4(), D);
  EXPECT_EQ(hom_infinitesimal(aa, aa), 4u);
  EXPECT_EQ(hom_space(Raa, Raa, aa, aa).truncated_dim, 12u);
}

TEST(Irreducibility, AgreesWithInfinitesimal) {
  InfRep a = burau_rep(4);
  auto res = abs_irreducible(lift(a, phi4(), 2), a);
  EXPECT_TRUE(res.lifted && res.infinitesimal);
  InfRep s = direct_sum(burau_rep(3), hecke_rep({3}, 0, 1));
  auto red = abs_irreducible(lift(s, phi4(), 2), s);
  EXPECT_FALSE(red.lifted);
  EXPECT_TRUE(red.agree());
}

TEST(Unitarity, HeckeLiftIsAnIsometryUpToEps) {
  InfRep r = hecke_rep({2, 2}, FieldElem(1, 2), FieldElem(3));
  BraidRep R = lift(r, phi4());
  Matrix beta = Matrix::diag(r.base().form);
  FormReport f = form_type(r, beta);
  ASSERT_TRUE(admits(f, FormType::unitary));
  EXPECT_TRUE(all_zero(isometry_check(R, r, beta, FormType::unitary)));
  // direct check: R^T beta eps(R) = beta
  for (const auto& s : R.sigmas) EXPECT_EQ(s.transpose() * HMatrix::constant(beta, R.D) * s.eps(), HMatrix::constant(beta, R.D));
}

TEST(Functors, TensorDualSumOnLiftedReps) {
  BraidRep a = lift(burau_rep(3), phi4(), 2), b = lift(hecke_rep({3}, 1, 0), phi4(), 2);
  BraidRep t = tensor(a, b);
  for (size_t i = 0; i < t.sigmas.size(); ++i) EXPECT_EQ(t.sigmas[i], oracle::kron_h(a.sigmas[i], b.sigmas[i]));
  BraidRep d = dual(a);
  for (size_t i = 0; i < d.sigmas.size(); ++i) EXPECT_EQ(d.sigmas[i], a.inverses[i].transpose());
  EXPECT_TRUE(braid_failures(direct_sum(a, b)).empty());
  BraidRep s = scale_h(a, 2);
  EXPECT_EQ(s.sigmas[0].coeff(1), a.sigmas[0].coeff(1) * FieldElem(2));
  EXPECT_EQ(s.sigmas[0].coeff(2), a.sigmas[0].coeff(2) * FieldElem(4));
}

TEST(MakeBraidRep, RejectsSingularConstantTerm) {
  HMatrix z(2, 1);
  EXPECT_ANY_THROW(make_braid_rep(2, {z}));
}
