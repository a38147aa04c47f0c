#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace braidrep;

namespace {

const std::vector<std::string> AB{"A", "B"};

TruncSeries random_series(oracle::Gen& g, const std::vector<std::string>& alpha, int D, bool constant_one) {
  TruncSeries s(alpha, D);
  for (int d = 0; d <= D; ++d)
    for (auto& c : s.block(d)) c = FieldElem(g.rational(3, 3));
  s.block(0)[0] = constant_one ? FieldElem(1) : FieldElem(0);
  return s;
}

// random Lie series: sums of nested commutators of letters
TruncSeries random_lie(oracle::Gen& g, int D) {
  TruncSeries a = TruncSeries::letter(AB, D, 0), b = TruncSeries::letter(AB, D, 1);
  TruncSeries out(AB, D);
  std::vector<TruncSeries> pool{a, b};
  for (int step = 0; step < 6; ++step) {
    const auto& x = pool[g.integer(0, pool.size() - 1)];
    const auto& y = pool[g.integer(0, pool.size() - 1)];
    pool.push_back(commutator(x, y));
  }
  for (const auto& p : pool) out += p * FieldElem(g.rational(4, 3));
  return out;
}

}  // namespace

TEST(Series, ExpExamples) {
  EXPECT_EQ(series_exp(TruncSeries(AB, 3)), TruncSeries::one(AB, 3));
  TruncSeries a = TruncSeries::letter(AB, 2, 0) * FieldElem(5);
  TruncSeries e = series_exp(a);
  EXPECT_EQ(e.coeff(""), FieldElem(1));
  EXPECT_EQ(e.coeff("A"), FieldElem(5));
  EXPECT_EQ(e.coeff("A.A"), FieldElem(25, 2));
  // exp((1/6)[A,B]) = 1 + (AB - BA)/6 through degree 3
  TruncSeries c = commutator(TruncSeries::letter(AB, 3, 0), TruncSeries::letter(AB, 3, 1)) * FieldElem(1, 6);
  TruncSeries ec = series_exp(c);
  EXPECT_EQ(ec, TruncSeries::one(AB, 3) + c);
}

TEST(Series, ExpRejectsConstantTerm) { EXPECT_THROW(series_exp(TruncSeries::one(AB, 2)), InputError); }

TEST(Series, GrouplikeExamples) {
  EXPECT_TRUE(is_grouplike(TruncSeries::one(AB, 3)));
  TruncSeries s = TruncSeries::letter(AB, 3, 0) + TruncSeries::letter(AB, 3, 1);
  EXPECT_TRUE(is_grouplike(series_exp(s)));
  TruncSeries bad = TruncSeries::one(AB, 2);
  bad.set(bad.parse_word("A.B"), FieldElem(1));
  EXPECT_FALSE(is_grouplike(bad));
  auto defects = shuffle_defects(bad);
  ASSERT_FALSE(defects.empty());
}

TEST(Series, WordsRoundTrip) {
  TruncSeries s(AB, 4);
  for (const char* w : {"", "A", "B.A", "A.B.B.A"}) EXPECT_EQ(s.word_str(s.parse_word(w)), w);
  EXPECT_THROW(s.parse_word("C"), InputError);
}

TEST(Series, MixingDegreesIsAnError) {
  EXPECT_ANY_THROW(TruncSeries(AB, 2) + TruncSeries(AB, 3));
}

TEST(SeriesProperty, RingAxioms) {
  oracle::Gen g(201);
  for (int trial = 0; trial < 20; ++trial) {
    int D = static_cast<int>(g.integer(1, 4));
    TruncSeries a = random_series(g, AB, D, false), b = random_series(g, AB, D, false), c = random_series(g, AB, D, false);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(SeriesProperty, ProductMatchesWordConcatenation) {
  oracle::Gen g(202);
  const int D = 3;
  TruncSeries a = random_series(g, AB, D, true), b = random_series(g, AB, D, true);
  TruncSeries p = a * b;
  // <ab, w> = sum over splittings w = uv of <a,u><b,v>
  for (int d = 0; d <= D; ++d)
    for (size_t idx = 0; idx < p.block(d).size(); ++idx) {
      Word w = p.word(idx, d);
      FieldElem want(0);
      for (size_t cut = 0; cut <= w.size(); ++cut) {
        Word u(w.begin(), w.begin() + static_cast<long>(cut)), v(w.begin() + static_cast<long>(cut), w.end());
        want += a.coeff(u) * b.coeff(v);
      }
      EXPECT_EQ(p.coeff(w), want);
    }
}

TEST(SeriesProperty, ExpLogInverse) {
  oracle::Gen g(203);
  for (int trial = 0; trial < 50; ++trial) {
    int D = static_cast<int>(g.integer(1, 6));
    TruncSeries l = random_lie(g, D);
    TruncSeries e = series_exp(l);
    EXPECT_EQ(series_log(e), l);
    EXPECT_TRUE(is_grouplike(e));
  }
  for (int trial = 0; trial < 20; ++trial) {
    TruncSeries s = random_series(g, AB, 4, true);
    EXPECT_EQ(series_exp(series_log(s)), s);
  }
}

TEST(Substitute, Examples) {
  const int D = 3;
  Matrix x{{1, 2}, {0, 3}};
  HMatrix one = substitute(TruncSeries::one(AB, D), {x, x}, {1, 1}, D);
  EXPECT_TRUE(one.is_identity());
  HMatrix a = substitute(TruncSeries::letter(AB, D, 0), {x, x}, {1, 1}, D);
  EXPECT_TRUE(a.coeff(0).is_zero());
  EXPECT_EQ(a.coeff(1), x);
  // Phi(x, x) = 1 for the degree-3 even associator
  Associator phi = taylor3(FieldElem(1), FieldElem(0));
  EXPECT_TRUE(substitute(phi.phi, {x, x}, {1, 1}, D).is_identity());
}

TEST(SubstituteProperty, IsMultiplicative) {
  oracle::Gen g(204);
  const int D = 3;
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries s = random_series(g, AB, D, true), t = random_series(g, AB, D, true);
    std::vector<Matrix> im{g.matrix(3, 3), g.matrix(3, 3)};
    HMatrix lhs = substitute(s * t, im, {1, 1}, D);
    HMatrix rhs = substitute(s, im, {1, 1}, D) * substitute(t, im, {1, 1}, D);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(HSeries, EpsIsRingInvolution) {
  oracle::Gen g(205);
  for (int trial = 0; trial < 20; ++trial) {
    Vec a, b;
    for (int k = 0; k <= 4; ++k) {
      a.push_back(FieldElem(g.rational()));
      b.push_back(FieldElem(g.rational()));
    }
    HSeries f(a), h(b);
    EXPECT_EQ(f.eps().eps(), f);
    EXPECT_EQ((f * h).eps(), f.eps() * h.eps());
    if (!f[0].is_zero()) {
      HSeries prod = f * f.inverse();
      EXPECT_EQ(prod, HSeries::constant(FieldElem(1), 4));
    }
  }
}

TEST(HSeries, TruncationOnlySeesLowerDegrees) {
  oracle::Gen g(206);
  Vec a{1, 2, 3, 4}, b{5, 6, 7, 8};
  HSeries f(a), h(b);
  HSeries p = f * h;
  Vec a2 = a, b2 = b;
  a2[3] = 100;
  b2[3] = -100;
  HSeries q = HSeries(a2) * HSeries(b2);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(p[k], q[k]);
}

TEST(HMatrixProperty, InverseExactly) {
  oracle::Gen g(207);
  for (int trial = 0; trial < 15; ++trial) {
    size_t n = static_cast<size_t>(g.integer(1, 4));
    HMatrix m = g.hmatrix(n, 5);
    m.coeff(0) = g.invertible(n);
    EXPECT_TRUE((m.inverse() * m).is_identity());
    EXPECT_TRUE((m * m.inverse()).is_identity());
  }
  HMatrix sing(2, 3);
  EXPECT_THROW(sing.inverse(), InputError);
}

TEST(HMatrix, ExpOfScalar) {
  HMatrix e = HMatrix::exp_h(Matrix::identity(2), FieldElem(2), 1, 3);
  EXPECT_EQ(e.coeff(3), Matrix::scalar(2, FieldElem(8, 6)));
}
