#include <gtest/gtest.h>

#include <numeric>

#include "support/oracles.hpp"

using namespace braidrep;

namespace {

// partitions of r inside p, with T_r = alpha r(r-1)/2 + beta c(mu)
std::vector<std::pair<size_t, FieldElem>> young_level(const Partition& p, int r, const FieldElem& a, const FieldElem& b) {
  std::vector<std::pair<size_t, FieldElem>> out;
  for (const auto& mu : partitions(r))
    if (oracle::contains_partition(p, mu))
      out.push_back({irrep(mu).dim(), a * FieldElem(r * (r - 1) / 2) + b * FieldElem(oracle::contents(mu))});
  return out;
}

std::vector<std::pair<size_t, std::string>> keyed(const std::vector<std::pair<size_t, FieldElem>>& v) {
  std::vector<std::pair<size_t, std::string>> k;
  for (const auto& [d, c] : v) k.push_back({d, c.str()});
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

TEST(Bratteli, HeckeChainIsTheYoungLattice) {
  FieldElem a(2, 3), b(1);
  for (const Partition& p : std::vector<Partition>{{3, 1}, {2, 2}, {3, 2}, {2, 1, 1}}) {
    int n = std::accumulate(p.begin(), p.end(), 0);
    BratteliDiagram d = build_from_chain(hecke_rep(p, a, b));
    ASSERT_EQ(d.n(), n);
    EXPECT_TRUE(d.multiplicity_free());
    EXPECT_TRUE(d.invariant_failures().empty());
    for (int r = 2; r <= n; ++r) {
      std::vector<std::pair<size_t, FieldElem>> got;
      for (const auto& v : d.levels[r - 1]) {
        ASSERT_TRUE(v.color.has_value());
        got.push_back({v.dim, (*v.color)[0]});
      }
      EXPECT_EQ(keyed(got), keyed(young_level(p, r, a, b))) << partition_str(p) << " level " << r;
    }
    // Young branching is multiplicity free
    for (int r = 2; r < n; ++r)
      for (const auto& e : d.edges[r - 1]) EXPECT_EQ(e.multiplicity, 1u);
  }
}

TEST(Bratteli, TwoStrands) {
  BratteliDiagram d = build_from_chain(burau_rep(2));
  ASSERT_EQ(d.n(), 2);
  ASSERT_EQ(d.levels[1].size(), 1u);
  EXPECT_EQ((*d.levels[1][0].color)[0], FieldElem(-1));
  ASSERT_EQ(d.edges[0].size(), 1u);
  EXPECT_EQ((*d.edges[0][0].color)[0], FieldElem(-1));
}

TEST(BratteliProperty, EdgeColorsTelescope) {
  oracle::Gen g(801);
  for (int trial = 0; trial < 5; ++trial) {
    auto ps = partitions(4);
    const Partition& p = ps[static_cast<size_t>(g.integer(0, 4))];
    BratteliDiagram d = build_from_chain(hecke_rep(p, FieldElem(g.rational()), FieldElem(g.nonzero_rational())));
    for (size_t k = 0; k < d.edges.size(); ++k)
      for (const auto& e : d.edges[k]) {
        ASSERT_TRUE(e.color.has_value());
        EXPECT_EQ((*e.color)[0], (*d.levels[k + 1][e.to].color)[0] - (*d.levels[k][e.from].color)[0]);
      }
  }
}

TEST(Bratteli, PathCountEqualsDimension) {
  Partition p{3, 2};
  BratteliDiagram d = build_from_chain(hecke_rep(p, 0, 1));
  EXPECT_EQ(path_colors(d, 5).size(), irrep(p).dim());
  for (const auto& path : path_colors(d, 5)) EXPECT_EQ(path.size(), 5u);
}

TEST(FormalColoring, SegmentDiagram) {
  BratteliDiagram d = build_from_chain(hecke_rep({4}, 0, 1));
  for (const auto& lv : d.levels) ASSERT_EQ(lv.size(), 1u);
  FieldElem c(5, 7);
  BratteliDiagram f = formal_coloring(d, {Color{c}});
  for (int r = 2; r <= 4; ++r) {
    EXPECT_EQ((*f.levels[r - 1][0].color)[0], c * FieldElem(r * (r - 1) / 2));
    EXPECT_EQ((*f.levels[r - 1][0].z)[0], c);
    EXPECT_EQ(barycentric_weights(f, r, 0), std::vector<Rational>{1});
  }
  auto rec = zn_recovery(f, 2, {Color{c}});
  ASSERT_EQ(rec.size(), 3u);
  for (const auto& lv : rec) EXPECT_EQ(lv[0][0], c);
}

TEST(FormalColoring, MatchesNaturalColoring) {
  for (const Partition& p : std::vector<Partition>{{3, 1}, {2, 2}, {3, 1, 1}}) {
    BratteliDiagram d = build_from_chain(hecke_rep(p, FieldElem(1, 3), FieldElem(2)));
    std::vector<Color> level2;
    for (const auto& v : d.levels[1]) level2.push_back(*v.color);
    EXPECT_TRUE(same_coloring(d, formal_coloring(d, level2))) << partition_str(p);
  }
}

TEST(FormalColoring, RejectsMultiplicities) {
  BratteliDiagram d;
  d.levels.resize(3);
  d.levels[0].push_back({"O", 1, 1, std::nullopt, std::nullopt, Matrix()});
  d.levels[1].push_back({"v", 1, 1, std::nullopt, std::nullopt, Matrix()});
  d.levels[2].push_back({"w", 2, 1, std::nullopt, std::nullopt, Matrix()});
  d.edges = {{{0, 0, 1, std::nullopt, Matrix()}}, {{0, 0, 2, std::nullopt, Matrix()}}};
  EXPECT_TRUE(d.invariant_failures().empty());
  EXPECT_FALSE(d.multiplicity_free());
  EXPECT_THROW(formal_coloring(d, {Color{FieldElem(1)}}), InputError);
  d.levels[2][0].dim = 3;
  EXPECT_FALSE(d.invariant_failures().empty());
}

TEST(Bratteli, WeightsSumToOne) {
  BratteliDiagram d = build_from_chain(hecke_rep({3, 2}, 0, 1));
  for (int r = 2; r <= 5; ++r)
    for (size_t v = 0; v < d.levels[r - 1].size(); ++v) {
      auto w = barycentric_weights(d, r, v);
      EXPECT_EQ(std::accumulate(w.begin(), w.end(), Rational(0)), Rational(1));
    }
}

TEST(LogDet, LinearTermIsLambdaTimesTraceTau) {
  Associator phi = solve(1, 2, true);
  for (const Partition& p : std::vector<Partition>{{2, 1}, {3, 1}, {2, 2}}) {
    InfRep r = hecke_rep(p, FieldElem(1, 2), FieldElem(3));
    BraidRep R = lift(r, phi);
    EXPECT_EQ(log_det_linear(R), oracle::log_det_h1(R.sigmas[0]));
    EXPECT_EQ(log_det_linear(R), phi.lambda * r.tau().trace());
  }
}

TEST(Injectivity, HeckeDiagramIsInjective) {
  InfRep r = hecke_rep({3, 1}, FieldElem(2, 3), 1);
  BratteliDiagram d = build_from_chain(r);
  InjectivityVerdict v = injectivity_agregation(d, r, 13);
  EXPECT_EQ(v.paths, 3u);
  EXPECT_TRUE(v.holds());
}
