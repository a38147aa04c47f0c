#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "braidrep_tools/io.hpp"
#include "support/oracles.hpp"

using namespace braidrep;
using braidrep::io::json;

TEST(IoScalars, RoundTrip) {
  for (const FieldElem& x : {FieldElem(0), FieldElem(-7, 3), FieldElem::quad(1, Rational(2, 5), 3), FieldElem::sqrt_of(2)})
    EXPECT_EQ(io::scalar_from_json(io::to_json(x)), x);
  EXPECT_EQ(io::scalar_from_json(json(5)), FieldElem(5));
  EXPECT_THROW(io::scalar_from_json(json("x")), InputError);
  EXPECT_THROW(io::scalar_from_json(json::array()), InputError);
}

TEST(IoMatrices, RoundTripAndShapeErrors) {
  oracle::Gen g(1001);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = g.matrix(static_cast<size_t>(g.integer(1, 4)), static_cast<size_t>(g.integer(1, 4)));
    EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
    HMatrix h = g.hmatrix(3, static_cast<int>(g.integer(0, 4)));
    EXPECT_EQ(io::hmatrix_from_json(io::to_json(h)), h);
  }
  EXPECT_THROW(io::matrix_from_json(json::parse(R"([["1","2"],["3"]])")), InputError);
}

TEST(IoSeries, RoundTrip) {
  Associator a = solve(1, 4, true);
  EXPECT_EQ(io::series_from_json(io::to_json(a.phi)), a.phi);
  Associator b = io::associator_from_json(io::to_json(a));
  EXPECT_EQ(b.phi, a.phi);
  EXPECT_EQ(b.lambda, a.lambda);
  EXPECT_EQ(b.even, a.even);
  EXPECT_EQ(io::to_json(a)["solver_version"], io::kSolverVersion);
  json bad = io::to_json(a.phi);
  bad["coeffs"]["A.C"] = "1";
  EXPECT_THROW(io::series_from_json(bad), InputError);
}

TEST(IoReps, RoundTrip) {
  InfRep r = hecke_rep({3, 1}, FieldElem(1, 2), FieldElem(3));
  InfRep r2 = io::infrep_from_json(io::to_json(r));
  EXPECT_EQ(r2.tau(), r.tau());
  EXPECT_EQ(r2.base().gens, r.base().gens);
  EXPECT_EQ(r2.base().form, r.base().form);
  EXPECT_EQ(r2.base().label, r.base().label);
  BraidRep R = lift(r, solve(1, 3, true));
  BraidRep R2 = io::braidrep_from_json(io::to_json(R));
  EXPECT_TRUE(equal(R, R2));
  EXPECT_EQ(R2.provenance.lambda, R.provenance.lambda);
  json broken = io::to_json(R);
  broken["N"] = 5;
  EXPECT_THROW(io::braidrep_from_json(broken), InputError);
}

TEST(IoPoints, RoundTrip) {
  VarietyPoint p = family_catalog("s3_std_plus_triv", {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}});
  VarietyPoint q = io::point_from_json(io::to_json(p));
  EXPECT_EQ(q.tau(), p.tau());
  EXPECT_EQ(q.blocks, p.blocks);
}

TEST(IoDiagrams, RoundTrip) {
  BratteliDiagram d = build_from_chain(hecke_rep({3, 1}, FieldElem(2, 3), 1));
  BratteliDiagram e = io::diagram_from_json(io::to_json(d));
  ASSERT_EQ(e.n(), d.n());
  EXPECT_TRUE(same_coloring(d, e));
  EXPECT_EQ(io::to_json(e), io::to_json(d));
  json broken = io::to_json(d);
  broken["levels"][2][0]["dim"] = 99;
  EXPECT_THROW(io::diagram_from_json(broken), InputError);
}

TEST(IoFiles, AtomicWriteAndRead) {
  auto dir = std::filesystem::temp_directory_path() / "braidrep_io_test";
  std::filesystem::create_directories(dir);
  auto p = dir / "x.json";
  io::write_json(p, json{{"k", "v"}});
  EXPECT_EQ(io::read_json(p)["k"], "v");
  EXPECT_FALSE(std::filesystem::exists(dir / "x.json.tmp"));
  {
    std::ofstream f(dir / "bad.json");
    f << "{ not json";
  }
  EXPECT_THROW(io::read_json(dir / "bad.json"), InputError);
  EXPECT_THROW(io::read_json(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}
