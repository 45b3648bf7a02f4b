#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mtc/errors.hpp"
#include "mtc/modular.hpp"
#include "mtc/modular_json.hpp"
#include "mtc/simple_currents.hpp"
#include "oracles.hpp"

using mtc::ModularDatum;
using mtc::RelationMethod;
using mtc::Weight;

namespace {

Weight w(std::vector<int> labels) { return Weight{std::move(labels)}; }

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Twist, Examples) {
  EXPECT_TRUE(mtc::twist(3, 2, w({0, 0})).is_one());
  EXPECT_TRUE(mtc::twist(2, 4, w({4})).is_one());
  EXPECT_EQ(mtc::twist(2, 2, w({2})).turns(), mtc::Rational(1, 2));
  EXPECT_EQ(mtc::twist(2, 4, w({1})).turns(), mtc::Rational(7, 8));
}

TEST(Phase, Arithmetic) {
  const mtc::RationalPhase a(mtc::Rational(3, 4));
  const mtc::RationalPhase b(mtc::Rational(-5, 4));
  EXPECT_EQ(b.turns(), mtc::Rational(3, 4));
  EXPECT_EQ((a * b).turns(), mtc::Rational(1, 2));
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(a.pow(3).turns(), mtc::Rational(1, 4));
  EXPECT_EQ(a.pow(-1), a.inverse());
  EXPECT_NEAR(std::abs(a.value() - std::complex<double>(0, -1)), 0.0, 1e-15);
  EXPECT_EQ(mtc::parse_rational("-3/6"), mtc::Rational(-1, 2));
  EXPECT_THROW(mtc::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(mtc::parse_rational("x"), std::invalid_argument);
}

TEST(SMatrix, Su2LevelOne) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd expected(2, 2);
  expected << r, r, r, -r;
  EXPECT_LT(max_abs_diff(mtc::s_matrix(2, 1), expected), 1e-14);
}

TEST(SMatrix, Su2MatchesSineFormula) {
  for (int k = 0; k <= 24; ++k) EXPECT_LT(max_abs_diff(mtc::s_matrix(2, k), oracle::su2_s(k)), 1e-12) << "k=" << k;
}

TEST(SMatrix, MatchesWeylGroupSum) {
  for (int k = 0; k <= 6; ++k) EXPECT_LT(max_abs_diff(mtc::s_matrix(3, k), oracle::weyl_sum_s(3, k)), 1e-11) << k;
  for (int k = 0; k <= 3; ++k) EXPECT_LT(max_abs_diff(mtc::s_matrix(4, k), oracle::weyl_sum_s(4, k)), 1e-11) << k;
  EXPECT_LT(max_abs_diff(mtc::s_matrix(5, 2), oracle::weyl_sum_s(5, 2)), 1e-11);
}

TEST(SMatrix, QuantumDimensionsOfSu2Level4) {
  const ModularDatum d = mtc::build_modular_datum(2, 4);
  EXPECT_NEAR(d.qdim[2], 2.0, 1e-12);
  EXPECT_NEAR(d.qdim[4], 1.0, 1e-12);
  double total = 0.0;
  for (double q : d.qdim) total += q * q;
  EXPECT_NEAR(d.S(0, 0).real(), 1.0 / std::sqrt(total), 1e-14);
  EXPECT_NEAR(d.S(0, 0).imag(), 0.0, 1e-15);
}

TEST(ModularDatum, InvertibleObjectsHaveUnitDimension) {
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= 5; ++k) {
      const ModularDatum d = mtc::build_modular_datum(N, k);
      for (int p = 0; p < N; ++p)
        EXPECT_NEAR(d.qdim[d.alcove.index_of(mtc::simple_current(N, k, p).weight)], 1.0, 1e-10);
      for (double q : d.qdim) EXPECT_GT(q, 0.0);
    }
}

TEST(ModularDatum, ConjugationIsLabelReversal) {
  const ModularDatum d = mtc::build_modular_datum(4, 3);
  for (std::size_t i = 0; i < d.size(); ++i)
    EXPECT_EQ(d.alcove[d.conjugation[i]], mtc::conjugate(4, d.alcove[i]));
}

TEST(ModularDatum, TDiagonalMatchesTwists) {
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 6; ++k) {
      const ModularDatum d = mtc::build_modular_datum(N, k);
      for (std::size_t i = 0; i < d.size(); ++i)
        EXPECT_LT(std::abs(d.t_diagonal(static_cast<Eigen::Index>(i)) * d.zeta - d.theta[i].value()), 1e-12);
    }
}

TEST(ModularDatum, LevelZeroIsTrivial) {
  for (int N = 2; N <= 5; ++N) {
    const ModularDatum d = mtc::build_modular_datum(N, 0);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_LT(std::abs(d.S(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(d.zeta - 1.0), 1e-15);
    EXPECT_LT(std::abs(d.t_diagonal(0) - 1.0), 1e-15);
    const auto rep = mtc::verify_relations(d, RelationMethod::dense);
    EXPECT_LT(rep.max_residual(), 1e-15);
  }
}

TEST(Zeta, ThreeBranchesPassAndTheChosenOneWorks) {
  for (auto [N, k] : {std::pair{2, 1}, {3, 1}, {2, 4}, {4, 2}}) {
    const ModularDatum d = mtc::build_modular_datum(N, k);
    const auto sel = mtc::select_zeta(d.S, d.theta, d.qdim, mtc::central_charge(N, k));
    int passing = 0;
    for (bool b : sel.passing) passing += b;
    EXPECT_EQ(passing, 3);
    EXPECT_EQ(sel.zeta, d.zeta);
    for (const auto& z : sel.candidates) EXPECT_NEAR(std::abs(z), 1.0, 1e-14);
    const auto rep = mtc::verify_relations(d, RelationMethod::dense);
    EXPECT_LT(rep.st3_minus_s2, 1e-9);
  }
}

TEST(Zeta, NoBranchPassesForABrokenS) {
  ModularDatum d = mtc::build_modular_datum(3, 2);
  Eigen::MatrixXcd S = d.S;
  S.row(1).swap(S.row(2));
  EXPECT_THROW(mtc::select_zeta(S, d.theta, d.qdim, mtc::central_charge(3, 2)), mtc::InternalCheckFailed);
}

TEST(Relations, Su2Level4) {
  const auto rep = mtc::verify_relations(mtc::build_modular_datum(2, 4));
  EXPECT_EQ(rep.method, RelationMethod::dense);
  EXPECT_TRUE(rep.passed());
}

TEST(Relations, Su3Level2HasNonTrivialConjugation) {
  const ModularDatum d = mtc::build_modular_datum(3, 2);
  EXPECT_FALSE(d.c_matrix().isIdentity());
  EXPECT_LT(mtc::verify_relations(d).s2_minus_c, 1e-9);
}

TEST(Relations, BlockedAgreesWithDense) {
  for (auto [N, k] : {std::pair{2, 7}, {3, 5}, {4, 4}, {5, 3}, {6, 2}, {4, 5}}) {
    const ModularDatum d = mtc::build_modular_datum(N, k);
    const auto dense = mtc::verify_relations(d, RelationMethod::dense);
    const auto blocked = mtc::verify_relations(d, RelationMethod::simple_current_blocks);
    EXPECT_EQ(blocked.method, RelationMethod::simple_current_blocks);
    EXPECT_TRUE(dense.passed()) << N << " " << k;
    EXPECT_TRUE(blocked.passed()) << N << " " << k;
    // The blocked (ST)³ figure is an upper bound on the dense max norm.
    EXPECT_GE(blocked.st3_minus_s2 + 1e-15, dense.st3_minus_s2);
  }
}

TEST(Relations, BlockedDetectsCorruption) {
  ModularDatum d = mtc::build_modular_datum(3, 4);
  d.S(3, 5) += 1e-6;
  d.S(5, 3) += 1e-6;
  EXPECT_FALSE(mtc::verify_relations(d, RelationMethod::simple_current_blocks).passed());
  EXPECT_FALSE(mtc::verify_relations(d, RelationMethod::dense).passed());

  ModularDatum e = mtc::build_modular_datum(3, 4);
  e.t_diagonal(4) *= std::polar(1.0, 1e-5);
  EXPECT_GT(mtc::verify_relations(e, RelationMethod::simple_current_blocks).st3_minus_s2, 1e-9);
}

TEST(Relations, AutomaticSwitchesToBlocksForLargeAlcoves) {
  const ModularDatum d = mtc::build_modular_datum(4, 12);  // 455 weights
  const auto rep = mtc::verify_relations(d);
  EXPECT_EQ(rep.method, RelationMethod::simple_current_blocks);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(mtc::to_string(rep.method), "simple-current-blocks");
}

TEST(ModularJson, RoundTrip) {
  const ModularDatum d = mtc::build_modular_datum(3, 3);
  const auto j = mtc::to_json(d);
  EXPECT_EQ(j["schema"], "mtc.modular-datum/1");
  const ModularDatum back = mtc::modular_datum_from_json(j);
  EXPECT_EQ(back.N, 3);
  EXPECT_EQ(back.theta, d.theta);
  EXPECT_EQ(back.conformal_weights, d.conformal_weights);
  EXPECT_EQ(back.conjugation, d.conjugation);
  EXPECT_EQ(back.S, d.S);
  EXPECT_EQ(back.t_diagonal, d.t_diagonal);
  EXPECT_EQ(mtc::to_json(back).dump(), j.dump());
}

TEST(ModularJson, RejectsMalformedInput) {
  auto j = mtc::to_json(mtc::build_modular_datum(2, 2));
  auto bad_schema = j;
  bad_schema["schema"] = "other";
  EXPECT_THROW(mtc::modular_datum_from_json(bad_schema), mtc::InvalidArgument);
  auto missing = j;
  missing.erase("S");
  EXPECT_THROW(mtc::modular_datum_from_json(missing), mtc::InvalidArgument);
  auto short_theta = j;
  short_theta["theta"].erase(0);
  EXPECT_THROW(mtc::modular_datum_from_json(short_theta), mtc::InvalidArgument);
  auto wrong_type = j;
  wrong_type["N"] = "two";
  EXPECT_THROW(mtc::modular_datum_from_json(wrong_type), mtc::InvalidArgument);
}
