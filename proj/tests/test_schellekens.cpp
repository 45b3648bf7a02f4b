#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mtc/errors.hpp"
#include "mtc/invariants.hpp"
#include "mtc/modular.hpp"
#include "mtc/schellekens.hpp"
#include "oracles.hpp"

using mtc::Alcove;
using mtc::IntMatrix;
using mtc::Rational;
using mtc::Weight;

namespace {

Weight w(std::vector<int> labels) { return Weight{std::move(labels)}; }

IntMatrix z_of(int N, int k, int p) { return mtc::torus_partition_function(mtc::build_algebra(N, k, p)).Z; }

IntMatrix conjugation_matrix(int N, int k) {
  const Alcove a(N, k);
  std::vector<std::size_t> bar(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) bar[i] = a.index_of(mtc::conjugate(N, a[i]));
  return IntMatrix::permutation(bar);
}

}  // namespace

TEST(Character, UnitRowIsTrivial) {
  for (int N = 2; N <= 5; ++N)
    for (int p = 0; p < N; ++p) EXPECT_TRUE(mtc::character(N, 3, w(std::vector<int>(N - 1, 0)), mtc::simple_current(N, 3, p)).is_one());
}

TEST(Character, FundamentalWeightSeesOneOverN) {
  for (int N = 2; N <= 7; ++N)
    for (int k = 1; k <= 6; ++k) {
      std::vector<int> x(N - 1, 0);
      x[0] = 1;
      EXPECT_EQ(mtc::character(N, k, w(x), mtc::simple_current(N, k, 1)).turns(), Rational(1, N));
    }
}

TEST(Character, Su2Level4) {
  EXPECT_EQ(mtc::character(2, 4, w({1}), mtc::simple_current(2, 4, 1)).turns(), Rational(1, 2));
}

TEST(Character, IsAHomomorphismOnTheEffectiveCenter) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int N = 2 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 7);
    const Alcove a(N, k);
    const auto& x = a[rng() % a.size()];
    const auto center = mtc::effective_center(N, k);
    const int p = center.exponents[rng() % center.size()];
    const int q = center.exponents[rng() % center.size()];
    const auto lhs = mtc::character(N, k, x, mtc::simple_current(N, k, (p + q) % N));
    const auto rhs = mtc::character(N, k, x, mtc::simple_current(N, k, p)) *
                     mtc::character(N, k, x, mtc::simple_current(N, k, q));
    EXPECT_EQ(lhs, rhs) << "N=" << N << " k=" << k << " x=" << x.to_string() << " p=" << p << " q=" << q;
  }
}

TEST(Algebra, Construction) {
  const auto a = mtc::build_algebra(2, 4, 1);
  EXPECT_EQ(a.order_H, 2);
  EXPECT_TRUE(a.xi_base.is_one());
  EXPECT_EQ(a.support(), (std::vector<int>{0, 1}));
  EXPECT_THROW(mtc::build_algebra(4, 3, 1), mtc::SupportNotInEffectiveCenter);
  const auto t = mtc::build_algebra(5, 2, 0);
  EXPECT_TRUE(t.is_trivial_algebra());
  EXPECT_EQ(mtc::build_algebra(6, 4, 2).support(), (std::vector<int>{0, 2, 4}));
}

TEST(Algebra, XiIsSymmetricWithTwistOnTheDiagonal) {
  for (int N = 2; N <= 6; ++N)
    for (int k = 1; k <= 6; ++k)
      for (int p : mtc::effective_center(N, k).exponents) {
        const auto alg = mtc::build_algebra(N, k, p);
        for (int a = 0; a < alg.order_H; ++a) {
          EXPECT_EQ(alg.xi(a, a), mtc::twist(N, k, mtc::simple_current(N, k, a * p).weight));
          for (int b = 0; b < alg.order_H; ++b) EXPECT_EQ(alg.xi(a, b), alg.xi(b, a));
        }
      }
}

TEST(TorusPartitionFunction, Su2Level4) {
  IntMatrix expected(5);
  expected(0, 0) = expected(0, 4) = expected(4, 0) = expected(4, 4) = 1;
  expected(2, 2) = 2;
  EXPECT_EQ(z_of(2, 4, 1), expected);
}

TEST(TorusPartitionFunction, KnownCases) {
  EXPECT_EQ(z_of(2, 2, 1), IntMatrix::identity(3));
  EXPECT_EQ(z_of(3, 1, 1), conjugation_matrix(3, 1));
  EXPECT_EQ(z_of(3, 2, 1), conjugation_matrix(3, 2));
  EXPECT_EQ(z_of(4, 5, 0), IntMatrix::identity(Alcove(4, 5).size()));
  const IntMatrix z = z_of(4, 7, 2);
  const Alcove a(4, 7);
  EXPECT_EQ(z(a.index_of(w({7, 0, 0})), a.index_of(w({0, 0, 7}))), 1);
}

TEST(TorusPartitionFunction, MatchesComplexPhaseSum) {
  for (int N = 2; N <= 5; ++N)
    for (int k = 1; k <= 6; ++k)
      for (int p : mtc::effective_center(N, k).exponents) {
        const IntMatrix z = z_of(N, k, p);
        const auto ref = oracle::torus_partition_function(N, k, p);
        for (std::size_t i = 0; i < z.size(); ++i)
          for (std::size_t j = 0; j < z.size(); ++j) {
            ASSERT_NEAR(ref[i][j], std::round(ref[i][j]), 1e-9);
            ASSERT_EQ(z(i, j), static_cast<int>(std::lround(ref[i][j])))
                << "N=" << N << " k=" << k << " p=" << p << " (" << i << "," << j << ")";
          }
      }
}

TEST(TorusPartitionFunction, StructuralInvariants) {
  for (int N = 2; N <= 6; ++N)
    for (int k = 1; k <= 6; ++k)
      for (int p : mtc::effective_center(N, k).exponents) {
        const auto alg = mtc::build_algebra(N, k, p);
        const IntMatrix z = mtc::torus_partition_function(alg).Z;
        EXPECT_EQ(z(0, 0), 1);
        for (std::size_t i = 0; i < z.size(); ++i) {
          int row = 0;
          for (std::size_t j = 0; j < z.size(); ++j) {
            EXPECT_GE(z(i, j), 0);
            row += z(i, j);
          }
          EXPECT_LE(row, alg.order_H);
        }
      }
}

TEST(TorusPartitionFunction, CommutesWithST) {
  for (int N = 2; N <= 4; ++N)
    for (int k = 1; k <= 6; ++k) {
      const auto d = mtc::build_modular_datum(N, k);
      for (int p : mtc::effective_center(N, k).exponents) {
        const IntMatrix z = mtc::torus_partition_function(mtc::build_algebra(N, k, p), d.alcove).Z;
        EXPECT_LT(mtc::commutator_residual(z, d.S), 1e-9);
        EXPECT_LT(mtc::commutator_residual_diagonal(z, d.t_diagonal), 1e-9);
      }
    }
}

TEST(TorusPartitionFunction, RejectsMismatchedAlcove) {
  EXPECT_THROW(mtc::torus_partition_function(mtc::build_algebra(2, 4, 1), Alcove(2, 5)), mtc::InvalidArgument);
}

TEST(IsTrivial, Cases) {
  EXPECT_TRUE(mtc::is_trivial(IntMatrix::identity(4)));
  IntMatrix twice(3);
  for (int i = 0; i < 3; ++i) twice(i, i) = 2;
  EXPECT_TRUE(mtc::is_trivial(twice));
  EXPECT_FALSE(mtc::is_trivial(z_of(2, 4, 1)));
  EXPECT_FALSE(mtc::is_trivial(conjugation_matrix(3, 1)));
  IntMatrix uneven = IntMatrix::identity(2);
  uneven(1, 1) = 3;
  EXPECT_FALSE(mtc::is_trivial(uneven));
}

TEST(Cases, SupportSelection) {
  EXPECT_EQ(mtc::case_support(3, 5), 1);
  EXPECT_EQ(mtc::case_support(4, 7), 2);
  EXPECT_EQ(mtc::case_support(4, 6), 1);   // gcd(2, 3) = 1 but 4 ∤ 6
  EXPECT_EQ(mtc::case_support(6, 4), 2);   // gcd(3, 2) = 1 and 4 | 4
  EXPECT_EQ(mtc::case_support(2, 3), 0);
  EXPECT_EQ(mtc::case_support(2, 6), 1);
  EXPECT_EQ(mtc::covering_case(6, 12), "N|k");
  EXPECT_EQ(mtc::covering_case(5, 3), "N odd");
  EXPECT_EQ(mtc::covering_case(4, 6), "N,k even");
  EXPECT_EQ(mtc::covering_case(4, 7), "N even, k odd");
  EXPECT_EQ(mtc::covering_case(2, 7), "N=2");
}

TEST(Cases, SelectedSupportLiesInTheEffectiveCenter) {
  for (int N = 2; N <= 10; ++N)
    for (int k = 1; k <= 16; ++k)
      EXPECT_TRUE(mtc::effective_center(N, k).contains(mtc::case_support(N, k))) << N << " " << k;
}

TEST(Reducibility, Examples) {
  const auto r35 = mtc::reducibility_verdict(3, 5);
  EXPECT_FALSE(r35.trivial);
  EXPECT_EQ(r35.verdict, mtc::kVerdictReducible);

  const auto r47 = mtc::reducibility_verdict(4, 7);
  EXPECT_EQ(r47.support_generator, 2);
  EXPECT_FALSE(r47.trivial);
  ASSERT_TRUE(r47.proof_witness.has_value());
  const Alcove a(4, 7);
  EXPECT_EQ(a[r47.proof_witness->i], w({7, 0, 0}));
  EXPECT_EQ(a[r47.proof_witness->j], w({0, 0, 7}));
  EXPECT_EQ(r47.Z(r47.proof_witness->i, r47.proof_witness->j), 1);

  const auto r23 = mtc::reducibility_verdict(2, 3);
  EXPECT_TRUE(r23.trivial);
  EXPECT_EQ(r23.support_order, 1);
  EXPECT_FALSE(r23.witness.has_value());
  EXPECT_EQ(r23.verdict, mtc::kVerdictNoConclusion);

  const auto r22 = mtc::reducibility_verdict(2, 2);
  EXPECT_TRUE(r22.trivial);
  EXPECT_EQ(r22.verdict, mtc::kVerdictNoConclusion);
  EXPECT_EQ(mtc::reducibility_verdict(2, 4).verdict, mtc::kVerdictReducible);

  EXPECT_THROW(mtc::reducibility_verdict(2, 0), mtc::InvalidArgument);
}

TEST(Reducibility, Su2VerdictFollowsLevelParity) {
  for (int k = 1; k <= 20; ++k) {
    const auto r = mtc::reducibility_verdict(2, k);
    const bool reducible = k % 2 == 0 && k >= 4;
    EXPECT_EQ(r.verdict, reducible ? mtc::kVerdictReducible : mtc::kVerdictNoConclusion) << k;
  }
}

TEST(Reducibility, ListsEverySupportInsideTheCenter) {
  const auto r = mtc::reducibility_verdict(6, 4);
  std::vector<int> generators;
  for (const auto& s : r.supports) generators.push_back(s.generator);
  EXPECT_EQ(generators, (std::vector<int>{1, 2, 3, 0}));
  EXPECT_TRUE(r.supports.back().trivial);
  EXPECT_EQ(r.supports.back().order, 1);
}

TEST(Reducibility, ExplicitSupportOverridesTheCaseChoice) {
  const auto r = mtc::reducibility_verdict(6, 4, 3);
  EXPECT_EQ(r.support_generator, 3);
  EXPECT_EQ(r.support_order, 2);
  EXPECT_FALSE(r.proof_witness.has_value());
  EXPECT_THROW(mtc::reducibility_verdict(4, 3, 1), mtc::SupportNotInEffectiveCenter);
}
