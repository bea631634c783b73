#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "hermsymp/torus.hpp"

using namespace hermsymp;

TEST(TorusModel, GramAndGammaMatchTheHarmonicForms) {
  const double t = 2.0;
  const TorusModel<double> model(t);
  const double area = 4 * std::numbers::pi * std::numbers::pi;
  const auto& g = model.space()->gram();
  EXPECT_DOUBLE_EQ(g(0, 0).real(), area * t);
  EXPECT_DOUBLE_EQ(g(1, 1).real(), area * t);
  EXPECT_DOUBLE_EQ(g(2, 2).real(), area / t);
  EXPECT_DOUBLE_EQ(g(3, 3).real(), area / t);
  const auto& gamma = model.space()->gamma();
  EXPECT_EQ(gamma(3, 0).real(), t);
  EXPECT_EQ(gamma(2, 1).real(), t);
  EXPECT_EQ(gamma(1, 2).real(), -1 / t);
  EXPECT_EQ(gamma(0, 3).real(), -1 / t);
}

TEST(TorusModel, RejectsBadInput) {
  EXPECT_THROW(TorusModel<double>(0.0), ValidationError);
  EXPECT_THROW(TorusModel<double>(-1.0), ValidationError);
  const TorusModel<double> model(1.0);
  EXPECT_THROW(integer_pair_lagrangian(model, 0, 0), ValidationError);
  EXPECT_THROW(torus_m_closed_form<double>(0, 0, 1, 0, 1.0), ValidationError);
}

TEST(TorusM, SpotValueByBothRoutes) {
  EXPECT_NEAR(torus_m_closed_form<double>(1, 1, 1, 0, 1.0), -0.5, 1e-10);
  EXPECT_NEAR(torus_m_generic<double>(1, 1, 1, 0, 1.0), -0.5, 1e-10);
}

TEST(TorusM, EqualPairsGiveZero) {
  for (double t : {0.1, 0.7, 1.0, 9.0}) {
    EXPECT_NEAR(torus_m_closed_form<double>(2, -3, 2, -3, t), 0.0, 1e-12);
    EXPECT_NEAR(torus_m_generic<double>(2, -3, 2, -3, t), 0.0, 1e-12);
    EXPECT_NEAR(torus_m_closed_form<double>(1, 2, -2, -4, t), 0.0, 1e-12);
  }
}

TEST(TorusM, HorizontalSecondPairSpecialization) {
  // B = 0: m = -1 + dim(V_X cap V_Y) - (1/(pi i)) log((b + ita)/(b - ita)).
  for (double t : {0.2, 1.0, 3.5}) {
    for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {-1, 4}, {3, -1}}) {
      for (int big_a : {1, -2}) {
        const std::complex<double> it(0, t);
        const auto z = (double(b) + it * double(a)) / (double(b) - it * double(a));
        const int dim = 1 + (b == 0 ? 1 : 0);
        const double expected = -1 + dim - std::log(z).imag() / std::numbers::pi;
        EXPECT_NEAR(torus_m_closed_form<double>(a, b, big_a, 0, t), expected, 1e-12);
      }
    }
  }
}

TEST(TorusM, LogEqualsArgumentOfSquare) {
  for (double t : {0.3, 1.0, 2.0}) {
    for (auto [a, b] : {std::pair{1, 1}, {2, 3}, {-1, 4}, {3, -1}, {1, -1}}) {
      const std::complex<double> it(0, t);
      const double log_imag = std::log((double(b) + it * double(a)) / (double(b) - it * double(a))).imag();
      double expected = 2 * std::atan2(t * a, double(b));
      if (expected > std::numbers::pi) expected -= 2 * std::numbers::pi;
      if (expected <= -std::numbers::pi) expected += 2 * std::numbers::pi;
      EXPECT_NEAR(log_imag, expected, 1e-12) << a << " " << b << " " << t;
      EXPECT_NEAR(log_imag, std::arg(std::pow(double(b) + it * double(a), 2)), 1e-12);
    }
  }
}

TEST(TorusM, ClosedFormAgreesWithGenericAlgorithm) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> coeff(-10, 10);
  std::uniform_real_distribution<double> log_t(std::log(0.1), std::log(10.0));
  for (int trial = 0; trial < 300; ++trial) {
    int a, b, big_a, big_b;
    do {
      a = coeff(rng), b = coeff(rng);
    } while (a == 0 && b == 0);
    do {
      big_a = coeff(rng), big_b = coeff(rng);
    } while (big_a == 0 && big_b == 0);
    const double t = std::exp(log_t(rng));
    EXPECT_NEAR(torus_m_closed_form<double>(a, b, big_a, big_b, t), torus_m_generic<double>(a, b, big_a, big_b, t),
                1e-9)
        << a << " " << b << " " << big_a << " " << big_b << " t=" << t;
  }
}

TEST(TorusSweep, MetricDependence) {
  const auto report = torus_m_sweep<double>(1, 1, 1, 0, {0.5, 1.0, 2.0});
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_LT(report.max_delta, 1e-9);
  EXPECT_TRUE(report.varies);
  std::set<long> distinct;
  for (const auto& row : report.rows) distinct.insert(std::lround(row.m_generic * 1e6));
  EXPECT_EQ(distinct.size(), 3u);
  EXPECT_NEAR(report.rows[1].m_generic, -0.5, 1e-10);
}

TEST(TorusSweep, CoordinateAxesPairIsConstant) {
  const auto report = torus_m_sweep<double>(1, 0, 0, 1, linspace(0.1, 10.0, 25));
  EXPECT_FALSE(report.varies);
  for (const auto& row : report.rows) EXPECT_NEAR(row.m_generic, 0.0, 1e-12);
}

TEST(TorusSweep, ScalingTheIntegerPairChangesNothing) {
  const auto ts = linspace(0.2, 5.0, 9);
  const auto base = torus_m_sweep<double>(2, 3, 1, 0, ts);
  const auto scaled = torus_m_sweep<double>(4, 6, 1, 0, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_NEAR(base.rows[i].m_generic, scaled.rows[i].m_generic, 1e-12);
    EXPECT_NEAR(base.rows[i].m_closed, scaled.rows[i].m_closed, 1e-12);
  }
  const TorusModel<double> model(1.3);
  EXPECT_TRUE(subspace_equal(integer_pair_lagrangian(model, 4, 6, true), integer_pair_lagrangian(model, 4, 6)));
}

TEST(Linspace, Endpoints) {
  const auto one = linspace(2.0, 3.0, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], 2.0);
  const auto many = linspace(0.5, 2.0, 4);
  EXPECT_EQ(many.front(), 0.5);
  EXPECT_EQ(many.back(), 2.0);
}
