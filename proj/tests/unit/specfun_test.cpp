// Copyright 2026 The flowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "flowlab/errors.hpp"
#include "flowlab/specfun.hpp"
#include "oracles.hpp"

namespace {

using flowlab::specfun::BesselKind;
using flowlab::specfun::BesselOrder;
using flowlab::specfun::bessel_i;
using flowlab::specfun::bessel_j;
using flowlab::specfun::bessel_series_oracle;

constexpr int kOracleTerms = 200;

double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(want), std::numeric_limits<double>::min());
  return std::fabs(got - want) / scale;
}

TEST(Specfun, TrivialValues) {
  EXPECT_EQ(bessel_j(BesselOrder(0), 0.0), 1.0);
  EXPECT_EQ(bessel_j(BesselOrder(1), 0.0), 0.0);
  EXPECT_EQ(bessel_i(BesselOrder(0), 0.0), 1.0);
  EXPECT_EQ(bessel_i(BesselOrder(3), 0.0), 0.0);
}

TEST(Specfun, FirstZeroOfJ0) {
  // Bisection on the oracle itself.
  double lo = 2.0, hi = 3.0;
  for (int k = 0; k < 80; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_series_oracle(BesselKind::J, BesselOrder(0), mid, 80) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  EXPECT_NEAR(0.5 * (lo + hi), 2.4048255576957727, 1e-14);
  EXPECT_NEAR(bessel_j(BesselOrder(0), 2.4048255576957727), 0.0, 1e-10);
}

TEST(Specfun, I0AtOne) {
  long double sum = 0.0L, term = 1.0L;
  for (int k = 1; k < 40; ++k) {
    sum += term;
    term *= 0.25L / (static_cast<long double>(k) * k);
  }
  EXPECT_NEAR(static_cast<double>(sum), 1.2660658777520084, 1e-15);
  EXPECT_NEAR(bessel_i(BesselOrder(0), 1.0), 1.2660658777520084, 1e-12);
}

TEST(Specfun, OracleExamples) {
  EXPECT_EQ(bessel_series_oracle(BesselKind::J, BesselOrder(0), 0.0, 1), 1.0);
  EXPECT_NEAR(bessel_series_oracle(BesselKind::I, BesselOrder(1), 2.0, 40), bessel_i(BesselOrder(1), 2.0), 1e-12);
  EXPECT_NEAR(bessel_series_oracle(BesselKind::J, BesselOrder(2), 1.0, 40), 0.11490348493190048, 1e-12);
}

TEST(Specfun, OracleRejectsTruncatedSeries) {
  EXPECT_THROW(bessel_series_oracle(BesselKind::J, BesselOrder(0), 20.0, 5), flowlab::ConvergenceError);
  EXPECT_THROW(bessel_series_oracle(BesselKind::I, BesselOrder(3), 10.0, 3), flowlab::ConvergenceError);
}

TEST(Specfun, DomainAndOverflowErrors) {
  EXPECT_THROW(bessel_j(BesselOrder(0), -1.0), flowlab::DomainError);
  EXPECT_THROW(bessel_i(BesselOrder(0), -1e-300), flowlab::DomainError);
  EXPECT_THROW(bessel_j(BesselOrder(2), std::numeric_limits<double>::quiet_NaN()), flowlab::DomainError);
  EXPECT_THROW(bessel_i(BesselOrder(1), std::numeric_limits<double>::infinity()), flowlab::DomainError);
  EXPECT_THROW(bessel_i(BesselOrder(0), 500.5), flowlab::OverflowError);
  EXPECT_NO_THROW(bessel_i(BesselOrder(0), 500.0));
}

TEST(Specfun, Reflection) {
  for (int n = 1; n <= 12; ++n) {
    for (double x : {0.3, 2.0, 7.5, 19.0}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      EXPECT_EQ(bessel_j(BesselOrder(-n), x), sign * bessel_j(BesselOrder(n), x));
      EXPECT_EQ(bessel_i(BesselOrder(-n), x), bessel_i(BesselOrder(n), x));
    }
  }
}

TEST(Specfun, AgreesWithSeriesOracle) {
  double worst_j = 0.0, worst_i = 0.0;
  for (int n = 0; n <= 40; ++n) {
    for (double x = 0.25; x <= 50.0; x += 0.25) {
      const double oj = bessel_series_oracle(BesselKind::J, BesselOrder(n), x, kOracleTerms);
      const double oi = bessel_series_oracle(BesselKind::I, BesselOrder(n), x, kOracleTerms);
      if (oj != 0.0 && std::fabs(oj) > 1e-280) worst_j = std::max(worst_j, rel_err(bessel_j(BesselOrder(n), x), oj));
      worst_i = std::max(worst_i, rel_err(bessel_i(BesselOrder(n), x), oi));
    }
  }
  EXPECT_LT(worst_j, 1e-12);
  EXPECT_LT(worst_i, 1e-12);
}

TEST(Specfun, AgreesWithBoostMath) {
  for (int n = 0; n <= 20; ++n) {
    for (double x = 0.5; x <= 30.0; x += 0.5) {
      EXPECT_LT(rel_err(bessel_i(BesselOrder(n), x), flowlab::oracle::reference_bessel_i(n, x)), 1e-12);
      const double ref = flowlab::oracle::reference_bessel_j(n, x);
      EXPECT_NEAR(bessel_j(BesselOrder(n), x), ref, 1e-13 * std::max(1.0, std::fabs(ref)) + 1e-15);
    }
  }
}

TEST(Specfun, PairsMatchSingleEvaluations) {
  for (int n = -6; n <= 20; ++n) {
    for (double x : {0.0, 0.1, 3.0, 9.99, 10.0, 25.0}) {
      const auto pj = flowlab::specfun::bessel_j_pair(BesselOrder(n), x);
      const auto pi = flowlab::specfun::bessel_i_pair(BesselOrder(n), x);
      EXPECT_NEAR(pj.lower, bessel_j(BesselOrder(n), x), 1e-15);
      EXPECT_NEAR(pj.upper, bessel_j(BesselOrder(n + 1), x), 1e-15);
      EXPECT_LT(rel_err(pi.lower, bessel_i(BesselOrder(n), x)), 1e-14);
      EXPECT_LT(rel_err(pi.upper, bessel_i(BesselOrder(n + 1), x)), 1e-14);
    }
  }
}

TEST(Specfun, RecurrenceResiduals) {
  double worst_j = 0.0, worst_i = 0.0;
  for (int n = 1; n <= 20; ++n) {
    for (double x = 0.1; x <= 30.0; x += 0.1) {
      const double jm = bessel_j(BesselOrder(n - 1), x), j0 = bessel_j(BesselOrder(n), x),
                   jp = bessel_j(BesselOrder(n + 1), x);
      const double im = bessel_i(BesselOrder(n - 1), x), i0 = bessel_i(BesselOrder(n), x),
                   ip = bessel_i(BesselOrder(n + 1), x);
      worst_j = std::max(worst_j, std::fabs(jm + jp - (2.0 * n / x) * j0));
      worst_i = std::max(worst_i, std::fabs(im - ip - (2.0 * n / x) * i0) / std::max(1.0, im));
    }
  }
  EXPECT_LT(worst_j, 1e-10);
  EXPECT_LT(worst_i, 1e-10);
}

TEST(Specfun, IDecreasesWithOrder) {
  for (int n = 0; n <= 40; ++n) {
    for (double x = 0.05; x <= 50.0; x += 0.05) {
      const double a = bessel_i(BesselOrder(n), x);
      const double b = bessel_i(BesselOrder(n + 1), x);
      ASSERT_GT(a, 0.0);
      ASSERT_GT(a, b) << "n=" << n << " x=" << x;
    }
  }
}

}  // namespace
