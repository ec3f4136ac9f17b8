#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "bgrip/core/constitutive.hpp"
#include "bgrip/core/quadrature.hpp"
#include "bgrip/core/validation.hpp"

using namespace bgrip;

namespace {

const CrossSection kBaselineSection{0.015, 0.006};

TEST(Quadrature, IntegratesPolynomialsExactly) {
  const GaussLegendreRule rule(8);
  // Degree 15 is exact for 8 points.
  const double v = rule.integrate([](double x) { return std::pow(x, 14) + 3.0 * x * x; }, -1.0, 1.0);
  EXPECT_NEAR(v, 2.0 / 15.0 + 2.0, 1e-14);
  double wsum = 0.0;
  for (double w : gauss_legendre_64().weights)
    wsum += w;
  EXPECT_NEAR(wsum, 2.0, 1e-13);
}

TEST(MomentCurvature, ZeroCurvatureCarriesNoMoment) {
  EXPECT_EQ(moment_curvature(0.0, kBaselineSection, LinearElastic{6e5}), 0.0);
  EXPECT_NEAR(moment_curvature(0.0, kBaselineSection, Yeoh{1e5, 0, 0}), 0.0, 1e-18);
}

TEST(MomentCurvature, LinearElasticIsEIKappa) {
  const double E = 6e5;
  for (double kappa : {-30.0, -1.0, 0.5, 12.0, 100.0})
    EXPECT_DOUBLE_EQ(moment_curvature(kappa, kBaselineSection, LinearElastic{E}),
                     E * kBaselineSection.second_moment() * kappa);
}

TEST(MomentCurvature, YeohMatchesSixC10InSmallStrain) {
  const Yeoh yeoh{1e5, 0.0, 0.0};
  const double t = kBaselineSection.thickness;
  const double kappa = 0.01 / (0.5 * t);
  const double lin = 6.0 * yeoh.c10 * kBaselineSection.second_moment() * kappa;
  EXPECT_NEAR(moment_curvature(kappa, kBaselineSection, yeoh), lin, 0.01 * lin);
}

TEST(MomentCurvature, YeohLinearisationErrorShrinksWithCurvature) {
  const Yeoh yeoh{1e5, -2e3, 5e2};
  const double t = kBaselineSection.thickness;
  double prev = 1.0;
  for (double strain : {1e-2, 1e-3, 1e-4}) {
    const double kappa = strain / (0.5 * t);
    const double lin = 6.0 * yeoh.c10 * kBaselineSection.second_moment() * kappa;
    const double err = std::abs(moment_curvature(kappa, kBaselineSection, yeoh) - lin) / lin;
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(MomentCurvature, QuadratureIsConverged) {
  // 64-point rule against a 200-point rule on the same integrand.
  const Yeoh yeoh{1e5, 3e3, 1e3};
  const double kappa = 0.5 / (0.5 * kBaselineSection.thickness);
  const GaussLegendreRule fine(200);
  const double half = 0.5 * kBaselineSection.thickness;
  const double ref = kBaselineSection.width *
                     fine.integrate([&](double z) { return yeoh_uniaxial_stress(1 + kappa * z, yeoh) * z; },
                                    -half, half);
  EXPECT_NEAR(moment_curvature(kappa, kBaselineSection, yeoh), ref, 1e-8 * std::abs(ref));
}

TEST(MomentCurvature, RejectsExcessiveFiberStrain) {
  const double kappa = 0.9 / (0.5 * kBaselineSection.thickness);
  EXPECT_THROW(moment_curvature(kappa, kBaselineSection, LinearElastic{}), ConstitutiveRangeError);
  EXPECT_THROW(moment_curvature(-kappa * 1.01, kBaselineSection, Yeoh{}), ConstitutiveRangeError);
  EXPECT_NO_THROW(moment_curvature(0.89 / (0.5 * kBaselineSection.thickness), kBaselineSection,
                                   Yeoh{}));
}

TEST(MomentCurvature, TangentMatchesFiniteDifference) {
  const Yeoh yeoh{1e5, 2e3, 4e2};
  for (double kappa : {-80.0, -5.0, 0.0, 20.0, 120.0}) {
    const double h = 1e-4;
    const double fd = (moment_curvature(kappa + h, kBaselineSection, yeoh) -
                       moment_curvature(kappa - h, kBaselineSection, yeoh)) /
                      (2 * h);
    EXPECT_NEAR(bending_tangent(kappa, kBaselineSection, yeoh), fd, 1e-6 * std::abs(fd));
  }
}

TEST(BendingEnergy, DerivativeIsMoment) {
  const Yeoh yeoh{1e5, 2e3, 4e2};
  for (double kappa : {-60.0, 15.0, 90.0}) {
    const double h = 1e-3;
    const double fd = (bending_energy_density(kappa + h, kBaselineSection, yeoh) -
                       bending_energy_density(kappa - h, kBaselineSection, yeoh)) /
                      (2 * h);
    EXPECT_NEAR(fd, moment_curvature(kappa, kBaselineSection, yeoh),
                1e-6 * std::abs(fd));
  }
}

TEST(Validation, YeohMonotonicityChecked) {
  GripperDesign d;
  d.finger.material = Yeoh{1e5, 0, 0};
  EXPECT_TRUE(validation_errors(d).empty());
  d.finger.material = Yeoh{1e5, -2e5, 0};
  const auto errs = validation_errors(d);
  ASSERT_EQ(errs.size(), 1u);
  EXPECT_NE(errs[0].find("monoton"), std::string::npos);
}

TEST(Validation, ReportsEveryViolation) {
  GripperDesign d;
  d.finger.length = -1;
  d.ring.stiffness = -1;
  d.inertia = 0;
  EXPECT_EQ(validation_errors(d).size(), 3u);
  EXPECT_THROW(validate(d), ContractViolation);
}

} // namespace
