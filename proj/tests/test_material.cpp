#include <gtest/gtest.h>

#include <cmath>

#include "lamina/material.hpp"
#include "support.hpp"

namespace lamina {
namespace {

using test::kPi;

EngineeringConstants carbon() { return {"carbon", 181.0, 10.3, 7.17, 0.28}; }

TEST(ReduceStiffness, MatchesClosedForm) {
    const auto q = reduce_stiffness(carbon());
    const double nu21 = 0.28 * 10.3 / 181.0;
    const double d = 1.0 - 0.28 * nu21;
    EXPECT_DOUBLE_EQ(q.q11, 181.0 / d);
    EXPECT_DOUBLE_EQ(q.q22, 10.3 / d);
    EXPECT_DOUBLE_EQ(q.q12, 0.28 * 10.3 / d);
    EXPECT_DOUBLE_EQ(q.q66, 7.17);
    EXPECT_NEAR(q.q12, nu21 * q.q11, 1e-12);
}

TEST(ReduceStiffness, RejectsNonPhysicalPoisson) {
    // nu12^2 >= E1/E2
    EXPECT_THROW(reduce_stiffness({"bad", 1.0, 4.0, 1.0, 0.5}), MaterialError);
    EXPECT_THROW(reduce_stiffness({"edge", 1.0, 4.0, 1.0, 0.5000001}), MaterialError);
    EXPECT_NO_THROW(reduce_stiffness({"ok", 1.0, 4.0, 1.0, 0.4999}));
}

TEST(ReduceStiffness, RejectsNonPositiveModuli) {
    EXPECT_THROW(reduce_stiffness({"e1", 0.0, 1.0, 1.0, 0.2}), MaterialError);
    EXPECT_THROW(reduce_stiffness({"e2", 1.0, -1.0, 1.0, 0.2}), MaterialError);
    EXPECT_THROW(reduce_stiffness({"g", 1.0, 1.0, 0.0, 0.2}), MaterialError);
    EXPECT_THROW(reduce_stiffness({"nan", 1.0, 1.0, 1.0, std::nan("")}), MaterialError);
}

TEST(PolarFromStiffness, UnidirectionalPlyIsClassZero) {
    const auto p = polar_from_stiffness(reduce_stiffness(carbon()));
    EXPECT_EQ(p.phi0, 0.0);
    EXPECT_EQ(p.phi1, 0.0);
    EXPECT_EQ(p.k, 0);
    EXPECT_GT(p.r0, 0.0);
    EXPECT_GT(p.r1, 0.0);
}

TEST(PolarFromStiffness, NegativeHarmonicsShiftTheAngles) {
    // Q11 < Q22 and Q11 - 2Q12 - 4Q66 + Q22 < 0.
    const ReducedStiffness q{2.0, 0.5, 10.0, 4.0};
    const auto p = polar_from_stiffness(q);
    EXPECT_DOUBLE_EQ(p.phi1, kPi / 2.0);
    EXPECT_DOUBLE_EQ(p.phi0, kPi / 4.0);
    EXPECT_EQ(p.k, orthotropy_class(p.phi0, p.phi1));
    EXPECT_EQ(p.k, 1);
}

TEST(PolarFromStiffness, IsotropicHasNoAnisotropicPart) {
    const double e = 70.0, nu = 0.3;
    const ReducedStiffness q{e / (1 - nu * nu), nu * e / (1 - nu * nu), e / (1 - nu * nu), e / (2 * (1 + nu))};
    const auto p = polar_from_stiffness(q);
    EXPECT_NEAR(p.r0, 0.0, 1e-12);
    EXPECT_NEAR(p.r1, 0.0, 1e-12);
    EXPECT_THROW(dimensionless(p), MaterialError);
}

TEST(PolarFromStiffness, ReconstructsComponentsAtAnyAngle) {
    // Q11(theta) = T0 + 2T1 + R0 cos4(Phi0 - theta) + 4R1 cos2(Phi1 - theta),
    // checked against the rotated matrix.
    const auto q = reduce_stiffness(carbon());
    const auto p = polar_from_stiffness(q);
    for (double t : {0.0, 0.2, 0.7, 1.1, 1.5}) {
        const auto m = test::rotate(test::mandel(q), t);
        const double q11 = p.t0 + 2 * p.t1 + p.r0 * std::cos(4 * (p.phi0 - t)) + 4 * p.r1 * std::cos(2 * (p.phi1 - t));
        const double q12 = -p.t0 + 2 * p.t1 - p.r0 * std::cos(4 * (p.phi0 - t));
        EXPECT_NEAR(m[0][0], q11, 1e-10 * q.q11);
        EXPECT_NEAR(m[0][1], q12, 1e-10 * q.q11);
    }
}

TEST(OrthotropyClass, ReducesModuloHalfPi) {
    EXPECT_EQ(orthotropy_class(0.0, 0.0), 0);
    EXPECT_EQ(orthotropy_class(kPi / 4.0, 0.0), 1);
    EXPECT_EQ(orthotropy_class(0.0, kPi / 2.0), 0);
    EXPECT_EQ(orthotropy_class(kPi / 4.0, kPi / 2.0), 1);
    EXPECT_EQ(orthotropy_class(-kPi / 4.0, 0.0), 1);
}

TEST(Dimensionless, ListedModuliGiveListedRatios) {
    for (const auto& row : test::kPlies) {
        PolarParameters p{row.t0, row.t1, row.r0, row.r1, 0.0, 0.0, 0};
        const auto d = dimensionless(p);
        // Moduli carry +-0.005 and ratios +-5e-4 of rounding; both propagate through 1/R1.
        const auto tol = [&](double ratio) { return 5e-4 + 0.005 * (1.0 + ratio) / row.r1 + 1e-12; };
        EXPECT_NEAR(d.tau0, row.tau0, tol(row.tau0)) << row.id;
        EXPECT_NEAR(d.tau1, row.tau1, tol(row.tau1)) << row.id;
        EXPECT_NEAR(d.rho, row.rho, tol(row.rho)) << row.id;
    }
}

TEST(Dimensionless, RejectsVanishingR0) {
    PolarParameters p{10.0, 10.0, 0.0, 3.0, 0.0, 0.0, 0};
    EXPECT_THROW(dimensionless(p), MaterialError);
}

TEST(Dimensionless, SignedRhoCarriesK) {
    DimensionlessMaterial d{1.2, 1.1, 0.9, 1};
    EXPECT_DOUBLE_EQ(d.signed_rho(), -0.9);
    d.k = 0;
    EXPECT_DOUBLE_EQ(d.signed_rho(), 0.9);
}

TEST(DeterminantDelta, IsQuarterOfMandelDeterminant) {
    test::Generator gen(11);
    for (int i = 0; i < 200; ++i) {
        const auto q = reduce_stiffness(gen.ply());
        const auto p = polar_from_stiffness(q);
        const double d = test::det(test::mandel(q));
        EXPECT_NEAR(4.0 * determinant_delta(p), d, 1e-9 * std::abs(d));
    }
}

TEST(DeterminantDelta, PositiveForPhysicalPlies) {
    for (const auto& row : test::kPlies) {
        EXPECT_GT(determinant_delta(polar_from_stiffness(reduce_stiffness(test::constants(row)))), 0.0);
    }
}

/// Polar moduli of S = Q^-1 computed from the inverted matrix.
PolarParameters inverted_polar(const ReducedStiffness& q) {
    const auto s = test::inverse(test::mandel(q));
    return polar_from_stiffness({s[0][0], s[0][1], s[1][1], s[2][2] / 2.0});
}

TEST(CompliancePolar, MatchesMatrixInversion) {
    test::Generator gen(17);
    for (int i = 0; i < 500; ++i) {
        const auto q = reduce_stiffness(gen.ply());
        const auto s = compliance_polar(polar_from_stiffness(q));
        const auto ref = inverted_polar(q);
        const double scale = ref.t0 + ref.t1;
        EXPECT_NEAR(s.t0, ref.t0, 1e-9 * scale);
        EXPECT_NEAR(s.t1, ref.t1, 1e-9 * scale);
        EXPECT_NEAR(s.r0, ref.r0, 1e-9 * scale);
        EXPECT_NEAR(s.r1, ref.r1, 1e-9 * scale);
        EXPECT_EQ(s.k, ref.k);
    }
}

TEST(CompliancePolar, AxialComplianceIsInverseModulus) {
    const auto ec = carbon();
    const auto s = compliance_polar(polar_from_stiffness(reduce_stiffness(ec)));
    const double s11 = s.t0 + 2 * s.t1 + s.r0 * std::cos(4 * s.phi0) + 4 * s.r1 * std::cos(2 * s.phi1);
    EXPECT_NEAR(s11, 1.0 / ec.e1, 1e-12);
}

TEST(CompliancePolar, RejectsIndefiniteStiffness) {
    PolarParameters p{1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0};
    EXPECT_THROW(compliance_polar(p), MaterialError);
}

TEST(Nu12Ply, AxisValueIsEngineeringPoisson) {
    const auto ec = carbon();
    const auto p = polar_from_stiffness(reduce_stiffness(ec));
    EXPECT_NEAR(nu12_ply(p, 0.0), ec.nu12, 1e-12);
    EXPECT_NEAR(nu12_ply(p, kPi / 2.0), ec.nu21(), 1e-12);
}

TEST(Nu12Ply, MatchesRotatedMatrixOracle) {
    test::Generator gen(23);
    for (int i = 0; i < 300; ++i) {
        const auto q = reduce_stiffness(gen.ply());
        const auto p = polar_from_stiffness(q);
        const auto s = compliance_polar(p);
        const double t = gen.angle(-kPi, kPi);
        const double ref = test::nu12_matrix(test::mandel(q), t);
        EXPECT_NEAR(nu12_ply(p, t), ref, 1e-9 * (1 + std::abs(ref)));
        EXPECT_NEAR(nu12_from_compliance(s, t), ref, 1e-9 * (1 + std::abs(ref)));
    }
}

TEST(Nu12Ply, ClassOneMaterialMatchesOracle) {
    const ReducedStiffness q{2.0, 0.5, 10.0, 4.0};
    const auto p = polar_from_stiffness(q);
    ASSERT_EQ(p.k, 1);
    for (double t = 0.0; t < kPi; t += 0.13) {
        EXPECT_NEAR(nu12_ply(p, t), test::nu12_matrix(test::mandel(q), t), 1e-10);
    }
}

TEST(Nu12Ply, PoleThrows) {
    // Indefinite stiffness whose S11 denominator vanishes at theta = 0.
    PolarParameters p{1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0};
    p.r1 = 0.5;
    p.r0 = 1.0;
    EXPECT_THROW(nu12_ply(p, 0.0), PoleError);
}

}  // namespace
}  // namespace lamina
