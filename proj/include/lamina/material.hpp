#pragma once

/**
 * @file material.hpp
 * @brief Ply constitutive data in engineering, matrix and polar form.
 *
 * A unidirectional ply is described by its engineering constants, from which
 * the plane-stress reduced stiffness Q and its polar invariants follow:
 *
 *   8 T0 = Q11 - 2 Q12 + 4 Q66 + Q22
 *   8 T1 = Q11 + 2 Q12 + Q22
 *   8 R0 e^{4i Phi0} = Q11 - 2 Q12 - 4 Q66 + Q22
 *   8 R1 e^{2i Phi1} = Q11 - Q22
 *
 * In the material frame Phi0 in {0, pi/4} and Phi1 in {0, pi/2}; the fifth
 * invariant Phi0 - Phi1 = K pi/4 (mod pi/2) fixes the orthotropy class K.
 *
 * All angles are radians.
 */

#include <stdexcept>
#include <string>

namespace lamina {

/// Raised for material data that is non-physical or outside the model.
class MaterialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a Poisson's ratio denominator vanishes. Never a valid design.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EngineeringConstants {
    std::string name;
    double e1 = 0.0;    ///< GPa
    double e2 = 0.0;    ///< GPa
    double g12 = 0.0;   ///< GPa
    double nu12 = 0.0;

    double nu21() const { return nu12 * e2 / e1; }
};

/// Throws MaterialError unless moduli are positive and nu12^2 < E1/E2.
void check_physical(const EngineeringConstants& ec);

struct ReducedStiffness {
    double q11 = 0.0;
    double q12 = 0.0;
    double q22 = 0.0;
    double q66 = 0.0;
};

struct PolarParameters {
    double t0 = 0.0;
    double t1 = 0.0;
    double r0 = 0.0;
    double r1 = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
    int k = 0;

    /// (-1)^K
    double k_sign() const { return k == 0 ? 1.0 : -1.0; }
};

/// Reduced material description (T0, T1, R0 scaled by R1) plus K.
struct DimensionlessMaterial {
    double tau0 = 0.0;
    double tau1 = 0.0;
    double rho = 0.0;
    int k = 0;

    /// (-1)^K rho: every formula depends on rho and K only through this.
    double signed_rho() const { return k == 0 ? rho : -rho; }
};

ReducedStiffness reduce_stiffness(const EngineeringConstants& ec);

PolarParameters polar_from_stiffness(const ReducedStiffness& q);

/// Reduces an angle difference to the orthotropy class K in {0, 1}.
int orthotropy_class(double phi0, double phi1);

DimensionlessMaterial dimensionless(const PolarParameters& p);

/// Convenience chain: engineering constants -> dimensionless material.
DimensionlessMaterial dimensionless(const EngineeringConstants& ec);

/// 4 T1 (T0^2 - R0^2) - 8 R1^2 [T0 - R0 cos 4(Phi0 - Phi1)].
/// Equals one quarter of the determinant of the Kelvin-normalized 3x3 Q.
double determinant_delta(const PolarParameters& p);

/**
 * Polar parameters of the compliance S = Q^-1, in the same tensor convention
 * as the stiffness (so that S11(0) = 1/E1). Throws MaterialError if the
 * determinant is not positive.
 */
PolarParameters compliance_polar(const PolarParameters& p);

/// nu12(theta) = -S12(theta)/S11(theta) evaluated from compliance polar moduli.
double nu12_from_compliance(const PolarParameters& s, double theta);

/// Directional Poisson's ratio of the single ply from its stiffness polar
/// parameters. Throws PoleError when the denominator vanishes.
double nu12_ply(const PolarParameters& p, double theta);

}  // namespace lamina
