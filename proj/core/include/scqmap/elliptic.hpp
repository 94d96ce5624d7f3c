#ifndef SCQMAP_ELLIPTIC_HPP
#define SCQMAP_ELLIPTIC_HPP

#include <array>

#include "scqmap/numerics.hpp"

namespace scq::elliptic {

// Values of the Jacobi theta constants at z=0 for a real nome q in (0,1).
struct ThetaConstants {
    double t2, t3, t4;
};

// theta_2(0|q), theta_3(0|q), theta_4(0|q); series truncated at term < 1e-16.
ThetaConstants theta_constants(double q);

/**
 * Half-period data of a Weierstrass P-function with omega1 real positive and
 * omega2 purely imaginary, together with the values e_i = P(omega_i).
 * "Normalized" means the periods are scaled so that e1 - e2 = 4; then the
 * Jacobi modulus is k^2 = (e3-e2)/4 = cos^2 t.
 */
struct HalfPeriods {
    double omega1;      // real half-period
    double omega2_mag;  // omega2 = i * omega2_mag
    double e1, e2, e3;  // e2 < e3 < e1
    double tau_imag;    // tau = omega2/omega1 = i * tau_imag
    bool normalized;

    cplx omega2() const { return {0.0, omega2_mag}; }
    cplx omega3() const { return {omega1, omega2_mag}; }
    double g2() const { return -4.0 * (e1 * e2 + e1 * e3 + e2 * e3); }
    double g3() const { return 4.0 * e1 * e2 * e3; }
    double modulus_k2() const { return (e3 - e2) / (e1 - e2); }
};

// Unique normalized pair realizing the ratio tau (purely imaginary, Im > 0):
// r = sqrt(P(1/2) - P(tau/2))/4 for the period lattice (1,tau), omega1 = r,
// omega2 = r*tau, with P(1/2), P(tau/2) from theta constants.
HalfPeriods normalized_half_periods(cplx tau);

// Weierstrass P through the descending-Landen sn:
//   P(z) = e2 + (e1-e2)/sn^2(sqrt(e1-e2) z | k^2),  k^2 = (e3-e2)/(e1-e2).
cplx wp(cplx z, const HalfPeriods& hp);

// Jacobi sn for complex argument and real modulus k in [0,1).
cplx sn(cplx u, double k);

// Straight-segment quadrature path from 0 to endpoint.
struct QuadraturePath {
    cplx endpoint;
    int panels = 48;               // composite 16-point Gauss-Legendre panels
    bool endpoint_singular = false;  // sqrt(1-s) substitution near the endpoint
};

/**
 * Complex elliptic integral
 *   E(z) = int_0^z dw / sqrt(w^4 - 2 cos(2t) w^2 + 1)
 * along the straight segment, principal branch with E(0)=0, E'(0)=1.
 * E(1) = omega1 real, E(i) = omega2 imaginary. A prevertex endpoint
 * (+-e^{+-it}) demands endpoint_singular = true.
 */
cplx elliptic_E(cplx z, double t, const QuadraturePath& path);
cplx elliptic_E(cplx z, double t);

// e1 = 2 - (2/3)cos2t, e2 = -2 - (2/3)cos2t, e3 = (4/3)cos2t.
std::array<double, 3> e_from_t(double t);

// Inverse of the e3 formula: t = arccos(3 e3 / 4)/2 in (0, pi/2).
double t_from_e3(double e3);

// phi(z) = (4/3)cos2t - 4 sin^2(2t) z^2 / (z^4 - 2 cos(2t) z^2 + 1)
//        = P(E(z) + omega3) for the normalized periods belonging to t.
cplx phi(cplx z, double t);

/**
 * Zero of P in the closed subrectangle [0,omega1] x [0,|omega2|], computed by
 * two independent elliptic-integral routes that must agree within 1e-8:
 *  (a) sn inversion: z0 = (e1-e2)^{-1/2} * int_0^{2 sqrt(-1/e2)} dv/sqrt((1-v^2)(1-k^2 v^2)),
 *  (b) z0 = omega3 - (i/2) int_0^{Y} dv/sqrt((1-v^2)(1-((e1-e3)/4)v^2)) with
 *      Y = 2 y0/(1+y0^2), y0^2 = (-3 + cos^2 2t + sin(2t) sqrt(9 - cos^2 2t))/(2 cos 2t).
 * At cos 2t = 0 both routes degenerate to the limit z0 = omega3 (e3 = 0).
 */
cplx wp_zero(const HalfPeriods& hp);

} // namespace scq::elliptic

#endif
