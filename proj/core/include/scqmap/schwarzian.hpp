#ifndef SCQMAP_SCHWARZIAN_HPP
#define SCQMAP_SCHWARZIAN_HPP

#include "scqmap/elliptic.hpp"
#include "scqmap/numerics.hpp"

namespace scq::schwarzian {

// Accessory parameters of the disk problem: vertex angle alpha*pi,
// prevertex angle t, coefficient lambda.
struct AccessoryParams {
    double alpha;  // in [0,2]
    double t;      // in (0, pi/2)
    double lambda;

    AccessoryParams(double alpha_, double t_, double lambda_);
};

// Parameters of the rectangle problem: alpha, normalized half-periods, mu.
struct RectParams {
    double alpha;
    elliptic::HalfPeriods hp;  // must be normalized
    double mu;

    RectParams(double alpha_, const elliptic::HalfPeriods& hp_, double mu_);
};

// The two rational building blocks of the disk Schwarzian:
//   psi0(z) = ((cos2t) z^4 - 2 z^2 + cos2t) / (z^4 - 2(cos2t) z^2 + 1)^2
//   psi1(z) = 2 sin2t / (z^4 - 2(cos2t) z^2 + 1)
cplx psi0(cplx z, double t);
cplx psi1(cplx z, double t);

// R_{alpha,t,lambda}(z) = 4(1-alpha^2) psi0 - 2 lambda psi1.
cplx R(cplx z, const AccessoryParams& p);

// Schwarzian of the elliptic integral E:
//   S_E(z) = (2(cos2t) z^4 + (cos4t - 5) z^2 + 2 cos2t) / (z^4 - 2(cos2t) z^2 + 1)^2.
cplx S_E(cplx z, double t);

// Schwarzian of the rectangle map: S_g(zeta) = ((1-4 alpha^2)/2) P(zeta+omega3) - 2 mu.
cplx S_g(cplx zeta, const RectParams& p);

// Disk Schwarzian written through the rectangle parameter mu:
//   ((2/3)(1-4a^2)cos2t - 2mu) / d(z) +
//   (2(cos2t) z^4 + (cos4t - 2(1-4a^2)sin^2 2t - 5) z^2 + 2 cos2t) / d(z)^2,
// d(z) = z^4 - 2(cos2t) z^2 + 1. Equals R when mu = mu_from_lambda.
cplx S_f_from_mu(cplx z, double alpha, double t, double mu);

// mu = (2/3)(alpha^2-1) cos2t + 2 lambda sin2t and its exact inverse.
double mu_from_lambda(const AccessoryParams& p);
double lambda_from_mu(double alpha, double t, double mu);

} // namespace scq::schwarzian

#endif
