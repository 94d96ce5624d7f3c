#include "scqmap/schwarzian.hpp"

#include <cmath>

#include "scqmap/errors.hpp"

namespace scq::schwarzian {

namespace {

cplx denom(cplx z, double t) {
    double c = std::cos(2.0 * t);
    cplx z2 = z * z;
    cplx d = z2 * z2 - 2.0 * c * z2 + 1.0;
    if (std::abs(d) < 1e-12) throw PoleError("schwarzian: z is (numerically) a prevertex");
    return d;
}

} // namespace

AccessoryParams::AccessoryParams(double alpha_, double t_, double lambda_)
    : alpha(alpha_), t(t_), lambda(lambda_) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw DomainError("AccessoryParams: alpha must lie in [0,2]");
    if (!(t > 0.0 && t < pi / 2.0))
        throw DomainError("AccessoryParams: t must lie in (0, pi/2)");
}

RectParams::RectParams(double alpha_, const elliptic::HalfPeriods& hp_, double mu_)
    : alpha(alpha_), hp(hp_), mu(mu_) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw DomainError("RectParams: alpha must lie in [0,2]");
    if (!hp.normalized) throw DomainError("RectParams: half periods must be normalized");
}

cplx psi0(cplx z, double t) {
    double c = std::cos(2.0 * t);
    cplx d = denom(z, t);
    cplx z2 = z * z;
    return (c * z2 * z2 - 2.0 * z2 + c) / (d * d);
}

cplx psi1(cplx z, double t) {
    return 2.0 * std::sin(2.0 * t) / denom(z, t);
}

cplx R(cplx z, const AccessoryParams& p) {
    return 4.0 * (1.0 - p.alpha * p.alpha) * psi0(z, p.t) - 2.0 * p.lambda * psi1(z, p.t);
}

cplx S_E(cplx z, double t) {
    double c2 = std::cos(2.0 * t), c4 = std::cos(4.0 * t);
    cplx d = denom(z, t);
    cplx z2 = z * z;
    return (2.0 * c2 * z2 * z2 + (c4 - 5.0) * z2 + 2.0 * c2) / (d * d);
}

cplx S_g(cplx zeta, const RectParams& p) {
    cplx w = elliptic::wp(zeta + p.hp.omega3(), p.hp);
    return 0.5 * (1.0 - 4.0 * p.alpha * p.alpha) * w - 2.0 * p.mu;
}

cplx S_f_from_mu(cplx z, double alpha, double t, double mu) {
    double c2 = std::cos(2.0 * t), c4 = std::cos(4.0 * t), s2 = std::sin(2.0 * t);
    double a4 = 1.0 - 4.0 * alpha * alpha;
    cplx d = denom(z, t);
    cplx z2 = z * z;
    cplx first = (2.0 / 3.0 * a4 * c2 - 2.0 * mu) / d;
    cplx second = (2.0 * c2 * z2 * z2 + (c4 - 2.0 * a4 * s2 * s2 - 5.0) * z2 + 2.0 * c2) / (d * d);
    return first + second;
}

double mu_from_lambda(const AccessoryParams& p) {
    return 2.0 * (p.alpha * p.alpha - 1.0) / 3.0 * std::cos(2.0 * p.t) +
           2.0 * p.lambda * std::sin(2.0 * p.t);
}

double lambda_from_mu(double alpha, double t, double mu) {
    double s = std::sin(2.0 * t);
    if (!(s > 0.0)) throw DomainError("lambda_from_mu: t must lie in (0, pi/2)");
    return (mu - 2.0 * (alpha * alpha - 1.0) / 3.0 * std::cos(2.0 * t)) / (2.0 * s);
}

} // namespace scq::schwarzian
