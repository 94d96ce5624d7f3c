#ifndef SCQMAP_FUCHSIAN_HPP
#define SCQMAP_FUCHSIAN_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "scqmap/solver.hpp"

namespace scq::fuchsian {

// Unit-determinant Moebius transformation z -> (a z + b)/(c z + d).
struct MobiusTransform {
    cplx a{1}, b{0}, c{0}, d{1};

    cplx operator()(cplx z) const;
    MobiusTransform inverse() const;
    MobiusTransform compose(const MobiusTransform& other) const;  // this after other
    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }
};

// T1(z) = (iz + 1)/(z + i), the disk automorphism carrying i to 0.
MobiusTransform T1();

// Covering data of the doubly punctured disk G_a = D - {-a, a}.
struct CoverData {
    double a;
    double t;            // sin^-1((1-a^2)/(1+a^2))
    double lambda_max;   // vertices-meet parameter at alpha = 0
    double w1;           // f(1)
    double kappa1;       // Eq.-(kappa) curvature, negative here
    double vertex;       // f(e^{it}) = w1 - 2/kappa1_fscale, the meeting vertex
    double s;            // in (0, pi): e^{-is} = T1(w1 / vertex)
    double hprime0;      // H'(0) in the reference-table convention
    MobiusTransform A1, A2;
    double trace_comm;   // |trace(A1 A2^{-1})|
    std::array<cplx, 2> fixed_points;  // of A1 A2^{-1}, on the unit circle
    double geodesic_length;            // 2 arccosh(|trace|/2)
};

double t_from_a(double a);

CoverData cover_data(double a, const solver::Options& opt = {});

// Generators pinned by: A1 parabolic (trace +-2) fixing 1, disk-preserving,
// A1(e^{-is}) = e^{is}; A2 from the reflection identity A2(-conj z) = -conj(A1 z).
std::pair<MobiusTransform, MobiusTransform> generators(double s);

struct CommutatorData {
    double trace;                      // normalized positive
    std::array<cplx, 2> fixed_points;
    double geodesic_length;
};

// Trace/fixed points/translation length of A1 A2^{-1}; fixed points are
// computed both from the closed formula in s and from the matrix product and
// must agree within 1e-9. Throws NotHyperbolicError when |trace| <= 2.
CommutatorData commutator_data(const MobiusTransform& A1, const MobiusTransform& A2,
                               double s);

// Closed geodesic of G_a looping once around both punctures: samples one
// period of the axis of A1 A2^{-1} uniformly in hyperbolic arclength starting
// at the imaginary-axis crossing, mapped through H = T1 . f^{-1} . (vertex *) . T1^{-1}.
// Returns n+1 points (first and last coincide); gaps mark Newton failures.
std::vector<std::optional<cplx>> geodesic_polyline(double a, int n,
                                                   const solver::Options& opt = {});

} // namespace scq::fuchsian

#endif
