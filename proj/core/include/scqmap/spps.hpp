#ifndef SCQMAP_SPPS_HPP
#define SCQMAP_SPPS_HPP

#include <functional>
#include <vector>

#include "scqmap/numerics.hpp"

namespace scq::spps {

// Coefficients of y'' + psi0 y = lambda psi1 y on [0, length], given as
// callables and sampled on a uniform grid of grid_intervals subintervals.
struct CoefficientPair {
    std::function<double(double)> psi0, psi1;
    double length = 1.0;
    int grid_intervals = 2048;
};

// Endpoint values of the normalized solution pair (y1: (1,0), y2: (0,1)).
struct EndpointData {
    double y1, y1p, y2, y2p;
    double lambda;

    double wronskian() const { return y1 * y2p - y1p * y2; }
};

/**
 * Spectral parameter power series basis. With a nonvanishing seed solution
 * y_inf of the problem at lambda_inf, set q0 = 1/y_inf^2, q1 = psi1 y_inf^2;
 * Xt is the iterated-integral sequence generated by (q1,q0) and X the one
 * generated by (q0,q1). Then
 *   y1 = y_inf sum_k (lambda-lambda_inf)^k Xt[2k],
 *   y2 = y_inf sum_k (lambda-lambda_inf)^k X[2k+1]
 * solve the equation for every lambda, and
 *   y1' = y_inf' S1 + (1/y_inf) sum_{k>=1} L^k Xt[2k-1],
 *   y2' = y_inf' S2 + (1/y_inf) sum_k L^k X[2k]
 * (from (X_n)' = q_{n-1} X_{n-1} and the product rule).
 */
struct SppsBasis {
    double lambda_inf;
    int degree;      // truncation degree N
    double length;
    int n;           // grid intervals
    std::vector<double> y_inf, y_inf_prime;     // n+1 samples each
    std::vector<std::vector<double>> Xt, X;     // indices 0 .. 2*degree+1
    mutable double tail_certificate = 0.0;      // last eval's max tail ratio
};

// Iterated integrals I_0..I_N generated by the pair (q0,q1):
// I_0 = 1, I_n(z) = int_0^z I_{n-1} q_{n-1}, q alternating q0,q1,q0,...
// q0v/q1v are samples on a uniform grid with spacing h.
std::vector<std::vector<double>> iterated_integrals(const std::vector<double>& q0v,
                                                    const std::vector<double>& q1v,
                                                    int N, double h);

// Builds the basis; throws SeedError when the seed solution vanishes on the grid.
SppsBasis build_basis(const CoefficientPair& c, double lambda_inf, int degree = 60);

// Series evaluation at the segment endpoint. Throws TruncationError when the
// last retained term exceeds tail_tol * (1 + running sum magnitude).
EndpointData eval_solutions(const SppsBasis& b, double lambda, double tail_tol = 1e-12);

// Independent fixed-step RK4 integration of the same problem (validation oracle).
EndpointData ode_oracle(const CoefficientPair& c, double lambda, int steps = 4096);

// min_j |y1(x_j; lambda)| over the basis grid (pole-on-segment detection).
double min_abs_y1(const SppsBasis& b, double lambda);

} // namespace scq::spps

#endif
