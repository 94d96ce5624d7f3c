#ifndef SCQMAP_NUMERICS_HPP
#define SCQMAP_NUMERICS_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace scq {

using cplx = std::complex<double>;

constexpr double pi = 3.141592653589793238462643383279502884;

namespace num {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
// Computed once per n and cached.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// Integral of f over [a,b] by composite Gauss-Legendre (pts-point rule per panel).
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 32, int pts = 16);

// Cumulative integral of uniformly sampled values (spacing h): out[j] = int_0^{x_j}.
// Sliding 6-point Lagrange stencil, O(h^6).
std::vector<double> cumulative_integral(const std::vector<double>& f, double h);

// y'' = -q(x) y on [0,L] with the two normalizations (y(0),y'(0)) = (1,0), (0,1).
// Classical RK4 with fixed step. Returns {y1, y1', y2, y2'} at L.
struct Endpoint4 { double y1, y1p, y2, y2p; };
Endpoint4 rk4_linear(const std::function<double(double)>& q, double L, int steps);

// Dense variant: values of y1 at every grid node (steps+1 samples) plus derivatives.
struct Trajectory { std::vector<double> y, yp; double h; };
Trajectory rk4_linear_first(const std::function<double(double)>& q, double L, int steps);

// Complex-coefficient version along a real parameter in [0,L].
struct CEndpoint4 { cplx y1, y1p, y2, y2p; };
CEndpoint4 rk4_linear_complex(const std::function<cplx(double)>& q, double L, int steps);

// Bisection on [lo,hi] assuming f(lo), f(hi) have opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-13, int max_iter = 200);

// arccot with range (0, pi).
double arccot(double x);

} // namespace num
} // namespace scq

#endif
