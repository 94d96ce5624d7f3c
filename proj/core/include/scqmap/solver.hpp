#ifndef SCQMAP_SOLVER_HPP
#define SCQMAP_SOLVER_HPP

#include <optional>
#include <vector>

#include "scqmap/elliptic.hpp"
#include "scqmap/schwarzian.hpp"
#include "scqmap/spps.hpp"

namespace scq::solver {

using schwarzian::AccessoryParams;
using schwarzian::RectParams;

// Numerical knobs shared by the solver pipelines.
struct Options {
    int grid_intervals = 2048;  // SPPS quadrature grid
    int degree = 60;            // SPPS truncation degree (auto-escalated)
    double tail_tol = 1e-12;
    int oracle_steps = 4096;    // RK4 steps of the validation integrator
    double root_tol = 1e-12;
};

// Geometric functionals of the map f with S_f = R_{alpha,t,lambda}:
// w1 = f(1), w2 = f(i), p2 = w2/w1, kappa1/kappa2 the signed edge curvatures
// of the p1-normalized image quadrilateral.
struct MapData {
    AccessoryParams params;
    cplx w1, w2, p2;
    double kappa1, kappa2;
};

struct UnivalenceInterval {
    double alpha, t;
    double lambda_min, lambda_max;
    double lambda_star_min, lambda_star_max;  // pole-free interval ends
    double sturm_lo, sturm_hi;                // Prop.-2 bounds, in mu
    double nehari_lo, nehari_hi;              // Prop.-3 bounds, in mu
    bool bracketed = true;                    // false: bounds-only result
};

MapData map_values(const AccessoryParams& p, const Options& opt = {});
MapData rect_map_values(const RectParams& p, const Options& opt = {});

// Target functional for solve_lambda.
struct Target {
    enum Kind { kappa1, p2_imag } kind;
    double value;
};

// lambda with functional(lambda) = target, found as the zero of the SPPS
// series nearest the seed, polished by bisection to root_tol.
double solve_lambda(double alpha, double t, const Target& target, double seed,
                    const Options& opt = {});

UnivalenceInterval univalence_interval(double alpha, double t, const Options& opt = {});

// Sturm-comparison bounds for the pole-free mu interval (case split at 1/2):
// alpha<=1/2 uses (e2, e1), alpha>=1/2 uses (e3, e3).
std::pair<double, double> sturm_bounds(double alpha, const elliptic::HalfPeriods& hp);

// Nehari bounds (1-alpha^2) e3 -+ 3.
std::pair<double, double> nehari_bounds(double alpha, double t);

// Median curve of the univalence domain in the chart m = 2 arccot(4 lambda):
// m(t) = pi + beta (t - pi/4) - pi (1 - beta/4) cos 2t, lambda = cot(m/2)/4.
// beta defaults to a corner slope estimated numerically and cached per alpha.
struct MedianValue {
    double m;       // chart value in (0, 2 pi)
    double lambda;
};
MedianValue median_lambda(double alpha, double t,
                          std::optional<double> beta = std::nullopt,
                          const Options& opt = {});

// Images of n equally spaced boundary points under f, by radial ODE
// integration to 1-eps plus first-order extrapolation. Entries without a
// value mark gaps (pole met along the ray).
std::vector<std::optional<cplx>> boundary_polyline(const AccessoryParams& p, int n,
                                                   const Options& opt = {});

// Two-parameter inverse problem: find (t, lambda) with kappa1(t,lambda) =
// kappa1_target and Im p2(t,lambda) = p2_imag_target, by alternating
// solve_lambda with a secant correction of t.
struct GeometrySolution {
    double t, lambda;
    double kappa1_residual, p2_residual;
    int iterations;
};
GeometrySolution solve_geometry(double alpha, double kappa1_target, double p2_imag_target,
                                const Options& opt = {});

// One CSV row of a univalence sweep (columns per the interface contract).
std::string univalence_csv_header();
std::string univalence_csv_row(const UnivalenceInterval& ui);

} // namespace scq::solver

#endif
