#include "scqmap/numerics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>

#include "scqmap/errors.hpp"

namespace scq::num {

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p1 = 0.0, dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            p1 = xi;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        x[i] = -xi;
        x[n - 1 - i] = xi;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
    auto [pos, ok] = cache.emplace(n, std::make_pair(std::move(x), std::move(w)));
    (void)ok;
    return pos->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int pts) {
    const auto& [x, w] = gauss_legendre(pts);
    double total = 0.0;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h, half = 0.5 * h;
        double s = 0.0;
        for (int j = 0; j < pts; ++j) s += w[j] * f(mid + half * x[j]);
        total += half * s;
    }
    return total;
}

namespace {

// weights[a][j]: integral over [a, a+1] of the degree-5 Lagrange basis
// polynomial through nodes 0..5 (exact via 8-point Gauss-Legendre).
const std::array<std::array<double, 6>, 5>& lagrange6_weights() {
    static const auto table = [] {
        std::array<std::array<double, 6>, 5> t{};
        const auto& [gx, gw] = gauss_legendre(8);
        for (int a = 0; a < 5; ++a) {
            for (int j = 0; j < 6; ++j) {
                double mid = a + 0.5;
                double acc = 0.0;
                for (std::size_t q = 0; q < gx.size(); ++q) {
                    double xx = mid + 0.5 * gx[q];
                    double L = 1.0;
                    for (int m = 0; m < 6; ++m)
                        if (m != j) L *= (xx - m) / (j - m);
                    acc += gw[q] * L;
                }
                t[a][j] = 0.5 * acc;
            }
        }
        return t;
    }();
    return table;
}

// One RK4 step of y'' = -q y with the three coefficient values precomputed
// (q at x, x+h/2, x+h). Advances both normalizations.
template <typename T, typename QT>
void rk4_step(QT q0, QT qm, QT q1, double h, T& y, T& yp) {
    T k1y = yp;
    T k1p = -q0 * y;
    T k2y = yp + 0.5 * h * k1p;
    T k2p = -qm * (y + 0.5 * h * k1y);
    T k3y = yp + 0.5 * h * k2p;
    T k3p = -qm * (y + 0.5 * h * k2y);
    T k4y = yp + h * k3p;
    T k4p = -q1 * (y + h * k3y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

} // namespace

std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 5) throw DomainError("cumulative_integral: need at least 6 samples");
    const auto& W = lagrange6_weights();
    std::vector<double> out(f.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        int s = i - 2;
        if (s < 0) s = 0;
        if (s > n - 5) s = n - 5;
        int a = i - s;
        double acc = 0.0;
        for (int j = 0; j < 6; ++j) acc += W[a][j] * f[s + j];
        out[i + 1] = out[i] + h * acc;
    }
    return out;
}

Endpoint4 rk4_linear(const std::function<double(double)>& q, double L, int steps) {
    double h = L / steps;
    double y1 = 1.0, y1p = 0.0, y2 = 0.0, y2p = 1.0;
    double q0 = q(0.0);
    for (int i = 0; i < steps; ++i) {
        double x = i * h;
        double qm = q(x + 0.5 * h);
        double q1v = q(x + h);
        rk4_step(q0, qm, q1v, h, y1, y1p);
        rk4_step(q0, qm, q1v, h, y2, y2p);
        q0 = q1v;
    }
    return {y1, y1p, y2, y2p};
}

Trajectory rk4_linear_first(const std::function<double(double)>& q, double L, int steps) {
    Trajectory tr;
    tr.h = L / steps;
    tr.y.resize(steps + 1);
    tr.yp.resize(steps + 1);
    double y = 1.0, yp = 0.0;
    tr.y[0] = y;
    tr.yp[0] = yp;
    double q0 = q(0.0);
    for (int i = 0; i < steps; ++i) {
        double x = i * tr.h;
        double qm = q(x + 0.5 * tr.h);
        double q1v = q(x + tr.h);
        rk4_step(q0, qm, q1v, tr.h, y, yp);
        q0 = q1v;
        tr.y[i + 1] = y;
        tr.yp[i + 1] = yp;
    }
    return tr;
}

CEndpoint4 rk4_linear_complex(const std::function<cplx(double)>& q, double L, int steps) {
    double h = L / steps;
    cplx y1 = 1.0, y1p = 0.0, y2 = 0.0, y2p = 1.0;
    cplx q0 = q(0.0);
    for (int i = 0; i < steps; ++i) {
        double x = i * h;
        cplx qm = q(x + 0.5 * h);
        cplx q1v = q(x + h);
        rk4_step(q0, qm, q1v, h, y1, y1p);
        rk4_step(q0, qm, q1v, h, y2, y2p);
        q0 = q1v;
    }
    return {y1, y1p, y2, y2p};
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NoSolutionError("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double arccot(double x) { return pi / 2.0 - std::atan(x); }

} // namespace scq::num
