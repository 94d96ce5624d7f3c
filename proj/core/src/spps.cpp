#include "scqmap/spps.hpp"

#include <cmath>

#include "scqmap/errors.hpp"

namespace scq::spps {

std::vector<std::vector<double>> iterated_integrals(const std::vector<double>& q0v,
                                                    const std::vector<double>& q1v,
                                                    int N, double h) {
    if (N < 1) throw DomainError("iterated_integrals: degree must be >= 1");
    if (q0v.size() != q1v.size() || q0v.size() < 6)
        throw DomainError("iterated_integrals: bad grid");
    std::vector<std::vector<double>> I;
    I.reserve(N + 1);
    I.emplace_back(q0v.size(), 1.0);
    std::vector<double> prod(q0v.size());
    for (int n = 1; n <= N; ++n) {
        const auto& q = ((n - 1) % 2 == 0) ? q0v : q1v;
        for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = I[n - 1][j] * q[j];
        I.push_back(num::cumulative_integral(prod, h));
    }
    return I;
}

SppsBasis build_basis(const CoefficientPair& c, double lambda_inf, int degree) {
    const int n = c.grid_intervals;
    if (n < 8) throw DomainError("build_basis: grid too coarse");
    auto q = [&](double x) { return c.psi0(x) - lambda_inf * c.psi1(x); };
    num::Trajectory seed = num::rk4_linear_first(q, c.length, n);

    double max_abs = 0.0, min_abs = 1e300;
    for (double v : seed.y) {
        max_abs = std::max(max_abs, std::abs(v));
        min_abs = std::min(min_abs, std::abs(v));
    }
    bool sign_change = false;
    for (std::size_t j = 1; j < seed.y.size(); ++j)
        if ((seed.y[j] > 0) != (seed.y[0] > 0)) sign_change = true;
    if (sign_change || min_abs < 1e-10 * max_abs)
        throw SeedError("build_basis: seed solution vanishes on the segment");

    SppsBasis b;
    b.lambda_inf = lambda_inf;
    b.degree = degree;
    b.length = c.length;
    b.n = n;
    b.y_inf = seed.y;
    b.y_inf_prime = seed.yp;

    const double h = c.length / n;
    std::vector<double> q0v(n + 1), q1v(n + 1);
    for (int j = 0; j <= n; ++j) {
        double y = seed.y[j];
        q0v[j] = 1.0 / (y * y);
        q1v[j] = c.psi1(j * h) * y * y;
    }
    b.Xt = iterated_integrals(q1v, q0v, 2 * degree + 1, h);
    b.X = iterated_integrals(q0v, q1v, 2 * degree + 1, h);
    return b;
}

namespace {

struct SeriesSums {
    double s_y1, s_y1d, s_y2, s_y2d;  // the four endpoint series
    double tail;                       // max last-term ratio
};

SeriesSums endpoint_series(const SppsBasis& b, double lambda, std::size_t idx) {
    const double L = lambda - b.lambda_inf;
    double s_y1 = 0.0, s_y1d = 0.0, s_y2 = 0.0, s_y2d = 0.0;
    double t_y1 = 0.0, t_y1d = 0.0, t_y2 = 0.0, t_y2d = 0.0;
    double Lk = 1.0;
    for (int k = 0; k <= b.degree; ++k) {
        t_y1 = Lk * b.Xt[2 * k][idx];
        t_y2 = Lk * b.X[2 * k + 1][idx];
        t_y2d = Lk * b.X[2 * k][idx];
        s_y1 += t_y1;
        s_y2 += t_y2;
        s_y2d += t_y2d;
        if (k >= 1) {
            t_y1d = Lk * b.Xt[2 * k - 1][idx];
            s_y1d += t_y1d;
        }
        Lk *= L;
    }
    double tail = 0.0;
    auto ratio = [](double term, double sum) { return std::abs(term) / (1.0 + std::abs(sum)); };
    tail = std::max({ratio(t_y1, s_y1), ratio(t_y1d, s_y1d), ratio(t_y2, s_y2),
                     ratio(t_y2d, s_y2d)});
    return {s_y1, s_y1d, s_y2, s_y2d, tail};
}

} // namespace

EndpointData eval_solutions(const SppsBasis& b, double lambda, double tail_tol) {
    const std::size_t end = b.y_inf.size() - 1;
    SeriesSums s = endpoint_series(b, lambda, end);
    b.tail_certificate = s.tail;
    if (s.tail > tail_tol)
        throw TruncationError("eval_solutions: series tail above tolerance; raise the degree");
    double yi = b.y_inf[end], yip = b.y_inf_prime[end];
    EndpointData d;
    d.lambda = lambda;
    d.y1 = yi * s.s_y1;
    d.y2 = yi * s.s_y2;
    d.y1p = yip * s.s_y1 + s.s_y1d / yi;
    d.y2p = yip * s.s_y2 + s.s_y2d / yi;
    return d;
}

EndpointData ode_oracle(const CoefficientPair& c, double lambda, int steps) {
    auto q = [&](double x) { return c.psi0(x) - lambda * c.psi1(x); };
    num::Endpoint4 e = num::rk4_linear(q, c.length, steps);
    return {e.y1, e.y1p, e.y2, e.y2p, lambda};
}

double min_abs_y1(const SppsBasis& b, double lambda) {
    const double L = lambda - b.lambda_inf;
    double best = 1e300;
    for (std::size_t j = 0; j < b.y_inf.size(); ++j) {
        double sum = 0.0, Lk = 1.0;
        for (int k = 0; k <= b.degree; ++k) {
            sum += Lk * b.Xt[2 * k][j];
            Lk *= L;
        }
        best = std::min(best, std::abs(b.y_inf[j] * sum));
    }
    return best;
}

} // namespace scq::spps
