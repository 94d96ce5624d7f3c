#include "scqmap/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "scqmap/errors.hpp"

namespace scq::elliptic {

ThetaConstants theta_constants(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw DomainError("theta_constants: nome must lie in (0,1)");
    double t2 = 0.0;
    for (int n = 0;; ++n) {
        double term = 2.0 * std::pow(q, (n + 0.5) * (n + 0.5));
        t2 += term;
        if (term < 1e-16) break;
        if (n > 4000) throw AccuracyError("theta_constants: theta2 series stalled");
    }
    double t3 = 1.0, t4 = 1.0;
    for (int n = 1;; ++n) {
        double term = 2.0 * std::pow(q, double(n) * n);
        t3 += term;
        t4 += (n % 2 ? -term : term);
        if (term < 1e-16) break;
        if (n > 4000) throw AccuracyError("theta_constants: theta3 series stalled");
    }
    return {t2, t3, t4};
}

HalfPeriods normalized_half_periods(cplx tau) {
    if (!(tau.imag() > 0.0) || std::abs(tau.real()) > 1e-12 * std::abs(tau))
        throw DomainError("normalized_half_periods: tau must be purely imaginary with Im > 0");
    double y = tau.imag();
    double q = std::exp(-pi * y);
    ThetaConstants th = theta_constants(q);
    double t2_4 = std::pow(th.t2, 4), t3_4 = std::pow(th.t3, 4), t4_4 = std::pow(th.t4, 4);
    // P-values at the half-periods of the lattice (1, tau):
    double wp_half = pi * pi / 3.0 * (t3_4 + t4_4);       // P(1/2)
    double wp_tauhalf = -pi * pi / 3.0 * (t3_4 + t2_4);   // P(tau/2)
    double wp_corner = pi * pi / 3.0 * (t2_4 - t4_4);     // P((1+tau)/2)
    double r = std::sqrt(wp_half - wp_tauhalf) / 4.0;
    double scale = 4.0 * r * r;  // (2r)^2, the rescaling of the P-values

    HalfPeriods hp;
    hp.omega1 = r;
    hp.omega2_mag = r * y;
    hp.e1 = wp_half / scale;
    hp.e2 = wp_tauhalf / scale;
    hp.e3 = wp_corner / scale;
    hp.tau_imag = y;
    hp.normalized = true;
    return hp;
}

cplx sn(cplx u, double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("sn: modulus k must lie in [0,1)");
    std::vector<double> ks;
    ks.reserve(16);
    while (k > 1e-14) {
        double kp = std::sqrt(1.0 - k * k);
        double k1 = (1.0 - kp) / (1.0 + kp);
        ks.push_back(k1);
        u /= (1.0 + k1);
        k = k1;
        if (ks.size() > 64) throw AccuracyError("sn: Landen recursion stalled");
    }
    cplx s = std::sin(u);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
        double k1 = *it;
        cplx den = 1.0 + k1 * s * s;
        if (std::abs(den) < 1e-300) throw PoleError("sn: pole in Landen ascent");
        s = (1.0 + k1) * s / den;
    }
    return s;
}

cplx wp(cplx z, const HalfPeriods& hp) {
    // reduce modulo the lattice (2 omega1, 2 omega2) for the pole guard
    double px = 2.0 * hp.omega1, py = 2.0 * hp.omega2_mag;
    double rx = std::fmod(z.real(), px);
    double ry = std::fmod(z.imag(), py);
    if (rx < 0) rx += px;
    if (ry < 0) ry += py;
    rx = std::min(rx, px - rx);
    ry = std::min(ry, py - ry);
    double scale = std::max(hp.omega1, hp.omega2_mag);
    if (std::hypot(rx, ry) < 1e-10 * scale)
        throw PoleError("wp: argument is a lattice point");

    double root = std::sqrt(hp.e1 - hp.e2);
    double k = std::sqrt(hp.modulus_k2());
    cplx s = sn(root * z, k);
    if (std::abs(s) < 1e-150) throw PoleError("wp: argument is a lattice point");
    return hp.e2 + (hp.e1 - hp.e2) / (s * s);
}

namespace {

// Keeps sqrt branches continuous along a sampled path.
struct BranchTracker {
    cplx prev{1.0, 0.0};
    bool started = false;

    cplx operator()(cplx value) {
        cplx s = std::sqrt(value);
        if (started && (s * std::conj(prev)).real() < 0.0) s = -s;
        started = true;
        prev = s;
        return s;
    }
};

cplx quartic(cplx w, double c2t) {
    cplx w2 = w * w;
    return w2 * w2 - 2.0 * c2t * w2 + 1.0;
}

// Composite 16-point Gauss-Legendre along s in [0,1] of g(s), where g needs
// sequential evaluation for branch continuity.
template <typename G>
cplx panel_quadrature(G&& g, int panels) {
    const auto& [gx, gw] = num::gauss_legendre(16);
    cplx total = 0.0;
    double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        double mid = (p + 0.5) * h, half = 0.5 * h;
        cplx acc = 0.0;
        for (std::size_t j = 0; j < gx.size(); ++j) acc += gw[j] * g(mid + half * gx[j]);
        total += half * acc;
    }
    return total;
}

cplx elliptic_E_impl(cplx z, double t, const QuadraturePath& path) {
    double c2t = std::cos(2.0 * t);
    BranchTracker branch;
    branch(quartic(cplx(0.0), c2t));  // anchor the branch at sqrt(1) = +1

    if (!path.endpoint_singular) {
        if (std::abs(quartic(z, c2t)) < 1e-10)
            throw AccuracyError(
                "elliptic_E: prevertex endpoint requires endpoint_singular mode");
        auto g = [&](double s) { return z / branch(quartic(s * z, c2t)); };
        return panel_quadrature(g, path.panels);
    }
    // w = z(1-u^2): du-substitution regularizes the inverse-sqrt endpoint
    // singularity; traverse u from 1 to 0 so the branch runs from w=0 to w=z.
    auto g = [&](double s) {
        double u = 1.0 - s;
        cplx w = z * (1.0 - u * u);
        return 2.0 * u * z / branch(quartic(w, c2t));
    };
    return panel_quadrature(g, path.panels);
}

} // namespace

cplx elliptic_E(cplx z, double t, const QuadraturePath& path) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw DomainError("elliptic_E: z must lie in the closed unit disk");
    if (z == cplx(0.0)) return 0.0;
    cplx coarse = elliptic_E_impl(z, t, path);
    QuadraturePath fine = path;
    fine.panels = 2 * path.panels;
    cplx refined = elliptic_E_impl(z, t, fine);
    if (std::abs(refined - coarse) > 1e-10 * (1.0 + std::abs(refined)))
        throw AccuracyError("elliptic_E: quadrature did not converge at the node budget");
    return refined;
}

cplx elliptic_E(cplx z, double t) { return elliptic_E(z, t, QuadraturePath{z}); }

std::array<double, 3> e_from_t(double t) {
    if (!(t > 0.0 && t < pi / 2.0)) throw DomainError("e_from_t: t must lie in (0, pi/2)");
    double c = std::cos(2.0 * t);
    return {2.0 - 2.0 * c / 3.0, -2.0 - 2.0 * c / 3.0, 4.0 * c / 3.0};
}

double t_from_e3(double e3) {
    double x = 3.0 * e3 / 4.0;
    if (!(std::abs(x) < 1.0)) throw DomainError("t_from_e3: |3 e3/4| must be < 1");
    return 0.5 * std::acos(x);
}

cplx phi(cplx z, double t) {
    double c = std::cos(2.0 * t), s = std::sin(2.0 * t);
    cplx den = quartic(z, c);
    if (std::abs(den) < 1e-12) throw PoleError("phi: z is a prevertex");
    return 4.0 * c / 3.0 - 4.0 * s * s * z * z / den;
}

namespace {

// int of 1/sqrt(radicand) along the straight segment [a,b], branch continued
// from the tracker state; optional u^2-clustering toward b.
template <typename F>
cplx leg_integral(F&& radicand, cplx a, cplx b, BranchTracker& branch, int panels,
                  bool cluster_at_end) {
    if (!cluster_at_end) {
        auto g = [&](double s) { return (b - a) / branch(radicand(a + s * (b - a))); };
        return panel_quadrature(g, panels);
    }
    // v = b - (b-a) u^2, traversed u: 1 -> 0.
    auto g = [&](double s) {
        double u = 1.0 - s;
        cplx v = b - (b - a) * u * u;
        return 2.0 * u * (b - a) / branch(radicand(v));
    };
    return panel_quadrature(g, panels);
}

cplx canonical_rectangle_rep(cplx z, const HalfPeriods& hp) {
    double px = 2.0 * hp.omega1, py = 2.0 * hp.omega2_mag;
    double tol = 1e-7 * std::max(hp.omega1, hp.omega2_mag);
    for (int sgn : {+1, -1}) {
        cplx w = double(sgn) * z;
        double x = std::fmod(w.real(), px);
        double y = std::fmod(w.imag(), py);
        if (x < -tol) x += px;
        if (y < -tol) y += py;
        if (x <= hp.omega1 + tol && y <= hp.omega2_mag + tol) {
            x = std::clamp(x, 0.0, hp.omega1);
            y = std::clamp(y, 0.0, hp.omega2_mag);
            return {x, y};
        }
    }
    throw AccuracyError("wp_zero: failed to reduce the zero to the fundamental subrectangle");
}

} // namespace

cplx wp_zero(const HalfPeriods& hp) {
    if (!hp.normalized) throw DomainError("wp_zero: half periods must be normalized");
    double t = t_from_e3(hp.e3);
    double c = std::cos(2.0 * t);
    cplx omega3 = hp.omega3();
    if (std::abs(c) < 1e-6) return omega3;  // e3 = 0: the zero sits at omega3

    // Route (a): z0 = (e1-e2)^{-1/2} F(x0, k), x0 = 2 sqrt(-1/e2) > 1, with the
    // integration path dipped below the real axis to pass the branch points.
    double k2 = hp.modulus_k2();
    double x0 = 2.0 * std::sqrt(-1.0 / hp.e2);
    cplx zA;
    {
        BranchTracker branch;
        branch(cplx(1.0));
        auto rad = [&](cplx v) { return (1.0 - v * v) * (1.0 - k2 * v * v); };
        cplx mid = cplx(0.5 * x0, -0.25);
        cplx part = leg_integral(rad, cplx(0.0), mid, branch, 48, false) +
                    leg_integral(rad, mid, cplx(x0), branch, 48, true);
        zA = part / std::sqrt(hp.e1 - hp.e2);
    }

    // Route (b): y0 from the closed form, Y = 2 y0/(1+y0^2) (imaginary for
    // cos 2t > 0), modulus (e1-e3)/4 = sin^2 t.
    cplx zB;
    {
        double s2t = std::sin(2.0 * t);
        cplx y0sq = cplx((-3.0 + c * c + s2t * std::sqrt(9.0 - c * c)) / (2.0 * c), 0.0);
        cplx y0 = std::sqrt(y0sq);
        cplx Y = 2.0 * y0 / (1.0 + y0 * y0);
        double m = (hp.e1 - hp.e3) / 4.0;
        BranchTracker branch;
        branch(cplx(1.0));
        auto rad = [&](cplx v) { return (1.0 - v * v) * (1.0 - m * v * v); };
        cplx I = leg_integral(rad, cplx(0.0), Y, branch, 64, false);
        zB = omega3 - 0.5 * cplx(0.0, 1.0) * I;
    }

    cplx cA = canonical_rectangle_rep(zA, hp);
    cplx cB = canonical_rectangle_rep(zB, hp);
    if (std::abs(cA - cB) > 1e-8)
        throw AccuracyError("wp_zero: elliptic-integral routes disagree beyond 1e-8");
    return 0.5 * (cA + cB);
}

} // namespace scq::elliptic
