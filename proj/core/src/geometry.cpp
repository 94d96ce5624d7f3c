#include "scqmap/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "scqmap/errors.hpp"

namespace scq::geometry {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan_ = std::numeric_limits<double>::quiet_NaN();

int sgn(double x) { return (x > 0) - (x < 0); }

// Tangent direction of the upper edge at v, leading towards p2.
cplx upper_edge_direction(int sk1, double theta1, double alpha, int sk2) {
    double base = (sk1 >= 0) ? (sk1 * theta1 - pi / 2.0 - alpha * pi)
                             : -(theta1 + pi / 2.0 + alpha * pi);
    // for sgn kappa1 = 0 the right edge is vertical and its tangent at v is i,
    // so the upper edge leaves at angle pi/2 - ... ; the formula above with
    // sk1 = 0 gives -pi/2 - alpha pi which is off by pi: fix by symmetry
    if (sk1 == 0) base = pi / 2.0 - alpha * pi;
    (void)sk2;
    return std::exp(cplx(0.0, base));
}

// Completes the chain from v downward; v and theta1 data already filled.
void complete_chain(ScqGeometry& g) {
    const int sk1 = sgn(g.kappa1);
    const double th1 = g.straight_right_edge() ? 0.0 : g.theta1;

    double arg_sin = sk1 * th1 - (0.5 + g.alpha) * pi;
    double sv = std::sin(arg_sin);
    if (std::abs(sv) < 1e-12) sv = 0.0;
    g.sgn_kappa2 = sgn(sv);

    cplx dir = upper_edge_direction(sk1, th1, g.alpha, g.sgn_kappa2);

    if (g.sgn_kappa2 == 0) {
        // straight upper edge, horizontal through v
        g.O2 = cplx(0.0, inf);
        g.kappa2 = 0.0;
        g.r2 = inf;
        g.p2 = cplx(0.0, g.v.imag());
        g.theta2 = nan_;
        g.extremal = (dir.real() > 0.0) ? Extremal::edge_through_infinity : Extremal::none;
    } else {
        double tn = std::tan(sk1 * th1 - g.alpha * pi);
        double o2 = g.v.imag() - g.v.real() * tn;
        g.O2 = cplx(0.0, o2);
        g.r2 = std::abs(g.v - g.O2);
        if (g.r2 < 1e-14) throw GeometryError("upper-edge radius degenerates to zero");
        g.kappa2 = g.sgn_kappa2 / g.r2;
        g.p2 = g.O2 + cplx(0.0, 1.0) / g.kappa2;
        g.theta2 = g.sgn_kappa2 * std::arg((g.p2 - g.O2) / (g.v - g.O2));
        if (g.p2.imag() < -1e-12)
            throw GeometryError("p2 lies in the lower half-plane (constraint Im p2 >= 0)");
    }

    if (std::abs(g.v.imag()) < 1e-12 && g.extremal == Extremal::none)
        g.extremal = Extremal::vertices_meet;
}

} // namespace

ScqGeometry scq_from_params(double kappa1, double theta1, double alpha) {
    if (kappa1 == 0.0)
        throw GeometryError("kappa1 = 0 needs the vertical-edge constructor scq_vertical");
    if (!(theta1 > 0.0 && theta1 <= pi))
        throw GeometryError("theta1 must lie in (0, pi]");
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw GeometryError("alpha must lie in [0, 2]");

    ScqGeometry g;
    g.alpha = alpha;
    g.kappa1 = kappa1;
    g.theta1 = theta1;
    g.r1 = 1.0 / std::abs(kappa1);
    g.O1 = cplx(g.p1 - 1.0 / kappa1, 0.0);

    const int sk1 = sgn(kappa1);
    if (sk1 > 0 && g.p1 - g.r1 * (1.0 - std::cos(theta1)) < -1e-12)
        throw GeometryError("open right edge leaves the right half-plane "
                            "(p1 - r1(1-cos theta1) >= 0 violated)");
    if (sk1 > 0 && alpha * pi > 1.5 * pi + theta1 + 1e-12)
        throw GeometryError("alpha*pi exceeds 3*pi/2 + theta1");
    if (sk1 < 0 && alpha > 0.5 && theta1 > 1.5 * pi - alpha * pi + 1e-12)
        throw GeometryError("theta1 exceeds 3*pi/2 - alpha*pi");

    g.v = g.O1 + g.r1 * std::exp(cplx(0.0, pi / 2.0 + sk1 * (theta1 - pi / 2.0)));
    if (g.v.real() < -1e-12) throw GeometryError("vertex v left the right half-plane");

    complete_chain(g);
    return g;
}

ScqGeometry scq_vertical(double im_v, double alpha) {
    if (!(im_v > 0.0)) throw GeometryError("vertical edge needs Im v > 0");
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw GeometryError("alpha must lie in [0, 2]");
    ScqGeometry g;
    g.alpha = alpha;
    g.kappa1 = 0.0;
    g.theta1 = nan_;
    g.r1 = inf;
    g.O1 = cplx(inf, 0.0);
    g.v = cplx(1.0, im_v);
    complete_chain(g);
    return g;
}

Extremal classify_extremal(const ScqGeometry& g) { return g.extremal; }

const char* extremal_name(Extremal e) {
    switch (e) {
        case Extremal::vertices_meet: return "vertices_meet";
        case Extremal::edge_through_infinity: return "edge_through_infinity";
        default: return "none";
    }
}

namespace {

void put_number(std::ostringstream& os, double x) {
    if (std::isinf(x)) {
        os << (x > 0 ? "\"inf\"" : "\"-inf\"");
    } else if (std::isnan(x)) {
        os << "null";
    } else {
        os.precision(16);
        os << x;
    }
}

void put_complex(std::ostringstream& os, cplx z) {
    os << '[';
    put_number(os, z.real());
    os << ", ";
    put_number(os, z.imag());
    os << ']';
}

} // namespace

std::string to_json(const ScqGeometry& g) {
    std::ostringstream os;
    os << "{";
    os << "\"alpha\": "; put_number(os, g.alpha);
    os << ", \"p1\": "; put_number(os, g.p1);
    os << ", \"kappa1\": "; put_number(os, g.kappa1);
    os << ", \"theta1\": "; put_number(os, g.theta1);
    os << ", \"r1\": "; put_number(os, g.r1);
    os << ", \"O1\": "; put_complex(os, g.O1);
    os << ", \"v\": "; put_complex(os, g.v);
    os << ", \"sgn_kappa2\": " << g.sgn_kappa2;
    os << ", \"O2\": "; put_complex(os, g.O2);
    os << ", \"kappa2\": "; put_number(os, g.kappa2);
    os << ", \"r2\": "; put_number(os, g.r2);
    os << ", \"p2\": "; put_complex(os, g.p2);
    os << ", \"theta2\": "; put_number(os, g.theta2);
    os << ", \"extremal\": \"" << extremal_name(g.extremal) << "\"";
    os << "}";
    return os.str();
}

} // namespace scq::geometry
