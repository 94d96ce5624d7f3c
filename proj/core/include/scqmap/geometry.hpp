#ifndef SCQMAP_GEOMETRY_HPP
#define SCQMAP_GEOMETRY_HPP

#include <string>

#include "scqmap/numerics.hpp"

namespace scq::geometry {

enum class Extremal { none, vertices_meet, edge_through_infinity };

/**
 * Geometric data of a symmetric circular-arc quadrilateral normalized by
 * p1 = 1: right-edge data (kappa1, theta1, r1, O1), the vertex v in the open
 * upper-right quadrant, and the derived upper-edge data (O2, kappa2, r2, p2,
 * theta2). Curvatures are signed: kappa1 = 1/(p1 - O1), kappa2 = i/(p2 - O2).
 * kappa = 0 encodes a straight edge (center at infinity, theta undefined).
 */
struct ScqGeometry {
    double alpha = 0;
    double p1 = 1.0;
    double kappa1 = 0;
    double theta1 = 0;     // NaN when kappa1 = 0
    double r1 = 0;         // infinity when kappa1 = 0
    cplx O1;               // on the real axis; infinity sentinel when kappa1 = 0
    cplx v;
    int sgn_kappa2 = 0;
    cplx O2;               // purely imaginary; infinity sentinel when kappa2 = 0
    double kappa2 = 0;
    double r2 = 0;
    cplx p2;               // purely imaginary
    double theta2 = 0;     // NaN when kappa2 = 0
    Extremal extremal = Extremal::none;

    bool straight_right_edge() const { return kappa1 == 0.0; }
    bool straight_upper_edge() const { return sgn_kappa2 == 0; }
};

// Forward chain from (p1=1, kappa1, theta1, alpha). Throws GeometryError
// naming the violated constraint for invalid combinations. kappa1 must be
// nonzero here; use scq_vertical for the straight right edge.
ScqGeometry scq_from_params(double kappa1, double theta1, double alpha);

// Straight right edge (kappa1 = 0): the edge is the vertical segment through
// p1 = 1 and the vertex is v = 1 + i*im_v. theta1 is undefined; the rest of
// the chain runs with sgn(kappa1) = 0.
ScqGeometry scq_vertical(double im_v, double alpha);

Extremal classify_extremal(const ScqGeometry& g);

const char* extremal_name(Extremal e);

// JSON document (complex numbers as [re, im] pairs).
std::string to_json(const ScqGeometry& g);

} // namespace scq::geometry

#endif
