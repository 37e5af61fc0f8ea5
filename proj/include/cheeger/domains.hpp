#pragma once

// Parametric rotationally invariant domains and their basic metrics.
//
// Coordinates of the generating regions:
//   Cylinder(l, r)            x in [0, l],  y <= r
//   Cone(l, theta)            x in [-l, 0], y <= (l + x) tan theta
//   DoubleCone(l, r, theta)   x in [-l, r], apex (0, l tan theta)
//   Hourglass(A, B, C, D)     x in [-A, A], corners (0,B), (+-C,D), (+-A,B)
//   Ball(R)                   centred at the origin

#include "cheeger/revolve.hpp"

#include <string>
#include <string_view>

namespace cheeger {

enum class Family { Cylinder, Cone, DoubleCone, Hourglass, Ball };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct DomainSpec {
    Family family = Family::Cylinder;
    int n = 3;
    // Only the fields of the chosen family are meaningful.
    double l = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double R = 0.0;
    PiecewiseCurve generatrix;
};

DomainSpec make_cylinder(double l, double r, int n = 3);
DomainSpec make_cone(double l, double theta, int n = 3);
DomainSpec make_double_cone(double l, double r, double theta, int n = 3);
DomainSpec make_hourglass(double A, double B, double C, double D, int n = 3);
DomainSpec make_ball(double R, int n = 3);

/// Rebuilds the generatrix from the family fields and validates them.
/// Throws DomainError on invalid parameters.
DomainSpec build_domain(DomainSpec spec);

/// Right angle of a double cone, arctan((l/r) tan theta).
double double_cone_right_angle(const DomainSpec& spec);

struct DomainMetrics {
    double volume = 0.0;
    double area = 0.0;
    double ratio = 0.0;
};

DomainMetrics domain_metrics(const DomainSpec& spec);

/// n (omega_n / |Omega|)^{1/n}.
double faber_krahn_bound(const DomainSpec& spec);

/// Radius of the largest ball contained in the domain.
double inscribed_ball_radius(const DomainSpec& spec);

/// Numerical inradius of the planar cross-section (generatrix plus its mirror
/// image), by grid search and local refinement. Used for the non-closed-form
/// families and as an oracle for the others.
double inscribed_ball_radius_numeric(const DomainSpec& spec, double tol = 1e-8);

/// Upper boundary of the generating region at abscissa x, or -infinity
/// outside the x-range. Not defined for Ball beyond its own formula.
double upper_boundary(const DomainSpec& spec, double x);

/// Signed distance of p to the boundary of the generating region
/// (positive inside). The axis is not part of the boundary.
double region_signed_distance(const DomainSpec& spec, Point2 p);

/// Polygonal approximation of the domain generatrix.
std::vector<Point2> generatrix_polyline(const DomainSpec& spec, int per_arc = 256);

/// True when no two non-adjacent sides of the generatrix polyline intersect.
bool generatrix_is_simple(const DomainSpec& spec);

} // namespace cheeger
