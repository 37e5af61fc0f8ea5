#pragma once

// Generating curves of Delaunay surfaces: rotationally invariant hypersurfaces
// of constant mean curvature H in R^n. A generating curve (x(s), y(s)) with
// tangent angle sigma(s) solves
//
//     x' = cos sigma,  y' = sin sigma,  sigma' = -(n-1) H + (n-2) cos sigma / y
//
// and conserves T = y^{n-2} cos sigma - H y^{n-1}.

#include "cheeger/numerics.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace cheeger {

/// (n, H, T) identifying one member of the Delaunay family.
struct DelaunayParams {
    int n = 3;
    double H = 1.0;
    double T = 0.0;
};

/// A point of an arclength-parametrised generating curve.
struct CurvePoint {
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
    double sigma = 0.0;
};

enum class DelaunayClass { Cylinder, Unduloid, Sphere, Nodoid, Catenoid, Hyperplane };

std::string_view to_string(DelaunayClass c);

/// Largest admissible first integral for H > 0:
/// (1/(n-1)^{n-1}) ((n-2)/H)^{n-2}. Throws DomainError unless n >= 3, H > 0.
double t_max(int n, double H);

/// Ordinate of the cylinder with mean curvature H: (n-2)/((n-1)H).
double cylinder_radius(int n, double H);

/// Throws DomainError unless n >= 3, H >= 0 and (H > 0 implies T <= t_max
/// up to `rel_tol`).
void validate(const DelaunayParams& p, double rel_tol = 1e-12);

/// Six-way classification by the sign of H and the position of T relative
/// to 0 and t_max. Equalities are decided with relative tolerance `rel_tol`
/// (scaled by t_max for H > 0, by max(1, |T|) for H = 0).
DelaunayClass classify(const DelaunayParams& p, double rel_tol = 1e-12);

/// y^{n-2} cos sigma - H y^{n-1} - T.
double first_integral_residual(const DelaunayParams& p, const CurvePoint& pt);

/// Value of the first integral at a point, i.e. the T of the curve through it.
double first_integral(int n, double H, double y, double sigma);

struct ProfileExtrema {
    double y_min = 0.0;
    double y_max = 0.0;
};

/// Extreme ordinates of the full periodic profile (H > 0 classes only).
/// Throws DomainError for catenoids/hyperplanes, NoRootError when the
/// parameters admit no profile.
ProfileExtrema profile_extrema(const DelaunayParams& p, double rel_tol = 1e-12);

struct ProfileOptions {
    double tol = 1e-13;        ///< local error (absolute and relative) per step
    double axis_eps = 1e-10;   ///< ordinate treated as the rotation axis
    bool stop_at_axis = false; ///< stop and extrapolate instead of throwing
    int samples = 0;           ///< >0: equispaced output in s; 0: every step
};

/// Result of an ODE integration along a Delaunay profile.
struct Profile {
    std::vector<CurvePoint> points;
    double weighted_length = 0.0;  ///< integral of y^{n-2} ds
    double weighted_moment = 0.0;  ///< integral of y^{n-1} dx (signed)
    bool reached_axis = false;
};

/// Integrates the generating-curve system from `start` over the arclength
/// span (negative spans integrate backwards). `start` must satisfy the first
/// integral of `p` to 1e-10 (relative to max(1,|T|)) and have y > 0.
/// Throws SingularityError when y reaches the axis (unless stop_at_axis)
/// and ToleranceError when the stepper stalls.
Profile integrate_profile(const DelaunayParams& p, const CurvePoint& start, double span,
                          const ProfileOptions& opts = {});

/// Integrates from `start` until sigma first reaches `sigma_target`
/// (sigma is continuous, not wrapped) or until |span| is exhausted, in
/// which case NoRootError is thrown. Returns the profile up to the event.
Profile integrate_profile_to_angle(const DelaunayParams& p, const CurvePoint& start,
                                   double sigma_target, double max_span,
                                   const ProfileOptions& opts = {});

/// Same, stopping when y first reaches `y_target`.
Profile integrate_profile_to_ordinate(const DelaunayParams& p, const CurvePoint& start,
                                      double y_target, double max_span,
                                      const ProfileOptions& opts = {});

/// cos sigma as a function of the ordinate on a curve of parameters p:
/// (T + H y^{n-1}) / y^{n-2}.
double cos_sigma_of_y(const DelaunayParams& p, double y);

/// Graph-form quadrature
///   x(y) = x0 + branch * int_{min(y0,y)}^{max(y0,y)} c(t) / sqrt(1 - c(t)^2) dt,
/// c(t) = cos_sigma_of_y(p, t), i.e. the integrand
/// [(t^{n-2}/(T + H t^{n-1}))^2 - 1]^{-1/2} on graph branches.
/// branch = +1 moves forward along the oriented curve, -1 backward.
/// An endpoint with ||c| - 1| <= 1e-9 is taken to be the exact turning
/// point (polished by Newton) and integrated through a u^2 substitution.
/// Throws DomainError when |c| > 1 inside the range.
double x_of_y(const DelaunayParams& p, double y0, double x0, int branch, double y,
              double tol = 1e-12);

/// Kenmotsu representation of an n = 3 Delaunay curve.
struct KenmotsuParams {
    double H = 1.0;
    double B = 0.0;
    double c = 0.0;  ///< axial displacement
};

/// 1 + B^2 + 2 B cos(2 H s).
double kenmotsu_q(const KenmotsuParams& k, double s);

/// Ordinate sqrt(Q)/(2H) (closed form).
double kenmotsu_y(const KenmotsuParams& k, double s);

/// Tangent angle at s.
double kenmotsu_sigma(const KenmotsuParams& k, double s);

/// int_a^b (1 + B cos 2Ht) / sqrt(Q(t)) dt, through incomplete elliptic
/// integrals. `tol` is accepted for interface symmetry and unused.
double kenmotsu_dx(const KenmotsuParams& k, double a, double b, double tol = 1e-13);

struct KenmotsuIntegrals {
    double dx = 0.0;        ///< int (1 + B cos 2Ht) / sqrt(Q)
    double root_q = 0.0;    ///< int sqrt(Q)
    double weighted = 0.0;  ///< int (1 + B cos 2Ht) sqrt(Q)
};

/// The three Kenmotsu integrals over [a, b] in closed form. The area and
/// volume of the rotated arc are (pi/H) root_q and (pi/(4H^2)) weighted.
KenmotsuIntegrals kenmotsu_integrals(const KenmotsuParams& k, double a, double b);

/// The same integral by adaptive quadrature.
double kenmotsu_dx_quadrature(const KenmotsuParams& k, double a, double b, double tol = 1e-12);

/// (x(s), y(s)) with x(s) = c + int_0^s (1 + B cos 2Ht)/sqrt(Q) dt.
/// Throws SingularityError if Q vanishes on [0, s].
std::pair<double, double> kenmotsu_point(const KenmotsuParams& k, double s,
                                         double tol = 1e-13);

/// Full curve point (x, y, sigma) at arclength s.
CurvePoint kenmotsu_state(const KenmotsuParams& k, double s, double tol = 1e-13);

/// First integral of the Kenmotsu curve: (1 - B^2)/(4H).
double kenmotsu_first_integral(const KenmotsuParams& k);

/// Throws SingularityError if Q(s) = 0 for some s between a and b.
void kenmotsu_check_regular(const KenmotsuParams& k, double a, double b);

} // namespace cheeger
