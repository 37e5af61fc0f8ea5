#pragma once

// Areas and volumes of hypersurfaces of revolution in R^n generated by
// piecewise curves in the closed upper half-plane {y >= 0}.
//
// Orientation: a generatrix runs from the axis on the left, over the top,
// back to the axis on the right (or is closed). Piece volumes are the signed
// quantity omega_{n-1} * int y^{n-1} dx, so the enclosed volume is the
// absolute value of their sum.

#include "cheeger/delaunay.hpp"

#include <variant>
#include <vector>

namespace cheeger {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Straight segment from a to b.
struct Segment {
    Point2 a;
    Point2 b;
};

/// Circular arc (cx + R cos t, cy + R sin t) for t running from t0 to t1.
/// t1 < t0 traverses clockwise.
struct Arc {
    Point2 center;
    double R = 1.0;
    double t0 = 0.0;
    double t1 = 0.0;
};

/// Portion of a Delaunay generating curve: the solution of the profile ODE
/// starting at `start` and followed for arclength `length` (> 0).
struct DelaunayArc {
    DelaunayParams params;
    CurvePoint start;
    double length = 0.0;
};

using GeneratrixPiece = std::variant<Segment, Arc, DelaunayArc>;

struct PiecewiseCurve {
    int n = 3;
    std::vector<GeneratrixPiece> pieces;
};

/// Volume of the unit ball in R^k.
double unit_ball_volume(int k);

/// Lateral (n-1)-area swept by the piece.
double piece_area(int n, const GeneratrixPiece& piece, double tol = 1e-10);

/// Signed volume omega_{n-1} * int y^{n-1} dx along the piece.
double piece_volume(int n, const GeneratrixPiece& piece, double tol = 1e-10);

/// int y^{n-2} ds and int y^{n-1} dx along the piece (the weighted
/// length and the signed weighted moment).
std::pair<double, double> piece_weighted(int n, const GeneratrixPiece& piece,
                                         double tol = 1e-10);

Point2 piece_start(const GeneratrixPiece& piece);
Point2 piece_end(const GeneratrixPiece& piece);

/// `count` (>= 2) points of the piece including both ends, with tangent
/// angle and arclength from the piece start.
std::vector<CurvePoint> sample_piece(const GeneratrixPiece& piece, int count);

/// All pieces sampled and concatenated (shared junction points repeated).
std::vector<CurvePoint> sample_curve(const PiecewiseCurve& curve, int per_piece);

struct AreaVolume {
    double P = 0.0;
    double V = 0.0;
};

/// Throws OpenCurveError unless consecutive pieces meet within 1e-9 and the
/// curve either starts and ends on the axis or is closed.
void check_bounds_region(const PiecewiseCurve& curve);

/// Perimeter and volume of the body of revolution bounded by the curve.
AreaVolume curve_area_volume(const PiecewiseCurve& curve, double tol = 1e-10);

struct WeightedFunctionals {
    double P_w = 0.0;  ///< int y^{n-2} ds
    double V_w = 0.0;  ///< int int y^{n-2} dx dy over the planar region
};

WeightedFunctionals weighted_functionals(const PiecewiseCurve& curve, double tol = 1e-10);

/// Curve scaled about the origin by lambda (Delaunay pieces get H / lambda).
PiecewiseCurve scaled(const PiecewiseCurve& curve, double lambda);

/// Tangent angle mismatch at every junction, wrapped to [0, pi].
std::vector<double> junction_angle_jumps(const PiecewiseCurve& curve);

} // namespace cheeger
