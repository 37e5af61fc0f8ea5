#include "cheeger/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cheeger {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok)
        throw DomainError(what);
}

PiecewiseCurve polyline_curve(int n, const std::vector<Point2>& pts) {
    PiecewiseCurve c{n, {}};
    for (std::size_t i = 1; i < pts.size(); ++i)
        c.pieces.emplace_back(Segment{pts[i - 1], pts[i]});
    return c;
}

std::vector<Point2> corner_points(const DomainSpec& s) {
    switch (s.family) {
    case Family::Cylinder:
        return {{0, 0}, {0, s.r}, {s.l, s.r}, {s.l, 0}};
    case Family::Cone:
        return {{-s.l, 0}, {0, s.l * std::tan(s.theta)}, {0, 0}};
    case Family::DoubleCone:
        return {{-s.l, 0}, {0, s.l * std::tan(s.theta)}, {s.r, 0}};
    case Family::Hourglass:
        return {{-s.A, 0}, {-s.A, s.B}, {-s.C, s.D}, {0, s.B},
                {s.C, s.D},  {s.A, s.B},  {s.A, 0}};
    case Family::Ball:
        break;
    }
    return {};
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Sides of the generatrix that are not on the axis.
std::vector<std::pair<Point2, Point2>> boundary_sides(const DomainSpec& s) {
    const auto pts = generatrix_polyline(s, 512);
    std::vector<std::pair<Point2, Point2>> sides;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i - 1].y == 0.0 && pts[i].y == 0.0)
            continue;
        sides.emplace_back(pts[i - 1], pts[i]);
    }
    return sides;
}

// Even-odd test against the generatrix closed along the axis.
bool inside_region(const std::vector<Point2>& poly, Point2 p) {
    if (p.y < 0.0)
        return false;
    bool in = false;
    const std::size_t m = poly.size();
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const Point2 a = poly[i];
        const Point2 b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x)
                in = !in;
        }
    }
    return in;
}

double orient(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double d1 = orient(c, d, a);
    const double d2 = orient(c, d, b);
    const double d3 = orient(a, b, c);
    const double d4 = orient(a, b, d);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
           d4 != 0;
}

} // namespace

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Cylinder: return "cylinder";
    case Family::Cone: return "cone";
    case Family::DoubleCone: return "double-cone";
    case Family::Hourglass: return "hourglass";
    case Family::Ball: return "ball";
    }
    return "unknown";
}

Family family_from_string(std::string_view s) {
    for (Family f : {Family::Cylinder, Family::Cone, Family::DoubleCone, Family::Hourglass,
                     Family::Ball})
        if (to_string(f) == s)
            return f;
    throw DomainError("unknown domain family '" + std::string(s) + "'");
}

DomainSpec build_domain(DomainSpec s) {
    require(s.n >= 3, "domain: dimension must be >= 3");
    switch (s.family) {
    case Family::Cylinder:
        require(s.l > 0 && s.r > 0, "cylinder: l and r must be positive");
        break;
    case Family::Cone:
        require(s.l > 0, "cone: l must be positive");
        require(s.theta > 0 && s.theta < 0.5 * kPi, "cone: theta must lie in (0, pi/2)");
        break;
    case Family::DoubleCone:
        require(s.l > 0 && s.r > 0, "double cone: l and r must be positive");
        require(s.theta > 0 && s.theta < 0.5 * kPi, "double cone: theta must lie in (0, pi/2)");
        break;
    case Family::Hourglass:
        require(s.C > 0 && s.A > s.C, "hourglass: need A > C > 0");
        require(s.D > 0 && s.B > s.D, "hourglass: need B > D > 0");
        break;
    case Family::Ball:
        require(s.R > 0, "ball: R must be positive");
        break;
    }
    if (s.family == Family::Ball)
        s.generatrix = PiecewiseCurve{s.n, {Arc{{0, 0}, s.R, kPi, 0.0}}};
    else
        s.generatrix = polyline_curve(s.n, corner_points(s));
    return s;
}

DomainSpec make_cylinder(double l, double r, int n) {
    DomainSpec s;
    s.family = Family::Cylinder;
    s.n = n;
    s.l = l;
    s.r = r;
    return build_domain(s);
}

DomainSpec make_cone(double l, double theta, int n) {
    DomainSpec s;
    s.family = Family::Cone;
    s.n = n;
    s.l = l;
    s.theta = theta;
    return build_domain(s);
}

DomainSpec make_double_cone(double l, double r, double theta, int n) {
    DomainSpec s;
    s.family = Family::DoubleCone;
    s.n = n;
    s.l = l;
    s.r = r;
    s.theta = theta;
    return build_domain(s);
}

DomainSpec make_hourglass(double A, double B, double C, double D, int n) {
    DomainSpec s;
    s.family = Family::Hourglass;
    s.n = n;
    s.A = A;
    s.B = B;
    s.C = C;
    s.D = D;
    return build_domain(s);
}

DomainSpec make_ball(double R, int n) {
    DomainSpec s;
    s.family = Family::Ball;
    s.n = n;
    s.R = R;
    return build_domain(s);
}

double double_cone_right_angle(const DomainSpec& spec) {
    return std::atan(spec.l / spec.r * std::tan(spec.theta));
}

DomainMetrics domain_metrics(const DomainSpec& spec) {
    const AreaVolume av = curve_area_volume(spec.generatrix);
    return {av.V, av.P, av.P / av.V};
}

double faber_krahn_bound(const DomainSpec& spec) {
    const double V = domain_metrics(spec).volume;
    return spec.n * std::pow(unit_ball_volume(spec.n) / V, 1.0 / spec.n);
}

std::vector<Point2> generatrix_polyline(const DomainSpec& spec, int per_arc) {
    std::vector<Point2> pts;
    for (const auto& piece : spec.generatrix.pieces) {
        const int count = std::holds_alternative<Segment>(piece) ? 2 : std::max(per_arc, 2);
        const auto samples = sample_piece(piece, count);
        for (const auto& p : samples) {
            const Point2 q{p.x, std::max(p.y, 0.0)};
            if (pts.empty() || pts.back().x != q.x || pts.back().y != q.y)
                pts.push_back(q);
        }
    }
    return pts;
}

double upper_boundary(const DomainSpec& s, double x) {
    constexpr double none = -std::numeric_limits<double>::infinity();
    switch (s.family) {
    case Family::Cylinder:
        return (x >= 0 && x <= s.l) ? s.r : none;
    case Family::Cone:
        return (x >= -s.l && x <= 0) ? (s.l + x) * std::tan(s.theta) : none;
    case Family::DoubleCone:
        if (x >= -s.l && x <= 0)
            return (s.l + x) * std::tan(s.theta);
        if (x > 0 && x <= s.r)
            return s.l / s.r * (s.r - x) * std::tan(s.theta);
        return none;
    case Family::Hourglass: {
        const double ax = std::abs(x);
        if (ax > s.A)
            return none;
        if (ax <= s.C)
            return -(s.B - s.D) / s.C * ax + s.B;
        return (s.B - s.D) / (s.A - s.C) * (ax - s.C) + s.D;
    }
    case Family::Ball:
        return std::abs(x) <= s.R ? std::sqrt(s.R * s.R - x * x) : none;
    }
    return none;
}

double region_signed_distance(const DomainSpec& spec, Point2 p) {
    const auto poly = generatrix_polyline(spec, 2048);
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < poly.size(); ++i) {
        if (poly[i - 1].y == 0.0 && poly[i].y == 0.0)
            continue;
        d = std::min(d, point_segment_distance(p, poly[i - 1], poly[i]));
    }
    Point2 q = p;
    if (q.y == 0.0)
        q.y = 1e-300;  // points on the axis are tested just above it
    return inside_region(poly, q) ? d : -d;
}

double inscribed_ball_radius(const DomainSpec& s) {
    switch (s.family) {
    case Family::Cylinder:
        return std::min(0.5 * s.l, s.r);
    case Family::Cone:
        return s.l * std::sin(s.theta) / (1.0 + std::sin(s.theta));
    case Family::Ball:
        return s.R;
    case Family::DoubleCone:
    case Family::Hourglass:
        break;
    }
    return inscribed_ball_radius_numeric(s);
}

double inscribed_ball_radius_numeric(const DomainSpec& s, double tol) {
    const auto sides = boundary_sides(s);
    const auto poly = generatrix_polyline(s, 512);
    // Clearance of a disk centred at p in the cross-section symmetric about
    // the axis: the mirrored sides are handled by |y|.
    auto clearance = [&](double x, double y) {
        const Point2 p{x, std::abs(y)};
        if (!inside_region(poly, {p.x, std::max(p.y, 1e-300)}))
            return -1.0;
        double d = std::numeric_limits<double>::infinity();
        for (const auto& [a, b] : sides) {
            d = std::min(d, point_segment_distance(p, a, b));
            d = std::min(d, point_segment_distance(p, {a.x, -a.y}, {b.x, -b.y}));
        }
        return d;
    };

    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymax = 0.0;
    for (const auto& p : poly) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    const int nx = 200;
    const int ny = 100;
    double best = -1.0;
    double bx = 0.0;
    double by = 0.0;
    for (int i = 0; i <= nx; ++i) {
        const double x = xmin + (xmax - xmin) * i / nx;
        for (int j = 0; j <= ny; ++j) {
            const double y = ymax * j / ny;
            const double c = clearance(x, y);
            if (c > best) {
                best = c;
                bx = x;
                by = y;
            }
        }
    }
    // Compass search from the best grid point.
    double step = std::max((xmax - xmin) / nx, ymax / ny);
    while (step > tol) {
        bool moved = false;
        for (auto [dx, dy] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
                              {0.7071, 0.7071}, {-0.7071, 0.7071}, {0.7071, -0.7071},
                              {-0.7071, -0.7071}}) {
            const double x = bx + step * dx;
            const double y = std::max(0.0, by + step * dy);
            const double c = clearance(x, y);
            if (c > best) {
                best = c;
                bx = x;
                by = y;
                moved = true;
            }
        }
        if (!moved)
            step *= 0.5;
    }
    return best;
}

bool generatrix_is_simple(const DomainSpec& spec) {
    auto poly = generatrix_polyline(spec, 128);
    // Close the loop along the axis.
    if (poly.front().x != poly.back().x || poly.front().y != poly.back().y)
        poly.push_back(poly.front());
    const std::size_t m = poly.size() - 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1)
                continue;
            if (segments_intersect(poly[i], poly[i + 1], poly[j], poly[j + 1]))
                return false;
        }
    return true;
}

} // namespace cheeger
