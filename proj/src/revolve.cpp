#include "cheeger/revolve.hpp"

#include <cmath>
#include <numbers>

namespace cheeger {

namespace {

double ipow(double y, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= y;
    return r;
}

// sum_{k=0}^{m} a^k b^{m-k}
double homogeneous_sum(double a, double b, int m) {
    double s = 0.0;
    for (int k = 0; k <= m; ++k)
        s += ipow(a, k) * ipow(b, m - k);
    return s;
}

std::pair<double, double> segment_weighted(int n, const Segment& g) {
    const double dx = g.b.x - g.a.x;
    const double dy = g.b.y - g.a.y;
    const double L = std::hypot(dx, dy);
    const double y0 = g.a.y;
    const double y1 = g.b.y;
    // Exact means of y^{n-2} and y^{n-1} over the segment.
    const double pw = L * homogeneous_sum(y0, y1, n - 2) / (n - 1);
    const double mw = dx * homogeneous_sum(y0, y1, n - 1) / n;
    return {pw, mw};
}

std::pair<double, double> arc_weighted(int n, const Arc& a, double tol) {
    const double cy = a.center.y;
    const double R = a.R;
    const double t0 = a.t0;
    const double t1 = a.t1;
    const double sgn = t1 >= t0 ? 1.0 : -1.0;
    if (n == 3) {
        auto i_sin = [](double t) { return -std::cos(t); };
        auto i_sin2 = [](double t) { return 0.5 * t - 0.25 * std::sin(2.0 * t); };
        auto i_sin3 = [](double t) {
            const double c = std::cos(t);
            return -c + c * c * c / 3.0;
        };
        const double pw = sgn * R * (cy * (t1 - t0) + R * (std::cos(t0) - std::cos(t1)));
        const double mw = -R * (cy * cy * (i_sin(t1) - i_sin(t0)) +
                                2.0 * cy * R * (i_sin2(t1) - i_sin2(t0)) +
                                R * R * (i_sin3(t1) - i_sin3(t0)));
        return {pw, mw};
    }
    auto fy = [&](double t) { return std::max(0.0, cy + R * std::sin(t)); };
    const double pw = sgn * integrate([&](double t) { return ipow(fy(t), n - 2) * R; }, t0, t1, tol);
    const double mw =
        integrate([&](double t) { return -ipow(fy(t), n - 1) * R * std::sin(t); }, t0, t1, tol);
    return {pw, mw};
}

std::pair<double, double> delaunay_weighted(const DelaunayArc& d) {
    if (!(d.length >= 0.0))
        throw DomainError("DelaunayArc: negative length");
    ProfileOptions opts;
    opts.stop_at_axis = true;
    const Profile pr = integrate_profile(d.params, d.start, d.length, opts);
    return {pr.weighted_length, pr.weighted_moment};
}

Point2 arc_point(const Arc& a, double t) {
    return {a.center.x + a.R * std::cos(t), a.center.y + a.R * std::sin(t)};
}

CurvePoint delaunay_end(const DelaunayArc& d) {
    ProfileOptions opts;
    opts.stop_at_axis = true;
    return integrate_profile(d.params, d.start, d.length, opts).points.back();
}

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * std::numbers::pi);
    return std::abs(a);
}

} // namespace

double unit_ball_volume(int k) {
    if (k < 1)
        throw DomainError("unit_ball_volume: k must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

std::pair<double, double> piece_weighted(int n, const GeneratrixPiece& piece, double tol) {
    if (n < 2)
        throw DomainError("revolve: dimension must be >= 2");
    return std::visit(
        [&](const auto& g) -> std::pair<double, double> {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>)
                return segment_weighted(n, g);
            else if constexpr (std::is_same_v<G, Arc>)
                return arc_weighted(n, g, tol);
            else
                return delaunay_weighted(g);
        },
        piece);
}

double piece_area(int n, const GeneratrixPiece& piece, double tol) {
    return (n - 1) * unit_ball_volume(n - 1) * piece_weighted(n, piece, tol).first;
}

double piece_volume(int n, const GeneratrixPiece& piece, double tol) {
    return unit_ball_volume(n - 1) * piece_weighted(n, piece, tol).second;
}

Point2 piece_start(const GeneratrixPiece& piece) {
    return std::visit(
        [](const auto& g) -> Point2 {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>)
                return g.a;
            else if constexpr (std::is_same_v<G, Arc>)
                return arc_point(g, g.t0);
            else
                return {g.start.x, g.start.y};
        },
        piece);
}

Point2 piece_end(const GeneratrixPiece& piece) {
    return std::visit(
        [](const auto& g) -> Point2 {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>) {
                return g.b;
            } else if constexpr (std::is_same_v<G, Arc>) {
                return arc_point(g, g.t1);
            } else {
                const CurvePoint e = delaunay_end(g);
                return {e.x, e.y};
            }
        },
        piece);
}

std::vector<CurvePoint> sample_piece(const GeneratrixPiece& piece, int count) {
    count = std::max(count, 2);
    std::vector<CurvePoint> out;
    out.reserve(count);
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>) {
                const double dx = g.b.x - g.a.x;
                const double dy = g.b.y - g.a.y;
                const double L = std::hypot(dx, dy);
                const double sigma = std::atan2(dy, dx);
                for (int i = 0; i < count; ++i) {
                    const double f = static_cast<double>(i) / (count - 1);
                    out.push_back({f * L, g.a.x + f * dx, g.a.y + f * dy, sigma});
                }
            } else if constexpr (std::is_same_v<G, Arc>) {
                const double dir = g.t1 >= g.t0 ? 1.0 : -1.0;
                for (int i = 0; i < count; ++i) {
                    const double f = static_cast<double>(i) / (count - 1);
                    const double t = g.t0 + f * (g.t1 - g.t0);
                    const Point2 p = arc_point(g, t);
                    const double sigma = std::remainder(t + dir * 0.5 * std::numbers::pi,
                                                        2.0 * std::numbers::pi);
                    out.push_back({g.R * std::abs(t - g.t0), p.x, p.y, sigma});
                }
            } else {
                ProfileOptions opts;
                opts.stop_at_axis = true;
                opts.samples = count;
                out = integrate_profile(g.params, g.start, g.length, opts).points;
                for (auto& p : out)
                    p.s -= g.start.s;
            }
        },
        piece);
    return out;
}

std::vector<CurvePoint> sample_curve(const PiecewiseCurve& curve, int per_piece) {
    std::vector<CurvePoint> out;
    double offset = 0.0;
    for (const auto& piece : curve.pieces) {
        auto pts = sample_piece(piece, per_piece);
        for (auto& p : pts)
            p.s += offset;
        offset = pts.back().s;
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

void check_bounds_region(const PiecewiseCurve& curve) {
    if (curve.pieces.empty())
        throw OpenCurveError("curve has no pieces");
    constexpr double tol = 1e-9;
    std::vector<std::pair<Point2, Point2>> ends;
    ends.reserve(curve.pieces.size());
    for (const auto& piece : curve.pieces)
        ends.emplace_back(piece_start(piece), piece_end(piece));
    auto close = [](Point2 a, Point2 b) {
        return std::hypot(a.x - b.x, a.y - b.y) <= tol * std::max(1.0, std::hypot(a.x, a.y));
    };
    for (std::size_t i = 1; i < ends.size(); ++i)
        if (!close(ends[i - 1].second, ends[i].first))
            throw OpenCurveError("consecutive pieces do not share an endpoint (piece " +
                                 std::to_string(i) + ")");
    const Point2 first = ends.front().first;
    const Point2 last = ends.back().second;
    const bool on_axis = std::abs(first.y) <= tol && std::abs(last.y) <= tol;
    if (!on_axis && !close(first, last))
        throw OpenCurveError("curve neither closes nor ends on the axis");
}

AreaVolume curve_area_volume(const PiecewiseCurve& curve, double tol) {
    check_bounds_region(curve);
    const int n = curve.n;
    double pw = 0.0;
    double mw = 0.0;
    for (const auto& piece : curve.pieces) {
        const auto [a, b] = piece_weighted(n, piece, tol);
        pw += a;
        mw += b;
    }
    const double w = unit_ball_volume(n - 1);
    AreaVolume r{(n - 1) * w * pw, w * std::abs(mw)};
    if (!(r.V > 0.0))
        throw OpenCurveError("curve encloses no volume");
    return r;
}

WeightedFunctionals weighted_functionals(const PiecewiseCurve& curve, double tol) {
    check_bounds_region(curve);
    const int n = curve.n;
    double pw = 0.0;
    double mw = 0.0;
    for (const auto& piece : curve.pieces) {
        const auto [a, b] = piece_weighted(n, piece, tol);
        pw += a;
        mw += b;
    }
    return {pw, std::abs(mw) / (n - 1)};
}

PiecewiseCurve scaled(const PiecewiseCurve& curve, double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("scaled: factor must be positive");
    PiecewiseCurve out{curve.n, {}};
    for (const auto& piece : curve.pieces) {
        out.pieces.push_back(std::visit(
            [&](const auto& g) -> GeneratrixPiece {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, Segment>) {
                    return Segment{{lambda * g.a.x, lambda * g.a.y},
                                   {lambda * g.b.x, lambda * g.b.y}};
                } else if constexpr (std::is_same_v<G, Arc>) {
                    return Arc{{lambda * g.center.x, lambda * g.center.y}, lambda * g.R, g.t0,
                               g.t1};
                } else {
                    DelaunayArc d = g;
                    d.params.H /= lambda;
                    d.params.T *= std::pow(lambda, g.params.n - 2);
                    d.start.x *= lambda;
                    d.start.y *= lambda;
                    d.start.s *= lambda;
                    d.length *= lambda;
                    return d;
                }
            },
            piece));
    }
    return out;
}

std::vector<double> junction_angle_jumps(const PiecewiseCurve& curve) {
    std::vector<double> jumps;
    for (std::size_t i = 1; i < curve.pieces.size(); ++i) {
        const auto a = sample_piece(curve.pieces[i - 1], 2);
        const auto b = sample_piece(curve.pieces[i], 2);
        jumps.push_back(wrap_angle(b.front().sigma - a.back().sigma));
    }
    return jumps;
}

} // namespace cheeger
