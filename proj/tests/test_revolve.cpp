#include "doctest.h"

#include "cheeger/revolve.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cheeger;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

PiecewiseCurve half_circle(int n, double R = 1.0) {
    return {n, {Arc{{0.0, 0.0}, R, kPi, 0.0}}};
}

PiecewiseCurve closed_cylinder(int n, double l, double r) {
    return {n, {Segment{{0, 0}, {0, r}}, Segment{{0, r}, {l, r}}, Segment{{l, r}, {l, 0}}}};
}

// Polygonal graph over [0, L] with a circular bump and a nodoid arc in the middle.
PiecewiseCurve random_curve(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    PiecewiseCurve c{n, {}};
    Point2 p{0.0, 0.0};
    auto to = [&](Point2 q) {
        c.pieces.push_back(Segment{p, q});
        p = q;
    };
    to({0.0, 0.5 + u(rng)});
    for (int i = 0; i < 3; ++i)
        to({p.x + 0.2 + u(rng), 0.5 + u(rng)});
    // upper semicircle bump of radius R sitting on the current height
    const double R = 0.1 + 0.3 * u(rng);
    c.pieces.push_back(Arc{{p.x + R, p.y}, R, kPi, 0.0});
    p = {p.x + 2 * R, p.y};
    const double H = 1.5 / p.y;
    const DelaunayParams dp{n, H, first_integral(n, H, p.y, 0.0)};
    const CurvePoint start{0.0, p.x, p.y, 0.0};
    const DelaunayArc d{dp, start, 0.3 + 0.5 * u(rng)};
    c.pieces.push_back(d);
    const auto end = sample_piece(d, 2).back();
    p = {end.x, end.y};
    to({p.x + 0.5, 0.3 + u(rng)});
    to({p.x, 0.0});
    return c;
}

} // namespace

TEST_SUITE("revolve") {

TEST_CASE("unit_ball_volume") {
    CHECK(unit_ball_volume(1) == Approx(2.0));
    CHECK(unit_ball_volume(2) == Approx(kPi));
    CHECK(unit_ball_volume(3) == Approx(4.0 * kPi / 3.0));
    CHECK(unit_ball_volume(4) == Approx(kPi * kPi / 2.0));
}

TEST_CASE("piece_area") {
    CHECK(piece_area(3, Segment{{0, 1}, {1, 1}}) == Approx(2 * kPi));
    CHECK(piece_area(3, Arc{{0, 0}, 1.0, kPi, 0.0}) == Approx(4 * kPi));
    const DelaunayArc cyl{{3, 1.0, 0.25}, {0, 0, 0.5, 0}, 1.0};
    CHECK(piece_area(3, cyl) == Approx(kPi).epsilon(1e-12));
    // spherical cap of angle theta: 2 pi R^2 (1 - sin theta)
    const double th = 0.4;
    CHECK(piece_area(3, Arc{{0, 0}, 2.0, kPi / 2 - th, 0.0}) ==
          Approx(2 * kPi * 4.0 * (1 - std::sin(th))).epsilon(1e-12));
}

TEST_CASE("piece_volume") {
    CHECK(std::abs(piece_volume(3, Segment{{0, 1}, {2, 1}})) == Approx(2 * kPi));
    CHECK(std::abs(piece_volume(3, Arc{{0, 0}, 1.0, kPi, 0.0})) == Approx(4 * kPi / 3));
    const DelaunayArc cyl{{3, 1.0, 0.25}, {0, 0, 0.5, 0}, 4.0};
    CHECK(std::abs(piece_volume(3, cyl)) == Approx(kPi).epsilon(1e-12));
    // slab of the ball cut at x = R sin(th) is the hemisphere minus the cap
    const double th = 0.7, R = 1.5, s = std::sin(th);
    const double cap = kPi * R * R * R * (2 - 3 * s + s * s * s) / 3;
    const Arc a{{0, 0}, R, kPi / 2, kPi / 2 - th};
    const Point2 e = piece_end(a);
    const PiecewiseCurve c{3, {Segment{{0, 0}, {0, R}}, a, Segment{e, {e.x, 0}}}};
    CHECK(curve_area_volume(c).V == Approx(2 * kPi * R * R * R / 3 - cap).epsilon(1e-12));
}

TEST_CASE("curve_area_volume") {
    auto b = curve_area_volume(half_circle(3));
    CHECK(b.P == Approx(4 * kPi));
    CHECK(b.V == Approx(4 * kPi / 3));
    auto z = curve_area_volume(closed_cylinder(3, 1, 1));
    CHECK(z.P == Approx(4 * kPi));
    CHECK(z.V == Approx(kPi));
    auto b5 = curve_area_volume(half_circle(5));
    CHECK(b5.V == Approx(unit_ball_volume(5)).epsilon(1e-10));
    CHECK(b5.P == Approx(5 * unit_ball_volume(5)).epsilon(1e-10));

    const PiecewiseCurve open{3, {Segment{{0, 0}, {0, 1}}, Segment{{0, 1}, {1, 1}}}};
    CHECK_THROWS_AS(curve_area_volume(open), OpenCurveError);
}

TEST_CASE("weighted_functionals") {
    const PiecewiseCurve sq{3, {Segment{{0, 0}, {0, 1}}, Segment{{0, 1}, {1, 1}},
                                Segment{{1, 1}, {1, 0}}}};
    CHECK(weighted_functionals(sq).V_w == Approx(0.5));
    CHECK(weighted_functionals(half_circle(3)).P_w == Approx(2.0));
}

TEST_CASE("additivity under splitting") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int n : {3, 4, 6}) {
        const Segment sg{{0.2, 0.3}, {1.7, 1.1}};
        const double t = u(rng);
        const Point2 m{sg.a.x + t * (sg.b.x - sg.a.x), sg.a.y + t * (sg.b.y - sg.a.y)};
        CHECK(std::abs(piece_area(n, sg) - piece_area(n, Segment{sg.a, m}) -
                       piece_area(n, Segment{m, sg.b})) < 1e-10);
        CHECK(std::abs(piece_volume(n, sg) - piece_volume(n, Segment{sg.a, m}) -
                       piece_volume(n, Segment{m, sg.b})) < 1e-10);

        const Arc ar{{0.5, 0.2}, 0.8, 2.5, 0.3};
        const double tm = ar.t0 + t * (ar.t1 - ar.t0);
        const Arc a1{ar.center, ar.R, ar.t0, tm}, a2{ar.center, ar.R, tm, ar.t1};
        CHECK(std::abs(piece_area(n, ar) - piece_area(n, a1) - piece_area(n, a2)) < 1e-10);
        CHECK(std::abs(piece_volume(n, ar) - piece_volume(n, a1) - piece_volume(n, a2)) < 1e-10);

        const DelaunayParams p{n, 1.1, -0.5 * t_max(n, 1.1)};
        const CurvePoint st{0.0, 0.0, profile_extrema(p).y_max, 0.0};
        const DelaunayArc d{p, st, 2.0};
        const double L1 = 2.0 * t;
        const DelaunayArc d1{p, st, L1};
        const DelaunayArc d2{p, sample_piece(d1, 2).back(), 2.0 - L1};
        CHECK(std::abs(piece_area(n, d) - piece_area(n, d1) - piece_area(n, d2)) < 1e-10);
        CHECK(std::abs(piece_volume(n, d) - piece_volume(n, d1) - piece_volume(n, d2)) < 1e-10);
    }
}

TEST_CASE("scaling law") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int i = 0; i < 20; ++i) {
        const int n = 3 + i % 4;
        const PiecewiseCurve c = random_curve(rng, n);
        const double lam = u(rng);
        const auto a = curve_area_volume(c);
        const auto b = curve_area_volume(scaled(c, lam));
        CHECK(b.P == Approx(a.P * std::pow(lam, n - 1)).epsilon(1e-9));
        CHECK(b.V == Approx(a.V * std::pow(lam, n)).epsilon(1e-9));
        CHECK(b.P / b.V == Approx(a.P / a.V / lam).epsilon(1e-9));
    }
}

TEST_CASE("weighted identity") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const int n = 3 + i % 5;
        const PiecewiseCurve c = random_curve(rng, n);
        const auto pv = curve_area_volume(c);
        const auto w = weighted_functionals(c);
        const double k = (n - 1) * unit_ball_volume(n - 1);
        CHECK(std::abs(pv.P - k * w.P_w) < 1e-10 * std::max(1.0, pv.P));
        CHECK(std::abs(pv.V - k * w.V_w) < 1e-10 * std::max(1.0, pv.V));
    }
}

TEST_CASE("junction jumps") {
    const auto j = junction_angle_jumps(closed_cylinder(3, 1, 1));
    REQUIRE(j.size() == 2);
    CHECK(std::abs(j[0]) == Approx(kPi / 2));
}

}
