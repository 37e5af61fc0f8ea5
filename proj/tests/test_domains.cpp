#include "doctest.h"

#include "cheeger/domains.hpp"

#include <cmath>
#include <numbers>

using namespace cheeger;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point2> corners(const DomainSpec& d) {
    std::vector<Point2> pts;
    for (const auto& p : d.generatrix.pieces)
        pts.push_back(piece_start(p));
    pts.push_back(piece_end(d.generatrix.pieces.back()));
    return pts;
}

bool same(Point2 a, Point2 b, double tol = 1e-12) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

} // namespace

TEST_SUITE("domains") {

TEST_CASE("cylinder generatrix has three segments") {
    const auto d = make_cylinder(3, 1);
    REQUIRE(d.generatrix.pieces.size() == 3);
    const auto c = corners(d);
    CHECK(same(c[0], {0, 0}));
    CHECK(same(c[1], {0, 1}));
    CHECK(same(c[2], {3, 1}));
    CHECK(same(c[3], {3, 0}));
}

TEST_CASE("double cone right angle") {
    CHECK(double_cone_right_angle(make_double_cone(1, 3, kPi / 3)) == Approx(kPi / 6).epsilon(1e-14));
    CHECK(double_cone_right_angle(make_double_cone(1, 1, 0.7)) == Approx(0.7));
}

TEST_CASE("double cone apex lies on both lines") {
    for (double th : {kPi / 6, kPi / 4, 1.2}) {
        const auto d = make_double_cone(1.3, 2.1, th);
        const double apex = d.l * std::tan(th);
        const double phi = double_cone_right_angle(d);
        CHECK(std::abs(d.r * std::tan(phi) - apex) < 1e-12);
        const auto c = corners(d);
        CHECK(same(c[1], {0, apex}));
    }
}

TEST_CASE("hourglass corners") {
    const auto d = make_hourglass(3, 2, 0.3, 0.6);
    const auto c = corners(d);
    const std::vector<Point2> want{{-3, 0}, {-3, 2}, {-0.3, 0.6}, {0, 2},
                                   {0.3, 0.6}, {3, 2}, {3, 0}};
    REQUIRE(c.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(same(c[i], want[i]));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(make_cylinder(-1, 1), DomainError);
    CHECK_THROWS_AS(make_cylinder(1, 1, 2), DomainError);
    CHECK_THROWS_AS(make_cone(1, kPi / 2), DomainError);
    CHECK_THROWS_AS(make_double_cone(1, 1, 0.0), DomainError);
    CHECK_THROWS_AS(make_hourglass(3, 2, 0.3, 2.5), DomainError);
    CHECK_THROWS_AS(make_hourglass(3, 2, 3.5, 0.6), DomainError);
}

TEST_CASE("domain metrics") {
    const auto k = domain_metrics(make_cone(1, kPi / 4));
    CHECK(k.ratio == Approx(3 * (1 + std::cos(kPi / 4)) / std::sin(kPi / 4)).epsilon(1e-12));
    CHECK(k.ratio == Approx(7.2426).epsilon(1e-4));
    const auto z = domain_metrics(make_cylinder(1, 1));
    CHECK(z.volume == Approx(kPi));
    CHECK(z.area == Approx(4 * kPi));
    CHECK(z.ratio == Approx(4.0));
    CHECK(domain_metrics(make_ball(1)).ratio == Approx(3.0));
    CHECK(domain_metrics(make_ball(2, 5)).ratio == Approx(2.5));
}

TEST_CASE("inscribed ball radius") {
    CHECK(inscribed_ball_radius(make_cone(1, kPi / 3)) ==
          Approx(std::sin(kPi / 3) / (1 + std::sin(kPi / 3))));
    CHECK(inscribed_ball_radius(make_cone(1, kPi / 3)) == Approx(0.4641).epsilon(1e-4));
    CHECK(inscribed_ball_radius(make_cylinder(2, 1)) == Approx(1.0));
    CHECK(inscribed_ball_radius(make_cylinder(1, 3)) == Approx(0.5));
    for (const auto& d : {make_cone(1, kPi / 3), make_cone(1, 1.4), make_cylinder(2, 1),
                          make_cylinder(3, 0.5)})
        CHECK(inscribed_ball_radius_numeric(d) == Approx(inscribed_ball_radius(d)).epsilon(1e-6));
    const auto dc = make_double_cone(1, 1, kPi / 4);
    // square cross-section |x| + |y| <= 1
    CHECK(inscribed_ball_radius(dc) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
    const double hg = inscribed_ball_radius(make_hourglass(3, 2, 0.3, 0.6));
    CHECK(hg > 0.6);
    CHECK(hg < 2.0);
}

TEST_CASE("Faber-Krahn bound") {
    CHECK(faber_krahn_bound(make_ball(1)) == Approx(3.0));
    CHECK(faber_krahn_bound(make_cylinder(1, 1)) == Approx(3 * std::cbrt(4.0 / 3.0)));
    CHECK(faber_krahn_bound(make_cylinder(1, 1)) == Approx(3.3019).epsilon(1e-4));
}

TEST_CASE("generatrices are simple and bound a region") {
    for (const auto& d :
         {make_cylinder(1, 1), make_cylinder(3, 1, 10), make_cone(1, kPi / 6), make_cone(4, 0.64),
          make_double_cone(1, 3, kPi / 3), make_double_cone(1.8, 3.2, std::asin(0.8)),
          make_hourglass(3, 2, 0.3, 0.6), make_hourglass(3, 2, 0.3, 1.9), make_ball(1)}) {
        CHECK(generatrix_is_simple(d));
        CHECK_NOTHROW(check_bounds_region(d.generatrix));
    }
}

TEST_CASE("signed distance and upper boundary") {
    const auto z = make_cylinder(2, 1);
    CHECK(region_signed_distance(z, {1.0, 0.5}) == Approx(0.5));
    CHECK(region_signed_distance(z, {1.0, 1.5}) == Approx(-0.5));
    CHECK(region_signed_distance(z, {1.0, 0.0}) == Approx(1.0));
    const auto h = make_hourglass(3, 2, 0.3, 0.6);
    CHECK(upper_boundary(h, 0.0) == Approx(2.0));
    CHECK(upper_boundary(h, 0.3) == Approx(0.6));
    CHECK(upper_boundary(h, -3.0) == Approx(2.0));
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::Cylinder, Family::Cone, Family::DoubleCone, Family::Hourglass,
                     Family::Ball})
        CHECK(family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(family_from_string("torus"), DomainError);
}

}
