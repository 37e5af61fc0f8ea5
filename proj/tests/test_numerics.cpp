#include "doctest.h"

#include "cheeger/candidates.hpp"
#include "cheeger/delaunay.hpp"
#include "cheeger/solver.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace cheeger;
using doctest::Approx;

TEST_SUITE("numerics") {

TEST_CASE("integrate: smooth and singular integrands") {
    CHECK(integrate([](double t) { return std::sin(t); }, 0.0, std::numbers::pi, 1e-12) ==
          Approx(2.0).epsilon(1e-12));
    const double s = integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12,
                               Endpoint::InverseSqrt);
    CHECK(s == Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double t) { return t; }, 1.0, 0.0, 1e-12) == Approx(-0.5));
}

TEST_CASE("integrate: Kenmotsu x-integral with B = 1 reduces to int |cos t|") {
    auto f = [](double t) { return (1.0 + std::cos(2 * t)) / std::sqrt(2.0 + 2.0 * std::cos(2 * t)); };
    const double q = integrate(f, 0.0, 1.0, 1e-12);
    CHECK(q == Approx(std::sin(1.0)).epsilon(1e-11));
    CHECK(kenmotsu_dx({1.0, 1.0, 0.0}, 0.0, 1.0) == Approx(q).epsilon(1e-11));
}

TEST_CASE("find_root") {
    const double r = find_root([](double y) { return y - y * y - 0.1; }, 0.5, 1.0, 1e-14);
    CHECK(r == Approx((1.0 + std::sqrt(0.6)) / 2.0).epsilon(1e-12));
    CHECK(find_root([](double t) { return std::cos(t); }, 1.0, 2.0, 1e-14) ==
          Approx(std::numbers::pi / 2).epsilon(1e-13));
    CHECK_THROWS_AS(find_root([](double t) { return t * t + 1.0; }, -1.0, 1.0, 1e-10), NoRootError);
}

TEST_CASE("find_root: cylinder tangency matches the closed form") {
    // -H y^2 = r - H r^2: vertical tangent at y, horizontal tangent at r
    const double H = 2.0, r = 1.0;
    const double T = r - H * r * r;
    const double y = find_root([&](double t) { return -H * t * t - T; }, 0.0, r, 1e-15);
    CHECK(y == Approx(std::sqrt(r * r - r / H)).epsilon(1e-12));
    CHECK(y == Approx(cylinder_vertical_ordinate(3, r, H)).epsilon(1e-12));
}

TEST_CASE("find_roots_on_grid returns every root") {
    const auto roots = find_roots_on_grid([](double t) { return std::sin(t); }, 0.5, 10.0, 50, 1e-13);
    REQUIRE(roots.size() == 3);
    for (int k = 0; k < 3; ++k)
        CHECK(roots[k] == Approx((k + 1) * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("minimize_scalar") {
    const auto m = minimize_scalar([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0, 1e-10);
    CHECK(m.x == Approx(2.0).epsilon(1e-8));
    CHECK(m.fx == Approx(0.0));
    CHECK(m.unimodal);

    const auto w = minimize_scalar([](double x) { return std::cos(3 * x) + 0.1 * x; }, 0.0, 6.0, 1e-10);
    CHECK_FALSE(w.unimodal);
    CHECK(w.local_minima >= 2);
    // -3 sin 3x + 0.1 = 0 on the first well
    CHECK(w.x == Approx((std::numbers::pi - std::asin(1.0 / 30.0)) / 3.0).epsilon(1e-8));

    // infeasible left part is handled
    const auto f = minimize_scalar(
        [](double x) { return x < 1.0 ? std::nan("") : (x - 3.0) * (x - 3.0); }, 0.0, 5.0, 1e-10);
    CHECK(f.x == Approx(3.0).epsilon(1e-8));
}

TEST_CASE("minimize_scalar on cylinder ratio envelopes") {
    auto run = [](DomainSpec d) {
        auto env = [&](double H) { return ratio_envelope(d, H, "", 1e-10); };
        const int n1 = d.n - 1;
        return minimize_scalar(env, 0.98 * faber_krahn_bound(d) / n1,
                               1.02 * domain_metrics(d).ratio / n1, 1e-9);
    };
    CHECK(run(make_cylinder(1, 1, 3)).x == Approx(1.86237).epsilon(1e-5));
    CHECK(run(make_cylinder(2, 1, 4)).x == Approx(1.24549).epsilon(1e-5));
}

TEST_CASE("tolerances") {
    const Tolerances t = parse_tolerances("1e-9");
    CHECK(t.quad == 1e-9);
    CHECK(t.root == 1e-9);
    const Tolerances u = parse_tolerances("quad=1e-8,minimize=1e-7");
    CHECK(u.quad == 1e-8);
    CHECK(u.minimize == 1e-7);
    CHECK(u.root == Tolerances{}.root);
    CHECK_THROWS_AS(parse_tolerances("-1"), DomainError);
    CHECK_THROWS_AS(parse_tolerances("quad=abc"), DomainError);
    const Tolerances h = Tolerances{}.scaled(0.5);
    CHECK(h.quad == Tolerances{}.quad * 0.5);
}

TEST_CASE("map_indexed: serial and parallel agree bit for bit") {
    std::vector<double> xs;
    for (int i = 0; i < 97; ++i)
        xs.push_back(0.1 * i);
    auto f = [](double x) { return std::exp(std::sin(x)) * std::cos(3 * x); };
    const auto a = map_indexed(xs, f, Execution::Serial);
    const auto b = map_indexed(xs, f, Execution::Parallel);
    CHECK(a == b);
    CHECK_THROWS_AS(map_indexed(xs, [](double x) -> double {
                        if (x > 5.0)
                            throw NoRootError("x");
                        return x;
                    }, Execution::Parallel),
                    NoRootError);
}

TEST_CASE("ratio envelope: serial and parallel pre-scan merge identically") {
    const DomainSpec d = make_double_cone(1, 1, std::numbers::pi / 4);
    SolverConfig s, p;
    p.exec = Execution::Parallel;
    const auto a = cheeger_constant(d, s);
    const auto b = cheeger_constant(d, p);
    CHECK(a.h == b.h);
    CHECK(a.H_opt == b.H_opt);
}

}
