#include "doctest.h"

#include "cheeger/solver.hpp"

#include <cmath>
#include <numbers>

using namespace cheeger;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

void check_result(const CheegerResult& r) {
    const int n1 = r.domain.n - 1;
    CHECK(std::abs(r.h - n1 * r.H_opt) < 1e-6);
    CHECK(r.diagnostics.agreement < 1e-6);
    CHECK(faber_krahn_bound(r.domain) <= r.h + 1e-9);
    CHECK(r.h <= domain_metrics(r.domain).ratio + 1e-9);
    CHECK(r.diagnostics.clearance >= -1e-9);
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("tabulated examples") {
    const auto z = cheeger_constant(make_cylinder(1, 1));
    CHECK(z.h == Approx(3.72474).epsilon(1e-5));
    CHECK(z.H_opt == Approx(1.86237).epsilon(1e-5));
    check_result(z);
    const auto d = cheeger_constant(make_double_cone(1, 1, kPi / 4));
    CHECK(d.h == Approx(4.00593).epsilon(1e-5));
    check_result(d);
    const auto k = cheeger_constant(make_cone(3, std::asin(0.8)));
    CHECK(k.h == Approx(1.71916).epsilon(1e-5));
    check_result(k);
}

TEST_CASE("higher dimensional cylinders") {
    const auto a = cheeger_constant(make_cylinder(2, 1, 4));
    CHECK(a.H_opt == Approx(1.24549).epsilon(1e-5));
    check_result(a);
    check_result(cheeger_constant(make_cylinder(1, 1, 30)));
}

TEST_CASE("ball") {
    const auto b = cheeger_constant(make_ball(2, 4));
    CHECK(b.h == Approx(2.0));
    CHECK(b.H_opt == Approx(2.0 / 3.0));
    CHECK(b.h == Approx(faber_krahn_bound(b.domain)));
}

TEST_CASE("h is nonincreasing in l for cylinders") {
    for (int n : {3, 4, 5}) {
        double prev = INFINITY;
        for (double l : {1.0, 2.0, 3.0}) {
            const double h = cheeger_constant(make_cylinder(l, 1, n)).h;
            CHECK(h <= prev);
            prev = h;
        }
    }
}

TEST_CASE("halving the tolerances barely moves h") {
    SolverConfig a, b;
    b.tol = a.tol.scaled(0.5);
    const double ha = cheeger_constant(make_cylinder(1, 1), a).h;
    const double hb = cheeger_constant(make_cylinder(1, 1), b).h;
    CHECK(std::abs(ha - hb) < 1e-5);
}

TEST_CASE("ratio envelope is NaN outside the admissible range") {
    CHECK(std::isnan(ratio_envelope(make_cylinder(1, 1), 0.5, "", 1e-10)));
    CandidateSet best;
    const double r = ratio_envelope(make_cylinder(1, 1), 2.0, "", 1e-10, &best);
    CHECK(r == Approx(best.breakdown.ratio()));
    CHECK(best.structure == "cylinder");
}

TEST_CASE("structure restriction") {
    SolverConfig cfg;
    cfg.structure = "hourglass-iv";
    const auto r = cheeger_constant(make_hourglass(3, 2, 0.3, 0.6), cfg);
    CHECK(r.optimal.structure == "hourglass-iv");
    CHECK(hourglass_phase(r.optimal) == "iv");
}

TEST_CASE("sweep across the sphere transition") {
    SweepConfig cfg;
    cfg.D_min = 1.10;
    cfg.D_max = 1.14;
    cfg.step = 0.01;
    const auto s = hourglass_sweep(3, 2, 0.3, cfg);
    REQUIRE(s.grid.size() == 5);
    REQUIRE(s.critical.size() == 1);
    const auto& c = s.critical[0];
    CHECK(c.from == "ii-0<B<1");
    CHECK(c.to == "ii-B>1");
    CHECK(c.lo <= c.value);
    CHECK(c.value <= c.hi);
    CHECK(c.hi - c.lo <= cfg.bisect_tol);
    CHECK(std::abs(c.value - 1.1216) < 5e-3);
}

TEST_CASE("sweep: serial and parallel runs agree") {
    SweepConfig a;
    a.D_min = 0.40;
    a.D_max = 0.46;
    a.step = 0.02;
    a.bisect_tol = 1e-3;
    SweepConfig b = a;
    b.solver.exec = Execution::Parallel;
    const auto x = hourglass_sweep(3, 2, 0.3, a);
    const auto y = hourglass_sweep(3, 2, 0.3, b);
    REQUIRE(x.grid.size() == y.grid.size());
    for (std::size_t i = 0; i < x.grid.size(); ++i) {
        CHECK(x.grid[i].h == y.grid[i].h);
        CHECK(x.grid[i].phase == y.grid[i].phase);
    }
    REQUIRE(x.critical.size() == y.critical.size());
    for (std::size_t i = 0; i + 1 < x.critical.size(); ++i)
        CHECK(x.critical[i].value < x.critical[i + 1].value);
}

TEST_CASE("sweep rejects empty ranges") {
    SweepConfig cfg;
    cfg.D_min = 1.0;
    cfg.D_max = 0.5;
    CHECK_THROWS_AS(hourglass_sweep(3, 2, 0.3, cfg), DomainError);
}

}
