#pragma once

// Generic numerical kernel: adaptive quadrature, bracketed root finding and
// scalar minimization. Thin wrappers over Boost.Math that pin down the
// tolerance semantics the rest of the library relies on.

#include "cheeger/error.hpp"
#include "cheeger/parallel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cheeger {

/// Tolerance bundle shared by the solvers and the CLI.
struct Tolerances {
    double quad = 1e-10;     ///< absolute quadrature error
    double root = 1e-10;     ///< bracket width for root finding
    double minimize = 1e-8;  ///< abscissa tolerance of the H minimization
    double ode = 1e-13;      ///< abs/rel local error of the profile integrator

    /// Every tolerance multiplied by `factor`.
    [[nodiscard]] Tolerances scaled(double factor) const {
        return {quad * factor, root * factor, minimize * factor, ode * factor};
    }
};

/// Parses a tolerance override. Accepts either a single number (replaces
/// every tolerance by that value, except `ode`, which is never loosened
/// below 1e-13) or a comma separated list such as "quad=1e-9,root=1e-9".
/// Throws DomainError on malformed input or non-positive values.
Tolerances parse_tolerances(const std::string& text, Tolerances base = {});

/// `base` overridden by the CHEEGER_TOL environment variable, if set.
Tolerances tolerances_from_env(Tolerances base = {});

/// Behaviour of an integrand at an interval endpoint.
enum class Endpoint {
    Regular,
    InverseSqrt,  ///< integrable |t - end|^{-1/2} singularity
};

namespace detail {

template <class F>
double gk_absolute(F&& f, double a, double b, double tol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0.0;
    double l1 = 0.0;
    // Cheap first pass for the L1 scale; Boost's tolerance is relative to it.
    double value = GK::integrate(f, a, b, 0, 0.0, &error, &l1);
    if (!std::isfinite(value))
        throw ToleranceError("integrate: integrand is not finite on the interval");
    if (error <= tol)
        return value;
    const double rel = tol / std::max(l1, std::numeric_limits<double>::min());
    value = GK::integrate(f, a, b, 20, rel, &error, &l1);
    if (!std::isfinite(value) || error > 1e3 * std::max(tol, 1e-15 * l1))
        throw ToleranceError("integrate: tolerance unreachable (error estimate " +
                             std::to_string(error) + ")");
    return value;
}

} // namespace detail

/// Adaptive Gauss-Kronrod estimate of the integral of f over [a, b] with
/// absolute error at most `tol`. Endpoints declared InverseSqrt are removed
/// by the substitution t = end +- u^2 on the adjacent half of the interval.
template <class F>
double integrate(F&& f, double a, double b, double tol, Endpoint left = Endpoint::Regular,
                 Endpoint right = Endpoint::Regular) {
    if (a == b)
        return 0.0;
    if (a > b)
        return -integrate(f, b, a, tol, right, left);
    if (left == Endpoint::Regular && right == Endpoint::Regular)
        return detail::gk_absolute(f, a, b, tol);

    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    if (left == Endpoint::InverseSqrt) {
        auto g = [&](double u) { return 2.0 * u * f(a + u * u); };
        sum += detail::gk_absolute(g, 0.0, std::sqrt(mid - a), 0.5 * tol);
    } else {
        sum += detail::gk_absolute(f, a, mid, 0.5 * tol);
    }
    if (right == Endpoint::InverseSqrt) {
        auto g = [&](double u) { return 2.0 * u * f(b - u * u); };
        sum += detail::gk_absolute(g, 0.0, std::sqrt(b - mid), 0.5 * tol);
    } else {
        sum += detail::gk_absolute(f, mid, b, 0.5 * tol);
    }
    return sum;
}

/// Root of f in [a, b] with final bracket width <= tol (TOMS 748).
/// Requires a sign change; an exact zero at an endpoint is returned as is.
template <class F>
double find_root(F&& f, double a, double b, double tol) {
    if (a > b)
        std::swap(a, b);
    const double fa = f(a);
    const double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw NoRootError("find_root: function not finite at bracket ends");
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0) == (fb > 0))
        throw NoRootError("find_root: no sign change on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    std::uintmax_t max_iter = 300;
    auto stop = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, max_iter);
    return 0.5 * (r.first + r.second);
}

/// All sign-change roots of f on a uniform grid of `intervals` cells over
/// [a, b], each refined to `tol`. Non-finite samples split the scan.
template <class F>
std::vector<double> find_roots_on_grid(F&& f, double a, double b, int intervals, double tol) {
    std::vector<double> roots;
    if (!(b > a) || intervals < 1)
        return roots;
    const double step = (b - a) / intervals;
    double x_prev = a;
    double f_prev = f(a);
    if (f_prev == 0.0)
        roots.push_back(a);
    for (int i = 1; i <= intervals; ++i) {
        const double x = (i == intervals) ? b : a + i * step;
        const double fx = f(x);
        if (std::isfinite(f_prev) && std::isfinite(fx)) {
            if (fx == 0.0) {
                roots.push_back(x);
            } else if (f_prev != 0.0 && (f_prev > 0) != (fx > 0)) {
                try {
                    roots.push_back(find_root(f, x_prev, x, tol));
                } catch (const Error&) {
                    // A non-finite value inside the cell; the cell is skipped.
                }
            }
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

struct MinimizeResult {
    double x = 0.0;
    double fx = 0.0;
    int local_minima = 0;     ///< local minima seen by the pre-scan
    bool unimodal = true;     ///< false when the pre-scan found several minima
    int evaluations = 0;
    std::vector<double> scan_x;  ///< pre-scan abscissae
    std::vector<double> scan_f;  ///< pre-scan values (non-finite = infeasible)
};

/// Minimizes f over [a, b]. f may return a non-finite value where the
/// problem is infeasible. The interval is pre-scanned with `samples`
/// points; every local minimum of the scan is refined by Brent's
/// golden-section/parabolic method (after bisecting the feasibility
/// boundary when a neighbour is infeasible) and the global one is returned.
/// Throws NoRootError if no sample is feasible.
template <class F>
MinimizeResult minimize_scalar(F&& f, double a, double b, double tol, int samples = 64,
                               Execution exec = Execution::Serial) {
    if (!(b > a))
        throw DomainError("minimize_scalar: empty interval");
    samples = std::max(samples, 3);
    std::vector<double> xs(samples);
    for (int i = 0; i < samples; ++i)
        xs[i] = (i == samples - 1) ? b : a + (b - a) * i / (samples - 1);
    std::vector<double> fs = map_indexed(xs, f, exec);

    MinimizeResult best;
    best.fx = std::numeric_limits<double>::infinity();
    best.evaluations = samples;
    auto feasible = [](double v) { return std::isfinite(v); };

    auto refine_boundary = [&](double bad, double good) {
        // Shrinks [bad, good] to the feasibility boundary.
        while (std::abs(good - bad) > tol) {
            const double m = 0.5 * (bad + good);
            ++best.evaluations;
            if (feasible(f(m)))
                good = m;
            else
                bad = m;
        }
        return good;
    };

    const int bits = std::clamp(static_cast<int>(std::ceil(-std::log2(tol))), 8,
                                std::numeric_limits<double>::digits / 2);
    for (int i = 0; i < samples; ++i) {
        if (!feasible(fs[i]))
            continue;
        const bool left_ok = i == 0 || !feasible(fs[i - 1]) || fs[i] <= fs[i - 1];
        const bool right_ok = i == samples - 1 || !feasible(fs[i + 1]) || fs[i] <= fs[i + 1];
        if (!left_ok || !right_ok)
            continue;
        ++best.local_minima;

        double lo = xs[std::max(i - 1, 0)];
        double hi = xs[std::min(i + 1, samples - 1)];
        if (i > 0 && !feasible(fs[i - 1]))
            lo = refine_boundary(xs[i - 1], xs[i]);
        if (i < samples - 1 && !feasible(fs[i + 1]))
            hi = refine_boundary(xs[i + 1], xs[i]);

        double cand_x = xs[i];
        double cand_f = fs[i];
        if (hi > lo) {
            auto penalised = [&](double x) {
                ++best.evaluations;
                const double v = f(x);
                return feasible(v) ? v : std::numeric_limits<double>::max();
            };
            std::uintmax_t iters = 200;
            auto r = boost::math::tools::brent_find_minima(penalised, lo, hi, bits, iters);
            if (feasible(r.second) && r.second < cand_f) {
                cand_x = r.first;
                cand_f = r.second;
            }
            // The bracket ends can be the true minimum on a feasibility edge.
            for (double edge : {lo, hi}) {
                const double v = penalised(edge);
                if (feasible(v) && v < cand_f) {
                    cand_x = edge;
                    cand_f = v;
                }
            }
        }
        if (cand_f < best.fx) {
            best.x = cand_x;
            best.fx = cand_f;
        }
    }
    if (!feasible(best.fx))
        throw NoRootError("minimize_scalar: no feasible sample in the interval");
    best.unimodal = best.local_minima <= 1;
    best.scan_x = std::move(xs);
    best.scan_f = std::move(fs);
    return best;
}

} // namespace cheeger
