#include "cheeger/delaunay.hpp"

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace cheeger {

namespace {

using State = std::array<double, 5>;  // x, y, sigma, int y^{n-2} ds, int y^{n-1} dx

double ipow(double y, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= y;
    return r;
}

// Right-hand side in tau = dir * s, so the stepper always runs forward.
struct ProfileSystem {
    int n;
    double H;
    double dir = 1.0;

    void operator()(const State& u, State& du, double /*tau*/) const {
        const double y = u[1];
        const double c = std::cos(u[2]);
        const double yn2 = ipow(y, n - 2);
        du[0] = dir * c;
        du[1] = dir * std::sin(u[2]);
        du[2] = dir * (-(n - 1) * H + (n - 2) * c / y);
        du[3] = dir * yn2;
        du[4] = dir * yn2 * y * c;
    }
};

// Dense-output stepper seen in the signed arclength s = dir * tau.
template <class Stepper>
struct Directed {
    Stepper& raw;
    double dir;

    template <class Sys>
    std::pair<double, double> do_step(Sys sys) {
        const auto r = raw.do_step(sys);
        return {dir * r.first, dir * r.second};
    }
    void calc_state(double s, State& v) const { raw.calc_state(dir * s, v); }
    const State& current_state() const { return raw.current_state(); }
};

CurvePoint to_point(const State& u, double s) { return {s, u[0], u[1], u[2]}; }

CurvePoint shifted(CurvePoint p, double ds) {
    p.s += ds;
    return p;
}

void check_start(const DelaunayParams& p, const CurvePoint& start) {
    validate(p, 1e-9);
    if (!(start.y > 0.0))
        throw DomainError("integrate_profile: start ordinate must be positive");
    const double scale = std::max({1.0, std::abs(p.T), ipow(start.y, p.n - 2),
                                   p.H * ipow(start.y, p.n - 1)});
    if (std::abs(first_integral_residual(p, start)) > 1e-10 * scale)
        throw DomainError("integrate_profile: start point violates the first integral");
}

// Event function evaluated on the state; a sign change stops the integration.
using EventFn = std::function<double(const State&)>;

Profile run_profile(const DelaunayParams& p, const CurvePoint& start, double span,
                    const ProfileOptions& opts, const EventFn& event, bool* event_hit) {
    namespace odeint = boost::numeric::odeint;
    check_start(p, start);
    if (event_hit)
        *event_hit = false;

    Profile out;
    State u{start.x, start.y, start.sigma, 0.0, 0.0};
    out.points.push_back(start);
    if (span == 0.0)
        return out;

    const double dir = span > 0 ? 1.0 : -1.0;
    const ProfileSystem sys{p.n, p.H, dir};
    const double length = std::abs(span);
    const double scale = std::max(1.0, std::max(start.y, 1.0 / std::max(p.H, 1e-300)));
    const double max_dt = 0.05 * std::min(scale, std::max(length, 1e-3));
    auto raw = odeint::make_dense_output(opts.tol, opts.tol, max_dt,
                                         odeint::runge_kutta_dopri5<State>());
    raw.initialize(u, 0.0, std::min(1e-4, length));
    Directed<decltype(raw)> stepper{raw, dir};

    const int samples = opts.samples;
    int next_sample = 1;
    auto emit_samples_until = [&](double s_reached) {
        // Output points at fixed fractions of the span, via dense output.
        while (samples > 1 && next_sample < samples) {
            const double s_k = span * next_sample / (samples - 1);
            if (dir * (s_k - s_reached) > 0)
                break;
            State v;
            stepper.calc_state(s_k, v);
            out.points.push_back(shifted(to_point(v, s_k), start.s));
            ++next_sample;
        }
    };

    double ev_prev = event ? event(u) : 0.0;
    const int max_steps = 5'000'000;
    int steps = 0;

    for (;;) {
        if (++steps > max_steps)
            throw ToleranceError("integrate_profile: step limit exceeded");
        const auto [t0, t1] = stepper.do_step(std::cref(sys));
        State cur = stepper.current_state();
        const bool past_end = dir * (t1 - span) >= 0;

        // Axis approach: ordinate at or below axis_eps inside this step.
        const bool bad = !std::isfinite(cur[1]) || !std::isfinite(cur[2]) ||
                         cur[1] <= opts.axis_eps;
        if (bad) {
            auto g = [&](double t) {
                State v;
                stepper.calc_state(t, v);
                return v[1] - opts.axis_eps;
            };
            const double t_end = past_end ? span : t1;
            double ga = g(t0);
            double gb = g(t_end);
            if (std::isfinite(gb) && gb > 0 && past_end) {
                // The axis is beyond the requested span; finish normally.
            } else {
                if (!opts.stop_at_axis)
                    throw SingularityError("integrate_profile: trajectory reaches the axis y = 0");
                double t_hit = t1;
                if (std::isfinite(ga) && std::isfinite(gb) && ga > 0 && gb <= 0)
                    t_hit = find_root(g, t0, t_end, 1e-15 * std::max(1.0, std::abs(t_end)));
                else
                    t_hit = t0;
                State v;
                stepper.calc_state(t_hit, v);
                emit_samples_until(t_hit);
                // Extrapolate along the tangent to y = 0.
                const double sn = std::sin(v[2]);
                const double ds = (std::abs(sn) > 1e-300) ? v[1] / std::abs(sn) : 0.0;
                State w = v;
                w[0] += std::cos(v[2]) * ds;
                w[1] = 0.0;
                const CurvePoint end{start.s + t_hit + dir * ds, w[0], 0.0, v[2]};
                if (samples <= 1 || out.points.back().s != end.s)
                    out.points.push_back(end);
                out.weighted_length = v[3];
                out.weighted_moment = v[4];
                out.reached_axis = true;
                return out;
            }
        }

        if (event) {
            const double t_end = past_end ? span : t1;
            State v_end;
            stepper.calc_state(t_end, v_end);
            const double ev_cur = event(v_end);
            // A start exactly on the event surface does not count as a hit.
            if (ev_prev != 0.0 && ((ev_prev > 0) != (ev_cur > 0) || ev_cur == 0.0)) {
                auto g = [&](double t) {
                    State v;
                    stepper.calc_state(t, v);
                    return event(v);
                };
                const double t_hit =
                    (ev_cur == 0.0)
                        ? t_end
                        : find_root(g, t0, t_end, 4e-16 * std::max(1.0, std::abs(t_end)));
                State v;
                stepper.calc_state(t_hit, v);
                emit_samples_until(t_hit);
                if (samples <= 1 || out.points.back().s != start.s + t_hit)
                    out.points.push_back(shifted(to_point(v, t_hit), start.s));
                out.weighted_length = v[3];
                out.weighted_moment = v[4];
                if (event_hit)
                    *event_hit = true;
                return out;
            }
            ev_prev = ev_cur;
        }

        if (past_end) {
            State v;
            stepper.calc_state(span, v);
            emit_samples_until(span);
            if (samples <= 1 || out.points.size() < static_cast<std::size_t>(samples))
                out.points.push_back(shifted(to_point(v, span), start.s));
            out.weighted_length = v[3];
            out.weighted_moment = v[4];
            return out;
        }
        emit_samples_until(t1);
        if (samples <= 1)
            out.points.push_back(shifted(to_point(cur, t1), start.s));
    }
}

} // namespace

std::string_view to_string(DelaunayClass c) {
    switch (c) {
    case DelaunayClass::Cylinder: return "cylinder";
    case DelaunayClass::Unduloid: return "unduloid";
    case DelaunayClass::Sphere: return "sphere";
    case DelaunayClass::Nodoid: return "nodoid";
    case DelaunayClass::Catenoid: return "catenoid";
    case DelaunayClass::Hyperplane: return "hyperplane";
    }
    return "unknown";
}

double t_max(int n, double H) {
    if (n < 3)
        throw DomainError("t_max: dimension must be at least 3");
    if (!(H > 0.0))
        throw DomainError("t_max: mean curvature must be positive");
    return std::pow((n - 2) / H, n - 2) / std::pow(n - 1.0, n - 1);
}

double cylinder_radius(int n, double H) {
    if (n < 3 || !(H > 0.0))
        throw DomainError("cylinder_radius: need n >= 3 and H > 0");
    return (n - 2) / ((n - 1) * H);
}

void validate(const DelaunayParams& p, double rel_tol) {
    if (p.n < 3)
        throw DomainError("Delaunay parameters: dimension must be at least 3");
    if (!(p.H >= 0.0) || !std::isfinite(p.H) || !std::isfinite(p.T))
        throw DomainError("Delaunay parameters: need finite H >= 0");
    if (p.H > 0.0) {
        const double tm = t_max(p.n, p.H);
        if (p.T > tm * (1.0 + rel_tol))
            throw DomainError("Delaunay parameters: T exceeds t_max(n, H)");
    }
}

DelaunayClass classify(const DelaunayParams& p, double rel_tol) {
    validate(p, rel_tol);
    if (p.H == 0.0)
        return std::abs(p.T) <= rel_tol * std::max(1.0, std::abs(p.T))
                   ? DelaunayClass::Hyperplane
                   : DelaunayClass::Catenoid;
    const double tm = t_max(p.n, p.H);
    if (std::abs(p.T - tm) <= rel_tol * tm)
        return DelaunayClass::Cylinder;
    if (std::abs(p.T) <= rel_tol * tm)
        return DelaunayClass::Sphere;
    return p.T > 0.0 ? DelaunayClass::Unduloid : DelaunayClass::Nodoid;
}

double first_integral(int n, double H, double y, double sigma) {
    return ipow(y, n - 2) * std::cos(sigma) - H * ipow(y, n - 1);
}

double first_integral_residual(const DelaunayParams& p, const CurvePoint& pt) {
    return first_integral(p.n, p.H, pt.y, pt.sigma) - p.T;
}

ProfileExtrema profile_extrema(const DelaunayParams& p, double rel_tol) {
    const DelaunayClass cls = classify(p, rel_tol);
    const int n = p.n;
    const double H = p.H;
    const double T = p.T;
    switch (cls) {
    case DelaunayClass::Catenoid:
    case DelaunayClass::Hyperplane:
        throw DomainError("profile_extrema: only defined for H > 0");
    case DelaunayClass::Cylinder: {
        const double r = cylinder_radius(n, H);
        return {r, r};
    }
    case DelaunayClass::Sphere:
        return {0.0, 1.0 / H};
    case DelaunayClass::Unduloid: {
        const double ys = cylinder_radius(n, H);
        auto f = [&](double y) { return ipow(y, n - 2) * (1.0 - H * y) - T; };
        const double lo = find_root(f, 0.0, ys, rel_tol * ys);
        const double hi = find_root(f, ys, 1.0 / H, rel_tol * ys);
        return {lo, hi};
    }
    case DelaunayClass::Nodoid: {
        const double a = std::pow(-T / H, 1.0 / (n - 1));
        auto f_top = [&](double y) { return ipow(y, n - 2) * (1.0 - H * y) - T; };
        auto f_bot = [&](double y) { return -ipow(y, n - 2) * (1.0 + H * y) - T; };
        const double upper = 1.0 / H + a;
        const double hi = find_root(f_top, 0.0, upper, rel_tol * upper);
        const double lo = find_root(f_bot, 0.0, a, rel_tol * a);
        return {lo, hi};
    }
    }
    throw DomainError("profile_extrema: unreachable");
}

Profile integrate_profile(const DelaunayParams& p, const CurvePoint& start, double span,
                          const ProfileOptions& opts) {
    return run_profile(p, start, span, opts, nullptr, nullptr);
}

Profile integrate_profile_to_angle(const DelaunayParams& p, const CurvePoint& start,
                                   double sigma_target, double max_span,
                                   const ProfileOptions& opts) {
    bool hit = false;
    auto ev = [sigma_target](const State& u) { return u[2] - sigma_target; };
    Profile out = run_profile(p, start, max_span, opts, ev, &hit);
    if (!hit)
        throw NoRootError("integrate_profile_to_angle: target angle not reached");
    return out;
}

Profile integrate_profile_to_ordinate(const DelaunayParams& p, const CurvePoint& start,
                                      double y_target, double max_span,
                                      const ProfileOptions& opts) {
    bool hit = false;
    auto ev = [y_target](const State& u) { return u[1] - y_target; };
    Profile out = run_profile(p, start, max_span, opts, ev, &hit);
    if (!hit)
        throw NoRootError("integrate_profile_to_ordinate: target ordinate not reached");
    return out;
}

double cos_sigma_of_y(const DelaunayParams& p, double y) {
    return (p.T + p.H * ipow(y, p.n - 1)) / ipow(y, p.n - 2);
}

namespace {

// sum_{j<k} t^j e^{k-1-j}, so that t^k - e^k = (t - e) * power_difference(t, e, k)
double power_difference(double t, double e, int k) {
    double sum = 0.0;
    double tp = 1.0;
    for (int j = 0; j < k; ++j) {
        sum += tp * ipow(e, k - 1 - j);
        tp *= t;
    }
    return sum;
}

// Root of y^{n-2} - s (T + H y^{n-1}) next to `y`, i.e. where cos sigma = s.
double polish_turning_point(const DelaunayParams& p, double y, double s) {
    const int n = p.n;
    for (int i = 0; i < 4; ++i) {
        const double g = ipow(y, n - 2) - s * (p.T + p.H * ipow(y, n - 1));
        const double dg = (n - 2) * ipow(y, n - 3) - s * p.H * (n - 1) * ipow(y, n - 2);
        if (dg == 0.0)
            break;
        y -= g / dg;
    }
    return y;
}

} // namespace

double x_of_y(const DelaunayParams& p, double y0, double x0, int branch, double y, double tol) {
    validate(p, 1e-9);
    if (branch != 1 && branch != -1)
        throw DomainError("x_of_y: branch must be +1 or -1");
    if (!(y0 > 0.0) || !(y > 0.0))
        throw DomainError("x_of_y: ordinates must be positive");
    if (y == y0)
        return x0;
    const int n = p.n;
    double lo = std::min(y0, y);
    double hi = std::max(y0, y);

    auto c_of = [&](double t) { return cos_sigma_of_y(p, t); };
    const double edge_tol = 1e-9;
    auto is_edge = [&](double t) { return std::abs(std::abs(c_of(t)) - 1.0) <= edge_tol; };
    for (double t : {lo, hi})
        if (std::abs(c_of(t)) > 1.0 + edge_tol)
            throw DomainError("x_of_y: integrand is not real at an endpoint");
    constexpr int probes = 64;
    for (int i = 1; i < probes; ++i) {
        const double t = lo + (hi - lo) * i / probes;
        if (std::abs(c_of(t)) >= 1.0)
            throw DomainError("x_of_y: integrand is not real inside the range");
    }

    auto integrand = [&](double t) {
        const double c = c_of(t);
        const double w = (1.0 - c) * (1.0 + c);
        return w > 0.0 ? c / std::sqrt(w) : 0.0;
    };
    // Near a turning point e (cos sigma = s) write t = e + d u^2, d = +-1 pointing
    // into the range; then 1 - s c = d u^2 D(t, e) / t^{n-2} with D free of
    // cancellation, and 2u c / sqrt(1 - c^2) stays smooth at u = 0.
    auto turning_part = [&](double e, double d, double from, double to) {
        const double s = c_of(e) > 0.0 ? 1.0 : -1.0;
        auto g = [&, e, d, s](double u) {
            const double t = e + d * u * u;
            const double c = c_of(t);
            const double D = power_difference(t, e, n - 2) - s * p.H * power_difference(t, e, n - 1);
            const double k = std::abs(D) / ipow(t, n - 2) * (1.0 + s * c);
            return k > 0.0 ? 2.0 * c / std::sqrt(k) : 0.0;
        };
        const double u0 = std::sqrt(std::max(d * (from - e), 0.0));
        const double u1 = std::sqrt(std::max(d * (to - e), 0.0));
        return integrate(g, u0, u1, 0.5 * tol);
    };

    // Turning points of the profile bound the graph branch; endpoints close to
    // one are integrated in the substituted variable.
    double turn_lo = std::nan("");
    double turn_hi = std::nan("");
    if (p.H > 0.0) {
        try {
            const ProfileExtrema ex = profile_extrema(p, 1e-9);
            auto polished = [&](double e) {
                const double c = c_of(e);
                if (!(e > 0.0) || std::abs(std::abs(c) - 1.0) > 1e-6)
                    return std::nan("");
                return polish_turning_point(p, e, c > 0.0 ? 1.0 : -1.0);
            };
            turn_lo = polished(ex.y_min);
            turn_hi = polished(ex.y_max);
        } catch (const Error&) {
        }
    }
    const double width = hi - lo;
    auto snap = [&](double t, double turn) {
        if (std::isfinite(turn) && std::abs(t - turn) <= width)
            return turn;
        if (is_edge(t))
            return polish_turning_point(p, t, c_of(t) > 0.0 ? 1.0 : -1.0);
        return std::nan("");
    };
    const double e_lo = snap(lo, turn_lo);
    const double e_hi = snap(hi, turn_hi);
    if (is_edge(lo) && std::isfinite(e_lo))
        lo = e_lo;
    if (is_edge(hi) && std::isfinite(e_hi))
        hi = e_hi;
    double value = 0.0;
    if (std::isfinite(e_lo) && std::isfinite(e_hi)) {
        const double mid = 0.5 * (lo + hi);
        value = turning_part(e_lo, 1.0, lo, mid) + turning_part(e_hi, -1.0, hi, mid);
    } else if (std::isfinite(e_lo)) {
        value = turning_part(e_lo, 1.0, lo, hi);
    } else if (std::isfinite(e_hi)) {
        value = turning_part(e_hi, -1.0, hi, lo);
    } else {
        value = integrate(integrand, lo, hi, tol);
    }
    return x0 + branch * value;
}

double kenmotsu_q(const KenmotsuParams& k, double s) {
    return 1.0 + k.B * k.B + 2.0 * k.B * std::cos(2.0 * k.H * s);
}

double kenmotsu_y(const KenmotsuParams& k, double s) {
    return std::sqrt(std::max(kenmotsu_q(k, s), 0.0)) / (2.0 * k.H);
}

double kenmotsu_sigma(const KenmotsuParams& k, double s) {
    const double ph = 2.0 * k.H * s;
    return std::atan2(-k.B * std::sin(ph), 1.0 + k.B * std::cos(ph));
}

void kenmotsu_check_regular(const KenmotsuParams& k, double a, double b) {
    if (k.H == 0.0)
        throw DomainError("Kenmotsu form requires H != 0");
    if (std::abs(k.B) != 1.0)
        return;
    if (a > b)
        std::swap(a, b);
    // Q = 0 where 2Hs = pi (mod 2 pi) for B = 1, and 2Hs = 0 (mod 2 pi) for B = -1.
    const double offset = k.B > 0 ? std::numbers::pi : 0.0;
    const double period = std::numbers::pi / std::abs(k.H);
    const double first = offset / (2.0 * std::abs(k.H));
    const double m = std::ceil((a - first) / period);
    const double s_zero = first + m * period;
    if (s_zero <= b)
        throw SingularityError("Kenmotsu form: 1 + B^2 + 2B cos(2Hs) vanishes on the range");
}

namespace {

// Elliptic primitives in u = H t - shift, where Q = c^2 (1 - m sin^2 u).
struct KenmotsuPrimitive {
    double shift, c, m, kk;

    explicit KenmotsuPrimitive(double B) {
        shift = B >= 0.0 ? 0.0 : 0.5 * std::numbers::pi;
        c = B >= 0.0 ? 1.0 + B : 1.0 - B;
        m = std::min(std::abs(4.0 * B) / (c * c), 1.0);
        kk = std::sqrt(m);
    }
    double E(double u) const { return boost::math::ellint_2(kk, u); }
    double F(double u) const { return boost::math::ellint_1(kk, u); }
    // int_0^u (1 - m sin^2)^{3/2}
    double J(double u, double e) const {
        const double d = std::sqrt(std::max(0.0, 1.0 - m * std::sin(u) * std::sin(u)));
        const double f = m < 1.0 ? (1.0 - m) * F(u) : 0.0;
        return (2.0 * (2.0 - m) * e - f + m * std::sin(u) * std::cos(u) * d) / 3.0;
    }
};

} // namespace

double kenmotsu_dx(const KenmotsuParams& k, double a, double b, double /*tol*/) {
    kenmotsu_check_regular(k, a, b);
    // x' = sqrt(Q)/2 + (1 - B^2)/(2 sqrt(Q)).
    const double B = k.B;
    const KenmotsuPrimitive P(B);
    auto prim = [&](double t) {
        const double u = k.H * t - P.shift;
        return P.c * P.E(u) + (1.0 - B * B) / P.c * P.F(u);
    };
    try {
        return (prim(b) - prim(a)) / (2.0 * k.H);
    } catch (const std::domain_error&) {
        throw SingularityError("Kenmotsu form: 1 + B^2 + 2B cos(2Hs) vanishes on the range");
    }
}

KenmotsuIntegrals kenmotsu_integrals(const KenmotsuParams& k, double a, double b) {
    if (k.H == 0.0)
        throw DomainError("Kenmotsu form requires H != 0");
    const double B = k.B;
    const KenmotsuPrimitive P(B);
    KenmotsuIntegrals r;
    r.dx = kenmotsu_dx(k, a, b);
    const double ua = k.H * a - P.shift;
    const double ub = k.H * b - P.shift;
    const double ea = P.E(ua);
    const double eb = P.E(ub);
    r.root_q = P.c * (eb - ea) / k.H;
    const double c3 = P.c * P.c * P.c;
    r.weighted = (c3 * (P.J(ub, eb) - P.J(ua, ea)) + (1.0 - B * B) * P.c * (eb - ea)) / (2.0 * k.H);
    return r;
}

double kenmotsu_dx_quadrature(const KenmotsuParams& k, double a, double b, double tol) {
    kenmotsu_check_regular(k, a, b);
    auto f = [&](double t) {
        const double ph = 2.0 * k.H * t;
        const double q = 1.0 + k.B * k.B + 2.0 * k.B * std::cos(ph);
        return (1.0 + k.B * std::cos(ph)) / std::sqrt(q);
    };
    return integrate(f, a, b, tol);
}

std::pair<double, double> kenmotsu_point(const KenmotsuParams& k, double s, double tol) {
    return {k.c + kenmotsu_dx(k, 0.0, s, tol), kenmotsu_y(k, s)};
}

CurvePoint kenmotsu_state(const KenmotsuParams& k, double s, double tol) {
    const auto [x, y] = kenmotsu_point(k, s, tol);
    return {s, x, y, kenmotsu_sigma(k, s)};
}

double kenmotsu_first_integral(const KenmotsuParams& k) {
    return (1.0 - k.B * k.B) / (4.0 * k.H);
}

} // namespace cheeger
