#include "cheeger/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

namespace cheeger {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kScanCells = 240;
constexpr double kAdmissTol = 1e-7;

double ipow(double y, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= y;
    return r;
}

// Kenmotsu arc on s in [a, b].
struct KArc {
    KenmotsuParams k;
    double a = 0.0;
    double b = 0.0;
};

using Part = std::variant<Segment, Arc, KArc, DelaunayArc>;

struct Layout {
    std::vector<Part> parts;
    std::vector<bool> is_free;
    RatioBreakdown breakdown;

    void push(Part p, bool free_piece) {
        parts.push_back(std::move(p));
        is_free.push_back(free_piece);
    }
};

double get(const Glue& g, const char* key) {
    const auto it = g.find(key);
    if (it == g.end())
        throw DomainError(std::string("candidate glue is missing '") + key + "'");
    return it->second;
}

double k_y(const KenmotsuParams& k, double s) { return kenmotsu_y(k, s); }

double k_x(const KenmotsuParams& k, double s, double tol) {
    return k.c + kenmotsu_dx(k, 0.0, s, tol);
}

Point2 k_point(const KenmotsuParams& k, double s, double tol) { return {k_x(k, s, tol), k_y(k, s)}; }

// Perimeter and volume of a Kenmotsu arc:
// pi/H int sqrt(Q) and pi/(4H^2) int (1 + B cos 2Ht) sqrt(Q).
std::pair<double, double> kenmotsu_area_volume(const KArc& p, double /*tol*/) {
    const double H = p.k.H;
    const KenmotsuIntegrals I = kenmotsu_integrals(p.k, p.a, p.b);
    return {kPi / H * I.root_q, kPi / (4.0 * H * H) * I.weighted};
}

std::pair<double, double> segment_area_volume3(const Segment& g) {
    const double L = std::hypot(g.b.x - g.a.x, g.b.y - g.a.y);
    const double y0 = g.a.y;
    const double y1 = g.b.y;
    return {kPi * (y0 + y1) * L, kPi * (g.b.x - g.a.x) * (y0 * y0 + y0 * y1 + y1 * y1) / 3.0};
}

std::pair<double, double> arc_area_volume3(const Arc& a) {
    const auto [pw, mw] = piece_weighted(3, a);
    return {2.0 * kPi * pw, kPi * mw};
}

Part mirror(const Part& p) {
    return std::visit(
        [](const auto& g) -> Part {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>) {
                return Segment{{-g.b.x, g.b.y}, {-g.a.x, g.a.y}};
            } else if constexpr (std::is_same_v<G, Arc>) {
                return Arc{{-g.center.x, g.center.y}, g.R, kPi - g.t1, kPi - g.t0};
            } else if constexpr (std::is_same_v<G, KArc>) {
                return KArc{{g.k.H, g.k.B, -g.k.c}, -g.b, -g.a};
            } else {
                throw DomainError("mirror: Delaunay arcs are mirrored through their Kenmotsu form");
            }
        },
        p);
}

GeneratrixPiece to_piece(const Part& p, double tol) {
    return std::visit(
        [&](const auto& g) -> GeneratrixPiece {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, KArc>) {
                CurvePoint st = kenmotsu_state(g.k, g.a, tol * 1e-2);
                DelaunayParams dp{3, g.k.H, kenmotsu_first_integral(g.k)};
                return DelaunayArc{dp, st, g.b - g.a};
            } else {
                return g;
            }
        },
        p);
}

// Points of a part with cheap fixed-rule abscissae; used for admissibility.
std::vector<Point2> part_samples(const Part& p, int m) {
    std::vector<Point2> out;
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, Segment>) {
                for (int i = 0; i <= m; ++i) {
                    const double f = static_cast<double>(i) / m;
                    out.push_back({g.a.x + f * (g.b.x - g.a.x), g.a.y + f * (g.b.y - g.a.y)});
                }
            } else if constexpr (std::is_same_v<G, Arc>) {
                for (int i = 0; i <= m; ++i) {
                    const double t = g.t0 + (g.t1 - g.t0) * i / m;
                    out.push_back({g.center.x + g.R * std::cos(t), g.center.y + g.R * std::sin(t)});
                }
            } else if constexpr (std::is_same_v<G, KArc>) {
                const auto& k = g.k;
                double x = k.c + kenmotsu_dx(k, 0.0, g.a, 1e-10);
                double s_prev = g.a;
                out.push_back({x, kenmotsu_y(k, g.a)});
                for (int i = 1; i <= m; ++i) {
                    const double s = g.a + (g.b - g.a) * i / m;
                    x += kenmotsu_dx(k, s_prev, s, 1e-10);
                    s_prev = s;
                    out.push_back({x, kenmotsu_y(k, s)});
                }
            } else {
                ProfileOptions opts;
                opts.stop_at_axis = true;
                opts.samples = m + 1;
                for (const auto& q : integrate_profile(g.params, g.start, g.length, opts).points)
                    out.push_back({q.x, q.y});
            }
        },
        p);
    return out;
}

double domain_x_min(const DomainSpec& d) {
    switch (d.family) {
    case Family::Cylinder: return 0.0;
    case Family::Cone:
    case Family::DoubleCone: return -d.l;
    case Family::Hourglass: return -d.A;
    case Family::Ball: return -d.R;
    }
    return 0.0;
}

double domain_x_max(const DomainSpec& d) {
    switch (d.family) {
    case Family::Cylinder: return d.l;
    case Family::Cone: return 0.0;
    case Family::DoubleCone: return d.r;
    case Family::Hourglass: return d.A;
    case Family::Ball: return d.R;
    }
    return 0.0;
}

double point_clearance(const DomainSpec& d, Point2 p) {
    const double side = std::min(p.x - domain_x_min(d), domain_x_max(d) - p.x);
    if (side < 0)
        return side;
    return std::min({side + 1.0, upper_boundary(d, p.x) - p.y, p.y + 1.0});
}

double layout_clearance(const DomainSpec& d, const Layout& lay, int m) {
    double c = std::numeric_limits<double>::infinity();
    for (const auto& p : lay.parts)
        for (const auto& q : part_samples(p, m))
            c = std::min(c, point_clearance(d, q));
    return c;
}

CandidateSet finish(const DomainSpec& domain, double H, std::string structure, Glue glue,
                    Layout lay, double tol) {
    CandidateSet c;
    c.domain = domain;
    c.H = H;
    c.structure = std::move(structure);
    c.glue = std::move(glue);
    c.generatrix.n = domain.n;
    for (std::size_t i = 0; i < lay.parts.size(); ++i) {
        c.generatrix.pieces.push_back(to_piece(lay.parts[i], tol));
        if (lay.is_free[i])
            c.free_pieces.push_back(i);
    }
    c.breakdown = std::move(lay.breakdown);
    return c;
}

bool long_enough(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y) > 1e-13; }

// Evaluates f, mapping library errors to NaN so that root scans skip them.
template <class F>
auto guarded(F f) {
    return [f](double x) {
        try {
            return f(x);
        } catch (const Error&) {
            return kNaN;
        }
    };
}

// ---------------------------------------------------------------- cylinder

struct CylinderGlue {
    double y1, T, x2, L;
};

CylinderGlue solve_cylinder(int n, double l, double r, double H, double tol) {
    const double y1 = cylinder_vertical_ordinate(n, r, H);
    const double T = -H * ipow(y1, n - 1);
    const DelaunayParams p{n, H, T};
    auto cosine = [&](double y) { return cos_sigma_of_y(p, y); };
    auto inv_sin = [&](double y) {
        const double c = cosine(y);
        return 1.0 / std::sqrt(std::max((1.0 - c) * (1.0 + c), 0.0));
    };
    const double x2 = integrate([&](double y) { return cosine(y) * inv_sin(y); }, y1, r, tol,
                                Endpoint::Regular, Endpoint::InverseSqrt);
    const double L = integrate(inv_sin, y1, r, tol, Endpoint::Regular, Endpoint::InverseSqrt);
    if (x2 > 0.5 * l)
        throw InadmissibleError("cylinder candidate: nodoid arcs overlap (x(s2) > l/2)");
    return {y1, T, x2, L};
}

Layout layout_cylinder(const DomainSpec& d, double H, const Glue& g, double tol) {
    const int n = d.n;
    const double l = d.l;
    const double r = d.r;
    const double y1 = get(g, "y1");
    const double T = get(g, "T");
    const double x2 = get(g, "x2");
    const double L = get(g, "L");
    const DelaunayParams p{n, H, T};
    const double w = unit_ball_volume(n - 1);

    Layout lay;
    lay.push(Segment{{0, 0}, {0, y1}}, false);
    lay.push(DelaunayArc{p, {0, 0, y1, 0.5 * kPi}, L}, true);
    if (long_enough({x2, r}, {l - x2, r}))
        lay.push(Segment{{x2, r}, {l - x2, r}}, false);
    lay.push(DelaunayArc{p, {0, l - x2, r, 0.0}, L}, true);
    lay.push(Segment{{l, y1}, {l, 0}}, false);

    // Graph-form quadratures over y in [y1, r].
    auto cosine = [&](double y) { return cos_sigma_of_y(p, y); };
    auto inv_sin = [&](double y) {
        const double c = cosine(y);
        return 1.0 / std::sqrt(std::max((1.0 - c) * (1.0 + c), 0.0));
    };
    const double S1 = (n - 1) * w *
                      integrate([&](double y) { return ipow(y, n - 2) * inv_sin(y); }, y1, r, tol,
                                Endpoint::Regular, Endpoint::InverseSqrt);
    const double V1 = w * integrate([&](double y) { return ipow(y, n - 1) * cosine(y) * inv_sin(y); },
                                    y1, r, tol, Endpoint::Regular, Endpoint::InverseSqrt);
    auto& b = lay.breakdown;
    b.add_area("S0", w * ipow(y1, n - 1), 2);
    b.add_area("S1", S1, 2);
    b.add_area("S2", (n - 1) * w * ipow(r, n - 2) * (0.5 * l - x2), 2);
    b.add_volume("V1", V1, 2);
    b.add_volume("V2", w * ipow(r, n - 1) * (0.5 * l - x2), 2);
    return lay;
}

// ------------------------------------------------------------- double cone

void require_n3(const DomainSpec& d, const char* what) {
    if (d.n != 3)
        throw DomainError(std::string(what) + " candidates are implemented for n = 3 only");
}

Layout layout_double_cone(const DomainSpec& d, double H, const Glue& g, double tol) {
    require_n3(d, "double-cone");
    const double l = d.l;
    const double r = d.r;
    const double th = d.theta;
    const double ph = double_cone_right_angle(d);
    const double R = 1.0 / H;
    const KenmotsuParams k{H, get(g, "B"), get(g, "c")};
    const double s1 = get(g, "s1");
    const double s2 = get(g, "s2");

    const Point2 hat1{-l + R * std::cos(th) * std::cos(th) / std::sin(th), R * std::cos(th)};
    const Point2 hat2{r - R * std::cos(ph) * std::cos(ph) / std::sin(ph), R * std::cos(ph)};
    const Point2 p1 = k_point(k, s1, tol);
    const Point2 p2 = k_point(k, s2, tol);

    Layout lay;
    lay.push(Arc{{-l + R / std::sin(th), 0}, R, kPi, 0.5 * kPi + th}, true);
    if (long_enough(hat1, p1))
        lay.push(Segment{hat1, p1}, false);
    lay.push(KArc{k, s1, s2}, true);
    if (long_enough(p2, hat2))
        lay.push(Segment{p2, hat2}, false);
    lay.push(Arc{{r - R / std::sin(ph), 0}, R, 0.5 * kPi - ph, 0.0}, true);

    const double tt = std::tan(th);
    const auto [S3, V3] = kenmotsu_area_volume(KArc{k, s1, s2}, tol);
    const double x1 = p1.x;
    const double x2 = p2.x;
    auto& b = lay.breakdown;
    b.add_area("S1", 2 * kPi * R * R * (1 - std::sin(th)));
    b.add_area("S2", 2 * kPi * R * R * (1 - std::sin(ph)));
    b.add_area("S3", S3);
    b.add_area("S4", kPi * tt / std::cos(th) * ((l + x1) * (l + x1) - (l + hat1.x) * (l + hat1.x)));
    b.add_area("S5", l * kPi * tt / (r * r) * std::sqrt(r * r + l * l * tt * tt) *
                         ((r - x2) * (r - x2) - (r - hat2.x) * (r - hat2.x)));
    const double s = std::sin(th);
    const double sp = std::sin(ph);
    b.add_volume("V1", kPi * R * R * R / 3 * (2 - 3 * s + s * s * s));
    b.add_volume("V2", kPi * R * R * R / 3 * (2 - 3 * sp + sp * sp * sp));
    b.add_volume("V3", V3);
    b.add_volume("V4", kPi * tt * tt / 3 * (ipow(l + x1, 3) - ipow(l + hat1.x, 3)));
    b.add_volume("V5", kPi * l * l * tt * tt / (3 * r * r) *
                           (ipow(r - x2, 3) - ipow(r - hat2.x, 3)));
    return lay;
}

// -------------------------------------------------------------------- cone

Layout layout_cone(const DomainSpec& d, double H, const Glue& g, double tol) {
    require_n3(d, "cone");
    const double l = d.l;
    const double th = d.theta;
    const double R = 1.0 / H;
    const KenmotsuParams k{H, get(g, "B"), get(g, "c")};
    const double s1 = get(g, "s1");
    const double sv = get(g, "sv");

    const Point2 hat1{-l + R * std::cos(th) * std::cos(th) / std::sin(th), R * std::cos(th)};
    const Point2 p1 = k_point(k, s1, tol);
    const double yv = k_y(k, sv);

    Layout lay;
    lay.push(Arc{{-l + R / std::sin(th), 0}, R, kPi, 0.5 * kPi + th}, true);
    if (long_enough(hat1, p1))
        lay.push(Segment{hat1, p1}, false);
    lay.push(KArc{k, s1, sv}, true);
    lay.push(Segment{{0, yv}, {0, 0}}, false);

    const double tt = std::tan(th);
    const double s = std::sin(th);
    const auto [S3, V3] = kenmotsu_area_volume(KArc{k, s1, sv}, tol);
    auto& b = lay.breakdown;
    b.add_area("S0", kPi * yv * yv);
    b.add_area("S1", 2 * kPi * R * R * (1 - s));
    b.add_area("S3", S3);
    b.add_area("S4",
               kPi * tt / std::cos(th) * ((l + p1.x) * (l + p1.x) - (l + hat1.x) * (l + hat1.x)));
    b.add_volume("V1", kPi * R * R * R / 3 * (2 - 3 * s + s * s * s));
    b.add_volume("V3", V3);
    b.add_volume("V4", kPi * tt * tt / 3 * (ipow(l + p1.x, 3) - ipow(l + hat1.x, 3)));
    return lay;
}

// --------------------------------------------------------------- hourglass

struct HourglassGeometry {
    double A, B, C, D;
    double m1;     // |slope| of the inner segment
    double m2;     // slope of the outer segment
    double beta1;  // atan(m1)
    double alpha;  // atan(m2)

    explicit HourglassGeometry(const DomainSpec& d)
        : A(d.A), B(d.B), C(d.C), D(d.D), m1((d.B - d.D) / d.C), m2((d.B - d.D) / (d.A - d.C)),
          beta1(std::atan(m1)), alpha(std::atan(m2)) {}

    [[nodiscard]] double seg2(double x) const { return m2 * (x - C) + D; }
    [[nodiscard]] double seg1(double x) const { return B - m1 * x; }
};

// Right half (x >= 0) of the middle structure, in traversal order.
void middle_parts(const HourglassGeometry& G, double H, HourglassCase cs, const Glue& g,
                  double tol, std::vector<Part>& parts, std::vector<bool>& free_flags,
                  Point2& end) {
    if (cs == HourglassCase::IV) {
        const double R = 1.0 / H;
        const double xc = get(g, "xc");
        const Arc a{{xc, 0}, R, kPi, 0.5 * kPi + G.alpha};
        parts.push_back(a);
        free_flags.push_back(true);
        end = {xc - R * std::sin(G.alpha), R * std::cos(G.alpha)};
        return;
    }
    const KenmotsuParams k{H, get(g, "Bm"), 0.0};
    const double sm = get(g, "sm");
    parts.push_back(KArc{k, 0.0, sm});
    free_flags.push_back(true);
    end = k_point(k, sm, tol);
    if (cs == HourglassCase::I) {
        const Point2 corner{G.C, G.D};
        if (long_enough(end, corner))
            parts.push_back(Segment{end, corner});
        else
            parts.push_back(Segment{end, end});
        free_flags.push_back(false);
        end = corner;
    }
}

void outer_parts(const HourglassGeometry& G, double H, const Glue& g, double tol,
                 std::vector<Part>& parts, std::vector<bool>& free_flags, Point2& touch) {
    const double R = 1.0 / H;
    if (get(g, "outer") != 0.0) {
        const double xo = get(g, "xo");
        touch = {xo - R * std::sin(G.alpha), R * std::cos(G.alpha)};
        parts.push_back(Arc{{xo, 0}, R, 0.5 * kPi + G.alpha, 0.0});
        free_flags.push_back(true);
        return;
    }
    const KenmotsuParams k{H, get(g, "Bo"), get(g, "co")};
    const double sa = get(g, "sa");
    const double sv = get(g, "sv");
    touch = k_point(k, sa, tol);
    parts.push_back(KArc{k, sa, sv});
    free_flags.push_back(true);
    parts.push_back(Segment{{G.A, k_y(k, sv)}, {G.A, 0}});
    free_flags.push_back(false);
}

Layout layout_hourglass(const DomainSpec& d, double H, HourglassCase cs, const Glue& g,
                        double tol) {
    require_n3(d, "hourglass");
    const HourglassGeometry G(d);

    std::vector<Part> right;
    std::vector<bool> right_free;
    Point2 mid_end;
    middle_parts(G, H, cs, g, tol, right, right_free, mid_end);
    const std::size_t n_middle = right.size();
    std::vector<Part> outer;
    std::vector<bool> outer_free;
    Point2 touch;
    outer_parts(G, H, g, tol, outer, outer_free, touch);
    if (touch.x < mid_end.x - kAdmissTol)
        throw InadmissibleError("hourglass candidate: middle and outer pieces overlap");
    if (long_enough(mid_end, touch)) {
        right.push_back(Segment{mid_end, touch});
        right_free.push_back(false);
    }
    right.insert(right.end(), outer.begin(), outer.end());
    right_free.insert(right_free.end(), outer_free.begin(), outer_free.end());

    Layout lay;
    // Left half: mirrored right half in reverse order, merged with the
    // symmetric middle arc.
    for (std::size_t i = right.size(); i-- > 0;) {
        if (i == 0 && cs != HourglassCase::IV)
            break;
        const Part& p = right[i];
        if (const auto* seg = std::get_if<Segment>(&p);
            seg && !long_enough(seg->a, seg->b))
            continue;
        lay.push(mirror(p), right_free[i]);
    }
    std::size_t first_right = 0;
    if (cs == HourglassCase::IV) {
        const double left_x = std::get<Arc>(right[0]).center.x - 1.0 / H;
        if (left_x > 1e-13)
            lay.push(Segment{{-left_x, 0}, {left_x, 0}}, false);
    } else {
        const KArc half = std::get<KArc>(right[0]);
        lay.push(KArc{half.k, -half.b, half.b}, true);
        first_right = 1;
    }
    for (std::size_t i = first_right; i < right.size(); ++i) {
        if (const auto* seg = std::get_if<Segment>(&right[i]);
            seg && !long_enough(seg->a, seg->b))
            continue;
        lay.push(right[i], right_free[i]);
    }

    // Breakdown: right-half contributions, doubled.
    auto& b = lay.breakdown;
    auto name_of = [&](std::size_t i) -> std::string {
        if (i < n_middle)
            return i == 0 ? "middle" : "inner-segment";
        if (i == n_middle && std::holds_alternative<Segment>(right[i]))
            return "outer-segment";
        if (std::holds_alternative<Segment>(right[i]))
            return "face";
        return "corner";
    };
    for (std::size_t i = 0; i < right.size(); ++i) {
        std::pair<double, double> sv{0.0, 0.0};
        if (const auto* s = std::get_if<Segment>(&right[i]))
            sv = segment_area_volume3(*s);
        else if (const auto* a = std::get_if<Arc>(&right[i]))
            sv = arc_area_volume3(*a);
        else if (const auto* k = std::get_if<KArc>(&right[i]))
            sv = kenmotsu_area_volume(*k, tol);
        const std::string nm = name_of(i);
        b.add_area("S_" + nm, sv.first, 2);
        b.add_volume("V_" + nm, sv.second, 2);
    }
    return lay;
}

HourglassCase case_from_structure(const std::string& s) {
    if (s == "hourglass-i")
        return HourglassCase::I;
    if (s == "hourglass-ii")
        return HourglassCase::II;
    if (s == "hourglass-iii")
        return HourglassCase::III;
    if (s == "hourglass-iv")
        return HourglassCase::IV;
    throw DomainError("unknown candidate structure '" + s + "'");
}

Layout layout_for(const DomainSpec& d, double H, const std::string& structure, const Glue& g,
                  double tol) {
    if (structure == "cylinder" && d.family == Family::Cylinder)
        return layout_cylinder(d, H, g, tol);
    if (structure == "double-cone" && d.family == Family::DoubleCone)
        return layout_double_cone(d, H, g, tol);
    if (structure == "cone" && d.family == Family::Cone)
        return layout_cone(d, H, g, tol);
    if (structure == "ball" && d.family == Family::Ball) {
        Layout lay;
        lay.push(Arc{{0, 0}, d.R, kPi, 0.0}, false);
        const double w = unit_ball_volume(d.n);
        lay.breakdown.add_area("S", d.n * w * ipow(d.R, d.n - 1));
        lay.breakdown.add_volume("V", w * ipow(d.R, d.n));
        return lay;
    }
    if (d.family == Family::Hourglass)
        return layout_hourglass(d, H, case_from_structure(structure), g, tol);
    throw DomainError("structure '" + structure + "' does not match the domain family");
}

} // namespace

// ------------------------------------------------------------------ public

void RatioBreakdown::add_area(std::string name, double value, int multiplicity) {
    P += value * multiplicity;
    area.push_back({std::move(name), value, multiplicity});
}

void RatioBreakdown::add_volume(std::string name, double value, int multiplicity) {
    V += value * multiplicity;
    volume.push_back({std::move(name), value, multiplicity});
}

double RatioBreakdown::term(const std::string& name) const {
    for (const auto* list : {&area, &volume})
        for (const auto& t : *list)
            if (t.name == name)
                return t.value;
    return 0.0;
}

CandidateSet assemble_candidate(const DomainSpec& domain, double H, const std::string& structure,
                                const Glue& glue, double tol) {
    if (!(H > 0.0))
        throw DomainError("candidate: H must be positive");
    return finish(domain, H, structure, glue, layout_for(domain, H, structure, glue, tol), tol);
}

double cylinder_vertical_ordinate(int n, double r, double H) {
    if (!(H * r > 1.0))
        throw InadmissibleError("cylinder candidate: requires H > 1/r");
    return std::pow(ipow(r, n - 1) - ipow(r, n - 2) / H, 1.0 / (n - 1));
}

CandidateSet cylinder_candidate(int n, double l, double r, double H, double tol) {
    const DomainSpec d = make_cylinder(l, r, n);
    const CylinderGlue cg = solve_cylinder(n, l, r, H, tol);
    return assemble_candidate(d, H, "cylinder",
                              {{"y1", cg.y1}, {"T", cg.T}, {"x2", cg.x2}, {"L", cg.L}}, tol);
}

SphereInfeasibility cylinder_sphere_infeasibility(int n, double l, double r, int samples) {
    const double wn = unit_ball_volume(n);
    const double w1 = unit_ball_volume(n - 1);
    auto sides = [&](double rho) {
        const double lhs = (n - 1) / rho;
        const double rhs = (n * wn * ipow(rho, n - 1) + (n - 1) * w1 * ipow(rho, n - 2) * (l - 2 * rho)) /
                           (wn * ipow(rho, n) + w1 * ipow(rho, n - 1) * (l - 2 * rho));
        return std::pair{lhs, rhs};
    };
    SphereInfeasibility rep;
    const auto [lhs, rhs] = sides(r);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.gap = rhs - lhs;
    rep.min_abs_gap = std::abs(rep.gap);
    // Scale-free comparison over the radii for which the configuration fits.
    for (int i = 1; i <= samples; ++i) {
        const double rho = 0.5 * l * i / samples;
        const auto [a, b] = sides(rho);
        rep.min_abs_gap = std::min(rep.min_abs_gap, std::abs(b - a));
        if ((b - a) == 0.0)
            rep.equality_possible = true;
    }
    rep.equality_possible = rep.equality_possible || rep.gap == 0.0;
    return rep;
}

double kenmotsu_tangent_parameter(double H, double B, double beta, bool left) {
    const double sb = std::sin(beta);
    if (!(B >= sb) || !(B > 0.0))
        throw NoRootError("tangency: requires B >= sin(beta)");
    const double phase = beta + std::asin(std::min(1.0, sb / B));
    return (left ? -1.0 : 1.0) * phase / (2.0 * H);
}

double double_cone_s1(double H, double B, double theta) {
    const double t = std::tan(theta);
    return -std::atan((std::sqrt((B * B - 1) * t * t + B * B) - B) / ((B - 1) * t)) / H;
}

double double_cone_s2(double H, double B, double l, double r, double theta) {
    const double t = std::tan(theta);
    return std::atan((std::sqrt(l * l * (B * B - 1) * t * t + B * B * r * r) - B * r) /
                     (l * (B - 1) * t)) /
           H;
}

std::vector<CandidateSet> double_cone_candidates(double l, double r, double theta, double H,
                                                 double tol) {
    const DomainSpec d = make_double_cone(l, r, theta, 3);
    const double ph = double_cone_right_angle(d);
    const double tt = std::tan(theta);
    const double tp = std::tan(ph);
    const double R = 1.0 / H;
    const double B_max = 2.0 * H * l * tt - 1.0;
    std::vector<CandidateSet> out;
    if (!(B_max > 1.0))
        return out;

    struct Eval {
        double s1, s2, c, x1, x2, g;
    };
    auto eval = [&](double B) {
        const KenmotsuParams k{H, B, 0.0};
        Eval e{};
        e.s1 = kenmotsu_tangent_parameter(H, B, theta, true);
        e.s2 = kenmotsu_tangent_parameter(H, B, ph, false);
        const double X1 = kenmotsu_dx(k, 0.0, e.s1, tol);
        const double X2 = kenmotsu_dx(k, 0.0, e.s2, tol);
        e.c = kenmotsu_y(k, e.s1) / tt - l - X1;
        e.x1 = e.c + X1;
        e.x2 = e.c + X2;
        e.g = kenmotsu_y(k, e.s2) - tp * (r - e.x2);
        return e;
    };
    const auto roots = find_roots_on_grid(guarded([&](double B) { return eval(B).g; }), 1.0,
                                          B_max, kScanCells, 1e-13 * B_max);
    const double xhat1 = -l + R * std::cos(theta) * std::cos(theta) / std::sin(theta);
    const double xhat2 = r - R * std::cos(ph) * std::cos(ph) / std::sin(ph);
    int index = 0;
    for (double B : roots) {
        Eval e;
        try {
            e = eval(B);
        } catch (const Error&) {
            continue;
        }
        if (e.x1 < xhat1 - kAdmissTol || e.x1 > kAdmissTol || e.x2 < -kAdmissTol ||
            e.x2 > xhat2 + kAdmissTol)
            continue;
        Glue g{{"B", B}, {"c", e.c}, {"s1", e.s1}, {"s2", e.s2}, {"root_index", double(index)}};
        Layout lay = layout_double_cone(d, H, g, tol);
        if (layout_clearance(d, lay, 24) < -kAdmissTol)
            continue;
        out.push_back(finish(d, H, "double-cone", std::move(g), std::move(lay), tol));
        ++index;
    }
    return out;
}

CandidateSet double_cone_candidate(double l, double r, double theta, double H, int root_index,
                                   double tol) {
    auto all = double_cone_candidates(l, r, theta, H, tol);
    if (root_index < 0 || root_index >= static_cast<int>(all.size()))
        throw NoRootError("double cone: no admissible root with index " +
                          std::to_string(root_index) + " at H = " + std::to_string(H));
    return all[root_index];
}

std::vector<CandidateSet> cone_candidates(double l, double theta, double H, double tol) {
    const DomainSpec d = make_cone(l, theta, 3);
    const double tt = std::tan(theta);
    const double R = 1.0 / H;
    const double B_max = 2.0 * H * l * tt - 1.0;
    std::vector<CandidateSet> out;
    const double B_min = 1.0 + 1e-9;
    if (!(B_max > B_min))
        return out;

    struct Eval {
        double s1, sv, c, x1, f;
    };
    auto eval = [&](double B) {
        const KenmotsuParams k{H, B, 0.0};
        Eval e{};
        e.s1 = kenmotsu_tangent_parameter(H, B, theta, true);
        e.sv = std::acos(-1.0 / B) / (2.0 * H);
        const double X1 = kenmotsu_dx(k, 0.0, e.s1, tol);
        e.c = -kenmotsu_dx(k, 0.0, e.sv, tol);
        e.x1 = e.c + X1;
        e.f = kenmotsu_y(k, e.s1) - (l + e.x1) * tt;
        return e;
    };
    const auto roots = find_roots_on_grid(guarded([&](double B) { return eval(B).f; }), B_min,
                                          B_max, kScanCells, 1e-13 * B_max);
    const double xhat1 = -l + R * std::cos(theta) * std::cos(theta) / std::sin(theta);
    int index = 0;
    for (double B : roots) {
        Eval e;
        try {
            e = eval(B);
        } catch (const Error&) {
            continue;
        }
        if (e.x1 < xhat1 - kAdmissTol || e.x1 > kAdmissTol)
            continue;
        Glue g{{"B", B}, {"c", e.c}, {"s1", e.s1}, {"sv", e.sv}, {"root_index", double(index)}};
        Layout lay = layout_cone(d, H, g, tol);
        if (layout_clearance(d, lay, 24) < -kAdmissTol)
            continue;
        out.push_back(finish(d, H, "cone", std::move(g), std::move(lay), tol));
        ++index;
    }
    return out;
}

CandidateSet cone_candidate(double l, double theta, double H, double tol) {
    auto all = cone_candidates(l, theta, H, tol);
    if (all.empty())
        throw InadmissibleError("cone: no admissible candidate at H = " + std::to_string(H));
    return *std::min_element(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.breakdown.ratio() < b.breakdown.ratio();
    });
}

std::string hourglass_structure(HourglassCase c) {
    switch (c) {
    case HourglassCase::I: return "hourglass-i";
    case HourglassCase::II: return "hourglass-ii";
    case HourglassCase::III: return "hourglass-iii";
    case HourglassCase::IV: return "hourglass-iv";
    }
    return "hourglass";
}

std::vector<CandidateSet> hourglass_candidates(double A, double B, double C, double D, double H,
                                               std::optional<HourglassCase> only, double tol) {
    const DomainSpec d = make_hourglass(A, B, C, D, 3);
    const HourglassGeometry G(d);
    const double R = 1.0 / H;
    std::vector<CandidateSet> out;

    // Outer corner options: glue fragments with the touch abscissa.
    std::vector<std::pair<Glue, double>> outers;
    {
        const double x0 = G.C - G.D / G.m2;  // outer line meets the axis
        const double xo = x0 + R / std::sin(G.alpha);
        const Point2 touch{xo - R * std::sin(G.alpha), R * std::cos(G.alpha)};
        if (xo + R <= G.A + 1e-12 && touch.x >= G.C - 1e-12 && touch.y <= G.B + 1e-12)
            outers.push_back({{{"outer", 1.0}, {"xo", xo}}, touch.x});
    }
    {
        const double Bo_max = 2.0 * H * G.B - 1.0;
        const double Bo_min = 1.0 + 1e-9;
        if (Bo_max > Bo_min) {
            struct Eval {
                double sa, sv, c, xa, f;
            };
            auto eval = [&](double Bo) {
                const KenmotsuParams k{H, Bo, 0.0};
                Eval e{};
                e.sa = kenmotsu_tangent_parameter(H, Bo, G.alpha, true);
                e.sv = std::acos(-1.0 / Bo) / (2.0 * H);
                e.c = G.A - kenmotsu_dx(k, 0.0, e.sv, tol);
                e.xa = e.c + kenmotsu_dx(k, 0.0, e.sa, tol);
                e.f = kenmotsu_y(k, e.sa) - G.seg2(e.xa);
                return e;
            };
            const auto roots = find_roots_on_grid(guarded([&](double b) { return eval(b).f; }),
                                                  Bo_min, Bo_max, kScanCells / 2, 1e-13 * Bo_max);
            for (double Bo : roots) {
                try {
                    const Eval e = eval(Bo);
                    if (e.xa < G.C - kAdmissTol || e.xa > G.A + kAdmissTol)
                        continue;
                    outers.push_back({{{"outer", 0.0},
                                       {"Bo", Bo},
                                       {"co", e.c},
                                       {"sa", e.sa},
                                       {"sv", e.sv}},
                                      e.xa});
                } catch (const Error&) {
                }
            }
        }
    }
    if (outers.empty())
        return out;

    auto want = [&](HourglassCase c) { return !only || *only == c; };
    std::vector<std::pair<HourglassCase, Glue>> middles;

    if (want(HourglassCase::I)) {
        const double lo = std::sin(G.beta1);
        const double hi = 2.0 * H * G.B - 1.0;
        auto f = [&](double Bk) {
            const KenmotsuParams k{H, Bk, 0.0};
            const double st = kenmotsu_tangent_parameter(H, Bk, G.beta1, false);
            const double X = kenmotsu_dx(k, 0.0, st, tol);
            return kenmotsu_y(k, st) - G.seg1(X);
        };
        if (hi > lo)
            for (double Bk : find_roots_on_grid(guarded(f), lo, hi, kScanCells, 1e-13 * hi)) {
                const double st = kenmotsu_tangent_parameter(H, Bk, G.beta1, false);
                const double X = kenmotsu_dx({H, Bk, 0.0}, 0.0, st, tol);
                if (X < -kAdmissTol || X > G.C + kAdmissTol)
                    continue;
                middles.push_back({HourglassCase::I, {{"Bm", Bk}, {"sm", st}}});
            }
    }

    if (want(HourglassCase::II)) {
        const double two_hd = 2.0 * H * G.D;
        for (int sign : {+1, -1}) {
            auto b_of = [&](double phi) {
                const double disc = two_hd * two_hd - std::sin(phi) * std::sin(phi);
                if (disc < 0)
                    return kNaN;
                return -std::cos(phi) + sign * std::sqrt(disc);
            };
            auto f = [&](double phi) {
                const double Bm = b_of(phi);
                if (!std::isfinite(Bm) || Bm <= -1.0 + 1e-9)
                    return kNaN;
                return kenmotsu_dx({H, Bm, 0.0}, 0.0, phi / (2.0 * H), tol) - G.C;
            };
            for (double phi : find_roots_on_grid(guarded(f), 1e-9, kPi, kScanCells, 1e-14)) {
                const double Bm = b_of(phi);
                if (!std::isfinite(Bm) || Bm <= -1.0 + 1e-9)
                    continue;
                const double sm = phi / (2.0 * H);
                if (1.0 + Bm * std::cos(phi) < 0.0)
                    continue;  // past a vertical tangent
                const double sigma = kenmotsu_sigma({H, Bm, 0.0}, sm);
                if (sigma < -G.beta1 - 1e-9)
                    continue;
                middles.push_back({HourglassCase::II, {{"Bm", Bm}, {"sm", sm}, {"phase", phi}}});
            }
        }
    }

    if (want(HourglassCase::III)) {
        const double lo = std::sin(G.alpha);
        const double hi = 1.0 - 1e-7;
        for (int branch : {0, 1}) {
            auto s_of = [&](double b) {
                const double a = std::asin(std::min(1.0, std::sin(G.alpha) / b));
                const double phase = branch == 0 ? a - G.alpha : kPi - a - G.alpha;
                return phase / (2.0 * H);
            };
            auto f = [&](double b) {
                const double st = s_of(b);
                if (!(st > 0))
                    return kNaN;
                const KenmotsuParams k{H, -b, 0.0};
                const double X = kenmotsu_dx(k, 0.0, st, tol);
                return kenmotsu_y(k, st) - G.seg2(X);
            };
            if (hi > lo)
                for (double b : find_roots_on_grid(guarded(f), lo, hi, kScanCells, 1e-14)) {
                    const double st = s_of(b);
                    const double X = kenmotsu_dx({H, -b, 0.0}, 0.0, st, tol);
                    if (X < G.C - kAdmissTol)
                        continue;
                    middles.push_back(
                        {HourglassCase::III, {{"Bm", -b}, {"sm", st}, {"branch", double(branch)}}});
                }
        }
    }

    if (want(HourglassCase::IV)) {
        const double x0 = G.C - G.D / G.m2;
        const double xc = x0 + R / std::sin(G.alpha);
        const Point2 touch{xc - R * std::sin(G.alpha), R * std::cos(G.alpha)};
        if (touch.x >= G.C - 1e-12 && xc - R >= 0.0)
            middles.push_back({HourglassCase::IV, {{"xc", xc}}});
    }

    for (const auto& [cs, mg] : middles) {
        std::optional<CandidateSet> best;
        for (const auto& [og, touch_x] : outers) {
            Glue g = mg;
            g.insert(og.begin(), og.end());
            g["case"] = static_cast<double>(static_cast<int>(cs));
            try {
                Layout lay = layout_hourglass(d, H, cs, g, tol);
                if (layout_clearance(d, lay, 32) < -kAdmissTol)
                    continue;
                if (best && lay.breakdown.ratio() >= best->breakdown.ratio())
                    continue;
                best = finish(d, H, hourglass_structure(cs), std::move(g), std::move(lay), tol);
            } catch (const Error&) {
            }
        }
        if (best)
            out.push_back(std::move(*best));
    }
    return out;
}

std::vector<CandidateSet> candidates_for(const DomainSpec& d, double H,
                                         const std::string& only, double tol) {
    switch (d.family) {
    case Family::Cylinder:
        try {
            return {cylinder_candidate(d.n, d.l, d.r, H, tol)};
        } catch (const InadmissibleError&) {
            return {};
        }
    case Family::DoubleCone:
        require_n3(d, "double-cone");
        return double_cone_candidates(d.l, d.r, d.theta, H, tol);
    case Family::Cone:
        require_n3(d, "cone");
        return cone_candidates(d.l, d.theta, H, tol);
    case Family::Hourglass: {
        require_n3(d, "hourglass");
        std::optional<HourglassCase> c;
        if (!only.empty())
            c = case_from_structure(only);
        return hourglass_candidates(d.A, d.B, d.C, d.D, H, c, tol);
    }
    case Family::Ball:
        return {assemble_candidate(d, H, "ball", {}, tol)};
    }
    return {};
}

RatioResult candidate_ratio(const CandidateSet& c, double tol) {
    const AreaVolume av = curve_area_volume(c.generatrix, tol);
    return {av.P / av.V, av.P, av.V, c.breakdown};
}

double candidate_clearance(const CandidateSet& c, int per_piece) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : sample_curve(c.generatrix, per_piece))
        m = std::min(m, point_clearance(c.domain, {p.x, p.y}));
    return m;
}

DelaunayParams free_piece_params(const CandidateSet& c, std::size_t i) {
    const auto& piece = c.generatrix.pieces.at(i);
    if (const auto* d = std::get_if<DelaunayArc>(&piece))
        return d->params;
    if (const auto* a = std::get_if<Arc>(&piece))
        return {c.generatrix.n, 1.0 / a->R, 0.0};
    throw DomainError("free_piece_params: piece is a segment");
}

} // namespace cheeger
