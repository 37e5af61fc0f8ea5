#include "cheeger/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cheeger {

namespace {

constexpr double kTSignThreshold = 1e-8;

double ipow(double y, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i)
        r *= y;
    return r;
}

bool convex_family(Family f) {
    return f == Family::Cylinder || f == Family::Cone || f == Family::DoubleCone ||
           f == Family::Ball;
}

} // namespace

CertificateReport t_sign_certificate(const PiecewiseCurve& curve, double h, int n,
                                     int samples_per_piece) {
    CertificateReport rep;
    rep.name = "t_sign";
    rep.threshold = kTSignThreshold;
    rep.max_residual = -std::numeric_limits<double>::infinity();
    const double H = h / (n - 1);
    for (std::size_t i = 0; i < curve.pieces.size(); ++i) {
        for (const auto& p : sample_piece(curve.pieces[i], samples_per_piece)) {
            const double y = std::max(p.y, 0.0);
            const double T = ipow(y, n - 2) * std::cos(p.sigma) - H * ipow(y, n - 1);
            if (T > rep.max_residual) {
                rep.max_residual = T;
                rep.witness = {static_cast<int>(i), p.s, p.x, p.y};
            }
        }
    }
    if (curve.pieces.empty()) {
        rep.max_residual = 0.0;
        rep.notes.push_back("empty curve");
    }
    rep.values["H"] = H;
    rep.pass = rep.max_residual <= rep.threshold;
    return rep;
}

CertificateReport t_sign_certificate(const CandidateSet& c, double h, int samples_per_piece) {
    if (c.free_pieces.empty()) {
        CertificateReport rep;
        rep.name = "t_sign";
        rep.threshold = kTSignThreshold;
        rep.pass = true;
        rep.notes.push_back("no free boundary; vacuous pass");
        return rep;
    }
    CertificateReport rep = t_sign_certificate(c.generatrix, h, c.generatrix.n, samples_per_piece);
    const bool is_free = std::find(c.free_pieces.begin(), c.free_pieces.end(),
                                   static_cast<std::size_t>(rep.witness.piece)) !=
                         c.free_pieces.end();
    rep.values["witness_free"] = is_free ? 1.0 : 0.0;
    if (!rep.pass && is_free) {
        const auto cls = classify(free_piece_params(c, rep.witness.piece), 1e-9);
        rep.notes.push_back("T > 0 on free piece " + std::to_string(rep.witness.piece) + " (" +
                            std::string(to_string(cls)) + ")");
    }
    return rep;
}

CertificateReport height_criterion(const DomainSpec& spec, double h) {
    CertificateReport rep;
    rep.name = "height_criterion";
    rep.applicable = false;
    rep.pass = false;
    rep.values["h"] = h;
    rep.notes.push_back(std::string(to_string(spec.family)) +
                        " generatrix meets the axis; criterion needs a curve strictly above it");
    return rep;
}

CertificateReport height_criterion(const PiecewiseCurve& closed, double h, int samples_per_piece) {
    CertificateReport rep;
    rep.name = "height_criterion";
    const int n = closed.n;
    double min_y = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < closed.pieces.size(); ++i)
        for (const auto& p : sample_piece(closed.pieces[i], samples_per_piece))
            if (p.y < min_y) {
                min_y = p.y;
                rep.witness = {static_cast<int>(i), p.s, p.x, p.y};
            }
    const Point2 first = piece_start(closed.pieces.front());
    const Point2 last = piece_end(closed.pieces.back());
    const bool closed_ok = std::hypot(first.x - last.x, first.y - last.y) <= 1e-9;
    if (!closed_ok || !(min_y > 0.0)) {
        rep.applicable = false;
        rep.notes.push_back(closed_ok ? "curve touches the axis" : "curve is not closed");
        return rep;
    }
    const double V = curve_area_volume(closed).V;
    const double need = (n - 1) / h;
    const double need_volume = (n - 1.0) / n * std::pow(V / unit_ball_volume(n), 1.0 / n);
    rep.values["min_y"] = min_y;
    rep.values["required"] = need;
    rep.values["required_volume_bound"] = need_volume;
    rep.values["volume"] = V;
    rep.values["height_holds"] = min_y >= need ? 1.0 : 0.0;
    rep.values["volume_bound_holds"] = min_y >= need_volume ? 1.0 : 0.0;
    rep.max_residual = need - min_y;
    rep.threshold = 0.0;
    rep.pass = min_y >= need;
    return rep;
}

CertificateReport rolling_ball_check(double l, double theta, double h) {
    CertificateReport rep;
    rep.name = "rolling_ball";
    const double s = std::sin(theta);
    const double inradius = inscribed_ball_radius(make_cone(l, theta));
    const double radius = 2.0 / h;
    const double lhs = 2.0 * s / (3.0 * (1.0 + std::cos(theta)));
    const double rhs = s / (1.0 + s);
    rep.values["ball_radius"] = radius;
    rep.values["inradius"] = inradius;
    rep.values["inradius_closed_form"] = l * s / (1.0 + s);
    rep.values["bound_lhs"] = lhs;
    rep.values["bound_rhs"] = rhs;
    rep.values["bound_holds"] = lhs > rhs ? 1.0 : 0.0;
    rep.max_residual = radius - inradius;
    rep.threshold = 0.0;
    rep.pass = radius > inradius;
    rep.notes.push_back(rep.pass ? "no ball of radius 2/h fits in the cone"
                                 : "a ball of radius 2/h fits in the cone");
    return rep;
}

std::vector<DelaunayClass> free_piece_classes(const CandidateSet& c, double rel_tol) {
    std::vector<DelaunayClass> out;
    for (std::size_t i : c.free_pieces)
        out.push_back(classify(free_piece_params(c, i), rel_tol));
    return out;
}

CertificateReport classification_certificate(const CheegerResult& r, double rel_tol) {
    CertificateReport rep;
    rep.name = "classification";
    const auto classes = free_piece_classes(r.optimal, rel_tol);
    const bool convex = convex_family(r.domain.family);
    rep.pass = true;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        const auto cls = classes[j];
        const int piece = static_cast<int>(r.optimal.free_pieces[j]);
        rep.notes.push_back("piece " + std::to_string(piece) + ": " + std::string(to_string(cls)));
        rep.values["piece_" + std::to_string(piece)] = static_cast<double>(cls);
        if (convex && cls != DelaunayClass::Sphere && cls != DelaunayClass::Nodoid && rep.pass) {
            rep.pass = false;
            rep.witness.piece = piece;
        }
    }
    rep.max_residual = rep.pass ? 0.0 : 1.0;
    if (!convex)
        rep.notes.push_back("nonconvex family: classes reported, no restriction applied");
    return rep;
}

std::vector<CertificateReport> certify(const CheegerResult& r, int samples_per_piece) {
    return {t_sign_certificate(r.optimal, r.h, samples_per_piece), classification_certificate(r)};
}

} // namespace cheeger
