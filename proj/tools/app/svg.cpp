#include "svg.hpp"

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cheeger::app {

namespace {

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string header(const Box& b, double scale) {
    const double pad = 0.05 * std::max(b.x1 - b.x0, b.y1 - b.y0);
    const double w = (b.x1 - b.x0 + 2 * pad) * scale;
    const double h = (b.y1 - b.y0 + 2 * pad) * scale;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
       << "\" height=\"" << fmt(h) << "\" viewBox=\"" << fmt((b.x0 - pad) * scale) << ' '
       << fmt(-(b.y1 + pad) * scale) << ' ' << fmt(w) << ' ' << fmt(h) << "\">\n";
    return os.str();
}

std::string path_data(const std::vector<Point2>& pts, double scale, bool close) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i == 0 ? 'M' : 'L') << fmt(pts[i].x * scale) << ',' << fmt(-pts[i].y * scale) << ' ';
    if (close)
        os << 'Z';
    return os.str();
}

std::vector<Point2> with_mirror(const std::vector<Point2>& upper) {
    std::vector<Point2> out = upper;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it)
        out.push_back({it->x, -it->y});
    return out;
}

} // namespace

std::string candidate_svg(const CandidateSet& c, double scale) {
    std::vector<Point2> dom = generatrix_polyline(c.domain);
    std::vector<Point2> cand;
    for (const auto& p : sample_curve(c.generatrix, 128))
        cand.push_back({p.x, p.y});
    Box b;
    for (const auto& p : dom) {
        b.add(p.x, p.y);
        b.add(p.x, -p.y);
    }
    for (const auto& p : cand) {
        b.add(p.x, p.y);
        b.add(p.x, -p.y);
    }
    std::ostringstream os;
    os << header(b, scale);
    os << "<path d=\"" << path_data(with_mirror(cand), scale, true)
       << "\" fill=\"#b0b0b0\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
    os << "<path d=\"" << path_data(with_mirror(dom), scale, true)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    os << "<line x1=\"" << fmt(b.x0 * scale) << "\" y1=\"0\" x2=\"" << fmt(b.x1 * scale)
       << "\" y2=\"0\" stroke=\"black\" stroke-dasharray=\"4,3\" stroke-width=\"0.75\"/>\n";
    os << "</svg>\n";
    return os.str();
}

CurvePoint profile_start(const DelaunayParams& p, std::optional<double> y0) {
    double y = 0.0;
    if (y0) {
        y = *y0;
    } else {
        y = profile_extrema(p).y_max;
    }
    const double c = std::clamp(cos_sigma_of_y(p, y), -1.0, 1.0);
    return {0.0, 0.0, y, std::acos(c)};
}

std::string delaunay_family_svg(int n, double H, const std::vector<double>& Ts, double length,
                                double scale) {
    std::vector<std::vector<Point2>> curves;
    Box b;
    for (double T : Ts) {
        const DelaunayParams p{n, H, T};
        validate(p, 1e-9);
        ProfileOptions opts;
        opts.stop_at_axis = true;
        opts.samples = 801;
        std::vector<Point2> pts;
        const CurvePoint s = profile_start(p);
        for (double dir : {-1.0, 1.0}) {
            const Profile pr = integrate_profile(p, s, dir * 0.5 * length, opts);
            std::vector<Point2> half;
            for (const auto& q : pr.points)
                half.push_back({q.x, q.y});
            if (dir < 0)
                pts.assign(half.rbegin(), half.rend());
            else
                pts.insert(pts.end(), half.begin() + 1, half.end());
        }
        for (const auto& q : pts)
            b.add(q.x, q.y);
        curves.push_back(std::move(pts));
    }
    b.add(b.x0, 0.0);
    std::ostringstream os;
    os << header(b, scale);
    os << "<line x1=\"" << fmt(b.x0 * scale) << "\" y1=\"0\" x2=\"" << fmt(b.x1 * scale)
       << "\" y2=\"0\" stroke=\"black\" stroke-width=\"0.75\"/>\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        os << "<polyline data-T=\"" << format_double(Ts[i]) << "\" fill=\"none\" stroke=\"hsl("
           << (37 * i) % 360 << ",60%,40%)\" stroke-width=\"1\" points=\"";
        for (const auto& q : curves[i])
            os << fmt(q.x * scale) << ',' << fmt(-q.y * scale) << ' ';
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace cheeger::app
