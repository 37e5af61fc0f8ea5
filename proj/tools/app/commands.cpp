#include "commands.hpp"

#include "reference.hpp"
#include "report.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#ifdef CHEEGER_HAVE_OPENMP
#include <omp.h>
#endif

namespace cheeger::app {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "json";
    std::string tol;
    int threads = 0;
    bool parallel = false;
    int samples = 2048;

    Tolerances tolerances() const {
        try {
            Tolerances t = tolerances_from_env();
            if (!tol.empty())
                t = parse_tolerances(tol, t);
            return t;
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    SolverConfig solver() const {
        SolverConfig c;
        c.tol = tolerances();
        c.exec = parallel ? Execution::Parallel : Execution::Serial;
        return c;
    }
};

struct DomainArgs {
    std::string family;
    int n = 3;
    double l = NAN, r = NAN, theta = NAN, theta_deg = NAN, theta_arcsin = NAN;
    double A = NAN, B = NAN, C = NAN, D = NAN, R = NAN;
};

void add_domain_options(CLI::App* cmd, DomainArgs& a) {
    cmd->add_option("--n", a.n, "dimension")->check(CLI::Range(3, 1000));
    cmd->add_option("--l", a.l, "length / left leg");
    cmd->add_option("--r", a.r, "radius / right leg");
    auto* t = cmd->add_option("--theta", a.theta, "left angle in radians");
    auto* td = cmd->add_option("--theta-deg", a.theta_deg, "left angle in degrees");
    auto* ta = cmd->add_option("--theta-arcsin", a.theta_arcsin, "left angle as arcsin(value)");
    t->excludes(td)->excludes(ta);
    td->excludes(ta);
    cmd->add_option("--A", a.A, "hourglass half length");
    cmd->add_option("--B", a.B, "hourglass outer height");
    cmd->add_option("--C", a.C, "hourglass neck half width");
    cmd->add_option("--D", a.D, "hourglass neck height");
    cmd->add_option("--R", a.R, "ball radius");
}

double need(double v, const char* name, const std::string& family) {
    if (std::isnan(v))
        throw UsageError(family + " requires --" + name);
    return v;
}

double angle(const DomainArgs& a, const std::string& family) {
    if (!std::isnan(a.theta))
        return a.theta;
    if (!std::isnan(a.theta_deg))
        return a.theta_deg * std::numbers::pi / 180.0;
    if (!std::isnan(a.theta_arcsin)) {
        if (!(std::abs(a.theta_arcsin) <= 1.0))
            throw DomainError("--theta-arcsin must lie in [-1, 1]");
        return std::asin(a.theta_arcsin);
    }
    throw UsageError(family + " requires --theta, --theta-deg or --theta-arcsin");
}

DomainSpec make_domain(const DomainArgs& a) {
    Family f{};
    try {
        f = family_from_string(a.family);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    switch (f) {
    case Family::Cylinder:
        return make_cylinder(need(a.l, "l", a.family), need(a.r, "r", a.family), a.n);
    case Family::Cone:
        return make_cone(need(a.l, "l", a.family), angle(a, a.family), a.n);
    case Family::DoubleCone:
        return make_double_cone(need(a.l, "l", a.family), need(a.r, "r", a.family),
                                angle(a, a.family), a.n);
    case Family::Hourglass:
        return make_hourglass(need(a.A, "A", a.family), need(a.B, "B", a.family),
                              need(a.C, "C", a.family), need(a.D, "D", a.family), a.n);
    case Family::Ball:
        return make_ball(need(a.R, "R", a.family), a.n);
    }
    throw UsageError("unknown family");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f << text;
    if (!f)
        throw IoError("write to " + path + " failed");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool certificates_pass(const std::vector<CertificateReport>& certs) {
    for (const auto& c : certs)
        if (c.applicable && !c.pass)
            return false;
    return true;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- commands ---------------------------------------------------------------

int cmd_classify(const RunConfig&, int n, double H, double T, std::ostream& out) {
    const DelaunayParams p{n, H, T};
    validate(p, 1e-9);
    Json j;
    j["n"] = n;
    j["H"] = H;
    j["T"] = T;
    j["class"] = std::string(to_string(classify(p, 1e-9)));
    if (H > 0) {
        j["t_max"] = t_max(n, H);
        j["cylinder_radius"] = cylinder_radius(n, H);
        try {
            const ProfileExtrema e = profile_extrema(p);
            j["y_min"] = e.y_min;
            j["y_max"] = e.y_max;
        } catch (const Error&) {
        }
    }
    print_json(out, j);
    return kOk;
}

int cmd_profile(const RunConfig& cfg, int n, double H, double T, double y0, double length,
                int samples, std::ostream& out) {
    const DelaunayParams p{n, H, T};
    validate(p, 1e-9);
    std::optional<double> y;
    if (!std::isnan(y0))
        y = y0;
    else if (H == 0.0)
        throw UsageError("profile with H = 0 requires --y0");
    const CurvePoint s = profile_start(p, y);
    if (std::isnan(length))
        length = H > 0 ? 2.0 * std::numbers::pi / H : 10.0;
    ProfileOptions opts;
    opts.tol = cfg.tolerances().ode;
    opts.stop_at_axis = true;
    opts.samples = std::max(samples, 2);
    const Profile pr = integrate_profile(p, s, length, opts);
    if (cfg.format == "csv") {
        out << "s,x,y,sigma,first_integral_residual\n";
        for (const auto& q : pr.points)
            out << format_double(q.s) << ',' << format_double(q.x) << ',' << format_double(q.y)
                << ',' << format_double(q.sigma) << ','
                << format_double(first_integral_residual(p, q)) << '\n';
        return kOk;
    }
    Json j;
    j["n"] = n;
    j["H"] = H;
    j["T"] = T;
    j["class"] = std::string(to_string(classify(p, 1e-9)));
    j["reached_axis"] = pr.reached_axis;
    Json pts = Json::array();
    for (const auto& q : pr.points)
        pts.push_back({q.s, q.x, q.y, q.sigma});
    j["columns"] = {"s", "x", "y", "sigma"};
    j["points"] = pts;
    print_json(out, j);
    return kOk;
}

int cmd_cheeger(const RunConfig& cfg, const DomainArgs& da, const std::string& structure,
                const std::string& plot, double scale, std::ostream& out) {
    const DomainSpec d = make_domain(da);
    SolverConfig sc = cfg.solver();
    sc.structure = structure;
    const CheegerResult r = cheeger_constant(d, sc);
    const auto certs = certify(r, cfg.samples);
    if (!plot.empty())
        write_file(plot, candidate_svg(r.optimal, scale));
    if (cfg.format == "csv") {
        out << csv_header() << '\n' << csv_row(r, certificates_pass(certs)) << '\n';
    } else {
        print_json(out, result_to_json(r, certs));
    }
    return kOk;
}

int cmd_tables(const RunConfig& cfg, const std::string& only, std::ostream& out) {
    const SolverConfig sc = cfg.solver();
    std::vector<const ReferenceEntry*> rows;
    for (const auto& e : reference_entries())
        if (only.empty() || to_string(e.domain.family) == only)
            rows.push_back(&e);
    if (rows.empty())
        throw UsageError("no table rows for family '" + only + "'");
    if (cfg.format == "json") {
        Json a = Json::array();
        for (const auto* e : rows) {
            const CheegerResult r = cheeger_constant(e->domain, sc);
            const auto certs = certify(r, cfg.samples);
            Json j = result_to_json(r, certs);
            j["table"] = e->table;
            j["reference_H"] = std::isnan(e->H) ? Json(nullptr) : Json(e->H);
            j["reference_h"] = e->h;
            j["relative_delta_h"] = (r.h - e->h) / e->h;
            a.push_back(j);
        }
        print_json(out, a);
        return kOk;
    }
    out << csv_header() << ",reference_H,reference_h,relative_delta_h\n";
    for (const auto* e : rows) {
        const CheegerResult r = cheeger_constant(e->domain, sc);
        const auto certs = certify(r, cfg.samples);
        out << csv_row(r, certificates_pass(certs)) << ','
            << (std::isnan(e->H) ? "" : format_double(e->H)) << ',' << format_double(e->h) << ','
            << format_double((r.h - e->h) / e->h) << '\n';
    }
    return kOk;
}

int cmd_sweep(const RunConfig& cfg, double A, double B, double C, SweepConfig sw,
              const std::string& csv, std::ostream& out) {
    if (!(sw.D_max > sw.D_min))
        throw UsageError("sweep: empty D range");
    if (!(sw.D_min > 0.0) || !(sw.D_max < B))
        throw UsageError("sweep: D range must lie inside (0, B)");
    sw.solver = cfg.solver();
    const SweepResult s = hourglass_sweep(A, B, C, sw);
    if (!csv.empty()) {
        std::ostringstream os;
        os << "D,h,H_opt,structure,Bm,phase\n";
        for (const auto& p : s.grid)
            os << format_double(p.D) << ',' << format_double(p.h) << ',' << format_double(p.H_opt)
               << ',' << p.structure << ',' << format_double(p.Bm) << ',' << p.phase << '\n';
        write_file(csv, os.str());
    }
    print_json(out, sweep_to_json(s));
    return kOk;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("malformed number list '" + s + "'");
        }
    }
    if (v.empty())
        throw UsageError("empty number list");
    return v;
}

int cmd_plot(const RunConfig& cfg, const DomainArgs& da, const std::string& from,
             const std::string& Ts, double H, double length, const std::string& path, double scale,
             std::ostream& out) {
    if (path.empty())
        throw UsageError("plot requires --out");
    std::string svg;
    Json j;
    if (da.family == "delaunay") {
        const auto tv = parse_list(Ts);
        if (std::isnan(H))
            throw UsageError("plot delaunay requires --H");
        if (std::isnan(length))
            length = 4.0 * std::numbers::pi / H;
        svg = delaunay_family_svg(da.n, H, tv, length, scale);
        j["curves"] = tv.size();
    } else if (!from.empty()) {
        const Json rep = Json::parse(read_file(from));
        const CandidateSet c = candidate_from_json(rep, cfg.tolerances().quad);
        svg = candidate_svg(c, scale);
        j["h"] = c.breakdown.ratio();
    } else {
        const DomainSpec d = make_domain(da);
        const CheegerResult r = cheeger_constant(d, cfg.solver());
        svg = candidate_svg(r.optimal, scale);
        j["h"] = r.h;
        j["structure"] = r.optimal.structure;
    }
    write_file(path, svg);
    j["out"] = path;
    print_json(out, j);
    return kOk;
}

int cmd_check(const RunConfig& cfg, const std::string& what, const DomainArgs& da,
              const std::string& in, std::ostream& out) {
    if (what == "roundtrip") {
        if (in.empty())
            throw UsageError("check roundtrip requires --in");
        Json rep;
        try {
            rep = Json::parse(read_file(in));
        } catch (const Json::parse_error& e) {
            throw UsageError(std::string("malformed report: ") + e.what());
        }
        const double h = rep.at("h").get<double>();
        const double again = recompute_h(rep, cfg.tolerances().quad);
        Json j;
        j["name"] = "roundtrip";
        j["h_recorded"] = h;
        j["h_recomputed"] = again;
        j["difference"] = std::abs(again - h);
        j["pass"] = std::abs(again - h) <= 1e-9;
        print_json(out, j);
        return kOk;
    }
    if (what == "rolling-ball") {
        DomainArgs a = da;
        a.family = "cone";
        const DomainSpec d = make_domain(a);
        const CheegerResult r = cheeger_constant(d, cfg.solver());
        print_json(out, certificate_to_json(rolling_ball_check(d.l, d.theta, r.h)));
        return kOk;
    }
    if (what == "sphere") {
        const SphereInfeasibility s = cylinder_sphere_infeasibility(
            da.n, need(da.l, "l", "check sphere"), need(da.r, "r", "check sphere"));
        Json j;
        j["name"] = "sphere_infeasibility";
        j["lhs"] = s.lhs;
        j["rhs"] = s.rhs;
        j["gap"] = s.gap;
        j["min_abs_gap"] = s.min_abs_gap;
        j["equality_possible"] = s.equality_possible;
        j["pass"] = !s.equality_possible;
        print_json(out, j);
        return kOk;
    }
    if (what == "t-sign" || what == "classification" || what == "height" || what == "all") {
        const DomainSpec d = make_domain(da);
        const CheegerResult r = cheeger_constant(d, cfg.solver());
        Json a = Json::array();
        if (what == "t-sign" || what == "all")
            a.push_back(certificate_to_json(t_sign_certificate(r.optimal, r.h, cfg.samples)));
        if (what == "classification" || what == "all")
            a.push_back(certificate_to_json(classification_certificate(r)));
        if (what == "height" || what == "all")
            a.push_back(certificate_to_json(height_criterion(d, r.h)));
        Json j;
        j["domain"] = domain_to_json(d);
        j["h"] = r.h;
        j["certificates"] = a;
        print_json(out, j);
        return kOk;
    }
    throw UsageError("unknown check '" + what +
                     "' (t-sign, classification, height, all, rolling-ball, sphere, roundtrip)");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cheeger sets of rotationally invariant domains"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    auto* format_opt = app.add_option("--format", cfg.format, "output format (tables: csv)")
                           ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", cfg.tol, "tolerance override, e.g. 1e-9 or quad=1e-9,root=1e-9");
    app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--parallel", cfg.parallel, "evaluate scan and sweep grids in parallel");
    app.add_option("--samples", cfg.samples, "certificate samples per piece")
        ->check(CLI::Range(2, 1 << 20));

    int n = 3;
    double H = NAN, T = NAN, y0 = NAN, length = NAN;
    int profile_samples = 201;
    auto* classify_cmd = app.add_subcommand("classify", "Delaunay class of (n, H, T)");
    classify_cmd->add_option("--n", n)->check(CLI::Range(3, 1000));
    classify_cmd->add_option("--H", H)->required();
    classify_cmd->add_option("--T", T)->required();

    auto* profile_cmd = app.add_subcommand("profile", "integrate a generating curve");
    profile_cmd->add_option("--n", n)->check(CLI::Range(3, 1000));
    profile_cmd->add_option("--H", H)->required();
    profile_cmd->add_option("--T", T)->required();
    profile_cmd->add_option("--y0", y0, "start ordinate (default: highest point)");
    profile_cmd->add_option("--length", length, "arclength span");
    profile_cmd->add_option("--points", profile_samples, "output points");

    DomainArgs da;
    std::string structure, plot_path;
    double scale = 100.0;
    auto* cheeger_cmd = app.add_subcommand("cheeger", "Cheeger constant of a domain");
    cheeger_cmd->add_option("family", da.family, "cylinder, cone, double-cone, hourglass, ball")
        ->required();
    add_domain_options(cheeger_cmd, da);
    cheeger_cmd->add_option("--structure", structure, "restrict to one candidate structure");
    cheeger_cmd->add_option("--plot", plot_path, "also write an SVG of the optimum");
    cheeger_cmd->add_option("--scale", scale, "SVG units per length unit")
        ->check(CLI::PositiveNumber);

    std::string only;
    auto* tables_cmd = app.add_subcommand("tables", "recompute the reference tables");
    tables_cmd->add_option("--family", only, "restrict to one family");

    double A = 3.0, B = 2.0, C = 0.3;
    SweepConfig sw;
    std::string sweep_csv;
    auto* sweep_cmd = app.add_subcommand("sweep", "hourglass sweep over D");
    sweep_cmd->add_option("--A", A);
    sweep_cmd->add_option("--B", B);
    sweep_cmd->add_option("--C", C);
    sweep_cmd->add_option("--D-min", sw.D_min);
    sweep_cmd->add_option("--D-max", sw.D_max);
    sweep_cmd->add_option("--step", sw.step)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--bisect-tol", sw.bisect_tol)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--csv", sweep_csv, "also write the grid as CSV");

    std::string from, Ts;
    auto* plot_cmd = app.add_subcommand("plot", "SVG of an optimum or a Delaunay family");
    plot_cmd->add_option("family", da.family, "domain family or 'delaunay'")->required();
    add_domain_options(plot_cmd, da);
    plot_cmd->add_option("--from", from, "report JSON to plot instead of solving");
    plot_cmd->add_option("--H", H, "mean curvature (delaunay)");
    plot_cmd->add_option("--T", Ts, "comma separated first integrals (delaunay)");
    plot_cmd->add_option("--length", length, "arclength per curve (delaunay)");
    plot_cmd->add_option("--out", plot_path, "output file")->required();
    plot_cmd->add_option("--scale", scale)->check(CLI::PositiveNumber);

    std::string what, in;
    auto* check_cmd = app.add_subcommand("check", "certificates and consistency checks");
    check_cmd->add_option("what", what,
                          "t-sign, classification, height, all, rolling-ball, sphere, roundtrip")
        ->required();
    check_cmd->add_option("--family", da.family);
    add_domain_options(check_cmd, da);
    check_cmd->add_option("--in", in, "report JSON (roundtrip)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

#ifdef CHEEGER_HAVE_OPENMP
    if (cfg.threads > 0)
        omp_set_num_threads(cfg.threads);
#endif

    try {
        if (*classify_cmd)
            return cmd_classify(cfg, n, H, T, out);
        if (*profile_cmd)
            return cmd_profile(cfg, n, H, T, y0, length, profile_samples, out);
        if (*cheeger_cmd)
            return cmd_cheeger(cfg, da, structure, plot_path, scale, out);
        if (*tables_cmd) {
            if (format_opt->count() == 0)
                cfg.format = "csv";
            return cmd_tables(cfg, only, out);
        }
        if (*sweep_cmd)
            return cmd_sweep(cfg, A, B, C, sw, sweep_csv, out);
        if (*plot_cmd)
            return cmd_plot(cfg, da, from, Ts, H, length, plot_path, scale, out);
        if (*check_cmd)
            return cmd_check(cfg, what, da, in, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInadmissible;
    } catch (const Json::exception& e) {
        err << "usage error: malformed report: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace cheeger::app
