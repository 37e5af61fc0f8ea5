#include "report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace cheeger::app {

namespace {

Json number(double v) {
    if (std::isfinite(v))
        return v;
    return nullptr;
}

double read_number(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return 0.0;
    return j.at(key).get<double>();
}

std::string param_cell(const DomainSpec& d, char which) {
    auto f = [](double v) { return format_double(v); };
    switch (d.family) {
    case Family::Cylinder:
        return which == 'l' ? f(d.l) : which == 'r' ? f(d.r) : "";
    case Family::Cone:
        return which == 'l' ? f(d.l) : which == 't' ? f(d.theta) : "";
    case Family::DoubleCone:
        return which == 'l' ? f(d.l) : which == 'r' ? f(d.r) : which == 't' ? f(d.theta) : "";
    case Family::Hourglass:
        return which == 'A' ? f(d.A) : which == 'B' ? f(d.B) : which == 'C' ? f(d.C)
             : which == 'D' ? f(d.D) : "";
    case Family::Ball:
        return which == 'R' ? f(d.R) : "";
    }
    return "";
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v))
        return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Json domain_to_json(const DomainSpec& d) {
    Json j;
    j["family"] = std::string(to_string(d.family));
    j["n"] = d.n;
    switch (d.family) {
    case Family::Cylinder:
        j["l"] = d.l;
        j["r"] = d.r;
        break;
    case Family::Cone:
        j["l"] = d.l;
        j["theta"] = d.theta;
        break;
    case Family::DoubleCone:
        j["l"] = d.l;
        j["r"] = d.r;
        j["theta"] = d.theta;
        break;
    case Family::Hourglass:
        j["A"] = d.A;
        j["B"] = d.B;
        j["C"] = d.C;
        j["D"] = d.D;
        break;
    case Family::Ball:
        j["R"] = d.R;
        break;
    }
    return j;
}

DomainSpec domain_from_json(const Json& j) {
    DomainSpec d;
    d.family = family_from_string(j.at("family").get<std::string>());
    d.n = j.value("n", 3);
    d.l = read_number(j, "l");
    d.r = read_number(j, "r");
    d.theta = read_number(j, "theta");
    d.A = read_number(j, "A");
    d.B = read_number(j, "B");
    d.C = read_number(j, "C");
    d.D = read_number(j, "D");
    d.R = read_number(j, "R");
    return build_domain(d);
}

Json breakdown_to_json(const RatioBreakdown& b) {
    Json j;
    auto terms = [](const std::vector<RatioTerm>& ts) {
        Json a = Json::array();
        for (const auto& t : ts)
            a.push_back({{"name", t.name}, {"value", number(t.value)}, {"multiplicity", t.multiplicity}});
        return a;
    };
    j["area"] = terms(b.area);
    j["volume"] = terms(b.volume);
    j["P"] = number(b.P);
    j["V"] = number(b.V);
    j["ratio"] = number(b.ratio());
    return j;
}

Json candidate_to_json(const CandidateSet& c) {
    Json j;
    j["structure"] = c.structure;
    j["H"] = c.H;
    Json g = Json::object();
    for (const auto& [k, v] : c.glue)
        g[k] = v;
    j["glue"] = g;
    Json pieces = Json::array();
    for (std::size_t i = 0; i < c.generatrix.pieces.size(); ++i) {
        const auto& p = c.generatrix.pieces[i];
        Json q;
        q["kind"] = std::holds_alternative<Segment>(p) ? "segment"
                    : std::holds_alternative<Arc>(p)   ? "arc"
                                                       : "delaunay";
        const Point2 a = piece_start(p);
        const Point2 b = piece_end(p);
        q["start"] = {a.x, a.y};
        q["end"] = {b.x, b.y};
        const bool is_free = std::find(c.free_pieces.begin(), c.free_pieces.end(), i) !=
                             c.free_pieces.end();
        q["free"] = is_free;
        if (is_free) {
            const DelaunayParams dp = free_piece_params(c, i);
            q["H"] = dp.H;
            q["T"] = dp.T;
            q["class"] = std::string(to_string(classify(dp, 1e-9)));
        }
        pieces.push_back(q);
    }
    j["pieces"] = pieces;
    j["breakdown"] = breakdown_to_json(c.breakdown);
    return j;
}

Json certificate_to_json(const CertificateReport& r) {
    Json j;
    j["name"] = r.name;
    j["applicable"] = r.applicable;
    j["pass"] = r.pass;
    j["max_residual"] = number(r.max_residual);
    j["threshold"] = number(r.threshold);
    j["witness"] = {{"piece", r.witness.piece},
                    {"s", r.witness.s},
                    {"x", r.witness.x},
                    {"y", r.witness.y}};
    Json v = Json::object();
    for (const auto& [k, x] : r.values)
        v[k] = number(x);
    j["values"] = v;
    j["notes"] = r.notes;
    return j;
}

Json diagnostics_to_json(const SolverDiagnostics& d) {
    Json j;
    j["h_minimize"] = number(d.h_minimize);
    j["h_fixed_point"] = number(d.h_fixed_point);
    j["agreement"] = number(d.agreement);
    j["stationarity"] = number(d.stationarity);
    j["H_interval"] = {number(d.H_lo), number(d.H_hi)};
    j["evaluations"] = d.evaluations;
    j["local_minima"] = d.local_minima;
    j["unimodal"] = d.unimodal;
    j["clearance"] = number(d.clearance);
    j["warnings"] = d.warnings;
    return j;
}

Json result_to_json(const CheegerResult& r, const std::vector<CertificateReport>& certs) {
    Json j;
    j["domain"] = domain_to_json(r.domain);
    j["h"] = r.h;
    j["H_opt"] = r.H_opt;
    const DomainMetrics m = domain_metrics(r.domain);
    j["bounds"] = {{"faber_krahn", faber_krahn_bound(r.domain)}, {"domain_ratio", m.ratio}};
    j["candidate"] = candidate_to_json(r.optimal);
    j["diagnostics"] = diagnostics_to_json(r.diagnostics);
    Json cs = Json::array();
    bool all = true;
    for (const auto& c : certs) {
        cs.push_back(certificate_to_json(c));
        all = all && (c.pass || !c.applicable);
    }
    j["certificates"] = cs;
    j["certificate_pass"] = all;
    return j;
}

Json sweep_to_json(const SweepResult& s) {
    Json j;
    j["A"] = s.A;
    j["B"] = s.B;
    j["C"] = s.C;
    Json grid = Json::array();
    for (const auto& p : s.grid)
        grid.push_back({{"D", p.D},
                        {"h", p.h},
                        {"H_opt", p.H_opt},
                        {"structure", p.structure},
                        {"Bm", number(p.Bm)},
                        {"phase", p.phase}});
    j["grid"] = grid;
    Json crit = Json::array();
    for (const auto& c : s.critical)
        crit.push_back({{"from", c.from}, {"to", c.to}, {"value", c.value}, {"bracket", {c.lo, c.hi}}});
    j["critical"] = crit;
    return j;
}

CandidateSet candidate_from_json(const Json& report, double tol) {
    const DomainSpec d = domain_from_json(report.at("domain"));
    const Json& c = report.at("candidate");
    Glue g;
    for (const auto& [k, v] : c.at("glue").items())
        g[k] = v.get<double>();
    return assemble_candidate(d, c.at("H").get<double>(), c.at("structure").get<std::string>(), g,
                              tol);
}

double recompute_h(const Json& report, double tol) {
    return candidate_from_json(report, tol).breakdown.ratio();
}

std::string csv_header() {
    return "family,l,r,theta,A,B,C,D,R,n,H_opt,h,structure,certificate_pass";
}

std::string csv_row(const CheegerResult& r, bool certificate_pass) {
    std::ostringstream os;
    const DomainSpec& d = r.domain;
    os << to_string(d.family);
    for (char c : {'l', 'r', 't', 'A', 'B', 'C', 'D', 'R'})
        os << ',' << param_cell(d, c);
    os << ',' << d.n << ',' << format_double(r.H_opt) << ',' << format_double(r.h) << ','
       << r.optimal.structure << ',' << (certificate_pass ? "true" : "false");
    return os.str();
}

} // namespace cheeger::app
