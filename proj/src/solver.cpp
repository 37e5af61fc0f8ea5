#include "cheeger/solver.hpp"

#include <cmath>
#include <limits>

namespace cheeger {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CheegerResult ball_result(const DomainSpec& d, const SolverConfig& cfg) {
    CheegerResult res;
    res.domain = d;
    res.h = d.n / d.R;
    res.H_opt = res.h / (d.n - 1);
    res.optimal = assemble_candidate(d, res.H_opt, "ball", {}, cfg.tol.quad);
    auto& diag = res.diagnostics;
    diag.h_minimize = res.h;
    diag.h_fixed_point = res.h;
    diag.H_lo = diag.H_hi = res.H_opt;
    return res;
}

} // namespace

double ratio_envelope(const DomainSpec& d, double H, const std::string& structure, double tol,
                      CandidateSet* best) {
    std::vector<CandidateSet> cs;
    try {
        cs = candidates_for(d, H, structure, tol);
    } catch (const DomainError&) {
        throw;
    } catch (const Error&) {
        return kNaN;
    }
    double r = kNaN;
    for (auto& c : cs) {
        const double v = c.breakdown.ratio();
        if (!std::isfinite(v) || !(v > 0.0))
            continue;
        if (!(v >= r)) {
            r = v;
            if (best)
                *best = c;
        }
    }
    return r;
}

CheegerResult cheeger_constant(const DomainSpec& d, const SolverConfig& cfg) {
    if (d.family == Family::Ball)
        return ball_result(d, cfg);

    const DomainMetrics m = domain_metrics(d);
    const double fk = faber_krahn_bound(d);
    const int n1 = d.n - 1;
    const double lo = 0.98 * fk / n1;
    const double hi = 1.02 * m.ratio / n1;

    const double qtol = cfg.tol.quad;
    auto env = [&](double H) { return ratio_envelope(d, H, cfg.structure, qtol); };

    MinimizeResult mr;
    try {
        mr = minimize_scalar(env, lo, hi, cfg.tol.minimize, cfg.prescan, cfg.exec);
    } catch (const NoRootError&) {
        throw InadmissibleError("cheeger: no admissible candidate for H in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    CheegerResult res;
    res.domain = d;
    res.H_opt = mr.x;
    const double r_opt = ratio_envelope(d, mr.x, cfg.structure, qtol, &res.optimal);
    res.h = r_opt;

    auto& diag = res.diagnostics;
    diag.h_minimize = r_opt;
    diag.H_lo = lo;
    diag.H_hi = hi;
    diag.evaluations = mr.evaluations + 1;
    diag.local_minima = mr.local_minima;
    diag.unimodal = mr.unimodal;
    diag.stationarity = std::abs(r_opt - n1 * mr.x);
    diag.h_fixed_point = kNaN;
    diag.agreement = kNaN;
    if (!mr.unimodal)
        diag.warnings.push_back("ratio(H) has " + std::to_string(mr.local_minima) +
                                " local minima on the pre-scan grid");

    if (cfg.fixed_point) {
        // Smallest positive root of ratio(H) - (n-1) H, bracketed from the pre-scan.
        auto g = [&](double H) {
            ++diag.evaluations;
            return env(H) - n1 * H;
        };
        double Hf = kNaN;
        const auto& xs = mr.scan_x;
        const auto& fs = mr.scan_f;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            if (!std::isfinite(fs[i]) || !std::isfinite(fs[i + 1]))
                continue;
            const double g0 = fs[i] - n1 * xs[i];
            const double g1 = fs[i + 1] - n1 * xs[i + 1];
            if (g0 > 0.0 && g1 <= 0.0) {
                try {
                    Hf = find_root(g, xs[i], xs[i + 1], cfg.tol.root);
                    diag.h_fixed_point = n1 * Hf;
                } catch (const Error& e) {
                    diag.warnings.push_back(std::string("fixed point: ") + e.what());
                }
                break;
            }
        }
        if (std::isfinite(diag.h_fixed_point)) {
            diag.agreement = std::abs(diag.h_fixed_point - diag.h_minimize);
            // The minimum is flat, so its abscissa is better located by the
            // transversal root; adopt it when the envelope there is no worse.
            if (diag.agreement <= 1e-6) {
                CandidateSet at_root;
                const double rf = ratio_envelope(d, Hf, cfg.structure, qtol, &at_root);
                ++diag.evaluations;
                if (rf <= r_opt + 1e-10) {
                    res.H_opt = Hf;
                    res.h = rf;
                    res.optimal = std::move(at_root);
                    diag.stationarity = std::abs(rf - n1 * Hf);
                }
            }
            if (diag.agreement > 1e-6)
                diag.warnings.push_back("minimizer and fixed point disagree by " +
                                        std::to_string(diag.agreement));
        } else {
            diag.warnings.push_back("fixed point: no sign change of ratio(H) - (n-1)H");
        }
    }
    diag.clearance = candidate_clearance(res.optimal);
    return res;
}

std::string hourglass_phase(const CandidateSet& c) {
    if (c.structure == "hourglass-iv")
        return "iv";
    if (c.structure == "hourglass-i")
        return "i";
    if (c.structure == "hourglass-iii")
        return "iii";
    if (c.structure == "hourglass-ii") {
        const double Bm = c.glue.at("Bm");
        if (Bm < 0.0)
            return "ii-B<0";
        if (Bm < 1.0)
            return "ii-0<B<1";
        return "ii-B>1";
    }
    throw DomainError("hourglass_phase: not a hourglass candidate");
}

namespace {

SweepPoint sweep_point(double A, double B, double C, double D, const SolverConfig& cfg) {
    const CheegerResult r = cheeger_constant(make_hourglass(A, B, C, D), cfg);
    SweepPoint p;
    p.D = D;
    p.h = r.h;
    p.H_opt = r.H_opt;
    p.structure = r.optimal.structure;
    const auto it = r.optimal.glue.find("Bm");
    p.Bm = it == r.optimal.glue.end() ? kNaN : it->second;
    p.phase = hourglass_phase(r.optimal);
    return p;
}

} // namespace

SweepResult hourglass_sweep(double A, double B, double C, const SweepConfig& cfg) {
    if (!(cfg.D_min > 0.0) || !(cfg.D_max < B) || !(cfg.D_max > cfg.D_min) || !(cfg.step > 0.0))
        throw DomainError("hourglass_sweep: need 0 < D_min < D_max < B and a positive step");
    SweepResult out{A, B, C, {}, {}};
    std::vector<double> Ds;
    const int cells = static_cast<int>(std::ceil((cfg.D_max - cfg.D_min) / cfg.step - 1e-9));
    for (int i = 0; i <= cells; ++i)
        Ds.push_back(std::min(cfg.D_min + i * cfg.step, cfg.D_max));

    SolverConfig inner = cfg.solver;
    inner.exec = Execution::Serial;
    inner.fixed_point = false;
    out.grid = map_indexed(Ds, [&](double D) { return sweep_point(A, B, C, D, inner); },
                           cfg.solver.exec);

    std::vector<std::pair<std::size_t, std::size_t>> changes;
    for (std::size_t i = 0; i + 1 < out.grid.size(); ++i)
        if (out.grid[i].phase != out.grid[i + 1].phase)
            changes.push_back({i, i + 1});

    auto bisect = [&](std::size_t i) {
        double lo = out.grid[i].D;
        double hi = out.grid[i + 1].D;
        const std::string& left = out.grid[i].phase;
        while (hi - lo > cfg.bisect_tol) {
            const double mid = 0.5 * (lo + hi);
            if (sweep_point(A, B, C, mid, inner).phase == left)
                lo = mid;
            else
                hi = mid;
        }
        return CriticalValue{left, out.grid[i + 1].phase, 0.5 * (lo + hi), lo, hi};
    };
    std::vector<std::size_t> idx;
    for (const auto& c : changes)
        idx.push_back(c.first);
    out.critical = map_indexed(idx, bisect, cfg.solver.exec);
    return out;
}

} // namespace cheeger
