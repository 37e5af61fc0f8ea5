#pragma once

// Cheeger-constant drivers: minimization of the candidate ratio over the
// mean curvature H, the fixed-point cross-check, and the hourglass sweep.

#include "cheeger/candidates.hpp"
#include "cheeger/numerics.hpp"

#include <string>
#include <vector>

namespace cheeger {

struct SolverConfig {
    Tolerances tol;
    Execution exec = Execution::Serial;
    int prescan = 64;         ///< samples of the H interval before refinement
    std::string structure;    ///< restrict to one candidate structure (empty = all)
    bool fixed_point = true;  ///< also solve ratio(H) = (n-1) H
};

struct SolverDiagnostics {
    double h_minimize = 0.0;
    double h_fixed_point = 0.0;   ///< NaN when not computed or not found
    double agreement = 0.0;       ///< |h_minimize - h_fixed_point|
    double stationarity = 0.0;    ///< |ratio(H_opt) - (n-1) H_opt|
    double H_lo = 0.0;            ///< searched interval
    double H_hi = 0.0;
    int evaluations = 0;
    int local_minima = 0;
    bool unimodal = true;
    double clearance = 0.0;       ///< candidate_clearance of the optimum
    std::vector<std::string> warnings;
};

struct CheegerResult {
    DomainSpec domain;
    double h = 0.0;
    double H_opt = 0.0;
    CandidateSet optimal;
    SolverDiagnostics diagnostics;
};

/// Lowest candidate ratio at H, or NaN when no candidate is admissible.
/// `best` (optional) receives the minimizing candidate.
double ratio_envelope(const DomainSpec& domain, double H, const std::string& structure,
                      double tol, CandidateSet* best = nullptr);

/// Cheeger constant of a supported domain. Throws InadmissibleError when no
/// candidate exists anywhere in the searched H interval.
CheegerResult cheeger_constant(const DomainSpec& domain, const SolverConfig& config = {});

struct SweepPoint {
    double D = 0.0;
    double h = 0.0;
    double H_opt = 0.0;
    std::string structure;
    double Bm = 0.0;    ///< Kenmotsu B of the middle piece (NaN for circles)
    std::string phase;  ///< "iv", "ii-B<0", "ii-0<B<1", "ii-B>1", "i" or "iii"
};

struct CriticalValue {
    std::string from;
    std::string to;
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

struct SweepResult {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    std::vector<SweepPoint> grid;
    std::vector<CriticalValue> critical;
};

struct SweepConfig {
    double D_min = 0.05;
    double D_max = 1.95;
    double step = 0.01;
    double bisect_tol = 1e-4;
    SolverConfig solver;
};

/// Phase label of a hourglass optimum.
std::string hourglass_phase(const CandidateSet& c);

/// Runs cheeger_constant over the D grid and bisects every change of phase label.
/// Grid points are evaluated with solver.exec; results are merged by index.
SweepResult hourglass_sweep(double A, double B, double C, const SweepConfig& config = {});

} // namespace cheeger
