#pragma once

// Validators that certify computed results against the structural
// statements about rotationally invariant Cheeger sets.

#include "cheeger/solver.hpp"

#include <map>
#include <string>
#include <vector>

namespace cheeger {

struct CertificateReport {
    std::string name;
    bool applicable = true;
    bool pass = false;
    double max_residual = 0.0;
    double threshold = 0.0;
    struct Witness {
        int piece = -1;
        double s = 0.0;  ///< arclength within the piece
        double x = 0.0;
        double y = 0.0;
    } witness;
    std::map<std::string, double> values;  ///< named quantities behind the verdict
    std::vector<std::string> notes;
};

/// Samples T = y^{n-2} cos sigma - (h/(n-1)) y^{n-1} along every piece of the
/// curve; passes iff T <= 1e-8 everywhere.
CertificateReport t_sign_certificate(const PiecewiseCurve& curve, double h, int n,
                                     int samples_per_piece = 2048);

/// Same, on a candidate; the witness piece is flagged as free or fixed in
/// `values["witness_free"]`. A candidate without free boundary passes vacuously.
CertificateReport t_sign_certificate(const CandidateSet& c, double h,
                                     int samples_per_piece = 2048);

/// Height criterion for generating curves strictly above the axis:
/// min y >= (n-1)/h, and the volume-based sufficient condition
/// min y >= ((n-1)/n) (|Omega|/omega_n)^{1/n}. The built-in families touch the
/// axis, so this overload reports not-applicable.
CertificateReport height_criterion(const DomainSpec& spec, double h);

/// Closed generating curve above the axis.
CertificateReport height_criterion(const PiecewiseCurve& closed, double h,
                                   int samples_per_piece = 2048);

/// Cone K_{l,theta} (n = 3): passes iff no ball of radius 2/h fits, i.e.
/// 2/h > l sin(theta)/(1 + sin(theta)). Also records the sufficient
/// inequality 2 sin/(3(1 + cos)) > sin/(1 + sin) built from the P/V bound.
CertificateReport rolling_ball_check(double l, double theta, double h);

/// Delaunay class of every free piece. For the convex families it passes iff
/// every free piece is a sphere or a nodoid; for the hourglass the observed
/// classes are reported and the check passes. `rel_tol` is handed to classify.
CertificateReport classification_certificate(const CheegerResult& result, double rel_tol = 1e-9);

/// Classes of the free pieces, in generatrix order.
std::vector<DelaunayClass> free_piece_classes(const CandidateSet& c, double rel_tol = 1e-9);

/// The t-sign and classification certificates of a result.
std::vector<CertificateReport> certify(const CheegerResult& result, int samples_per_piece = 2048);

} // namespace cheeger
