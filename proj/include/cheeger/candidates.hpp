#pragma once

// Candidates for Cheeger sets: rotationally invariant sets whose free
// boundary consists of Delaunay pieces of one mean curvature H, glued
// tangentially to the boundary of the domain.
//
// Every builder solves its tangency conditions into a small table of glue
// parameters; assemble_candidate turns (domain, H, structure, glue) into the
// generatrix and the closed-form ratio breakdown, so a candidate can be
// rebuilt deterministically from its recorded glue.

#include "cheeger/domains.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cheeger {

struct RatioTerm {
    std::string name;
    double value = 0.0;      ///< contribution of one copy
    int multiplicity = 1;    ///< number of congruent copies in the candidate
};

/// Named perimeter and volume contributions computed from closed forms and
/// the Kenmotsu quadratures.
struct RatioBreakdown {
    std::vector<RatioTerm> area;
    std::vector<RatioTerm> volume;
    double P = 0.0;
    double V = 0.0;

    void add_area(std::string name, double value, int multiplicity = 1);
    void add_volume(std::string name, double value, int multiplicity = 1);
    [[nodiscard]] double ratio() const { return P / V; }
    [[nodiscard]] double term(const std::string& name) const;  ///< one copy; 0 if absent
};

using Glue = std::map<std::string, double>;

struct CandidateSet {
    DomainSpec domain;
    double H = 0.0;
    std::string structure;  ///< e.g. "cylinder", "double-cone", "hourglass-ii"
    Glue glue;
    PiecewiseCurve generatrix;
    std::vector<std::size_t> free_pieces;  ///< indices of free-boundary pieces
    RatioBreakdown breakdown;
};

/// Generatrix pieces with the full rebuild from glue.
/// Throws DomainError on an unknown structure or missing glue entries.
CandidateSet assemble_candidate(const DomainSpec& domain, double H, const std::string& structure,
                                const Glue& glue, double tol = 1e-10);

// ---- cylinders ------------------------------------------------------------

/// Symmetric candidate in Z_{l,r}: face disks, nodoid arcs from vertical
/// tangency on the faces to horizontal tangency at y = r, and the lateral
/// segment between. Throws InadmissibleError if H <= 1/r or x(s2) > l/2.
CandidateSet cylinder_candidate(int n, double l, double r, double H, double tol = 1e-10);

/// Ordinate y(s1) of the vertical tangency, from
/// y^{n-1} = r^{n-1} - r^{n-2}/H. Throws InadmissibleError if H <= 1/r.
double cylinder_vertical_ordinate(int n, double r, double H);

struct SphereInfeasibility {
    double lhs = 0.0;       ///< (n-1)/r
    double rhs = 0.0;       ///< P/V of ball caps plus cylinder
    double gap = 0.0;       ///< rhs - lhs
    double min_abs_gap = 0.0;  ///< over the scanned radii
    bool equality_possible = false;
};

/// Evaluates both sides of the ball-caps-plus-cylinder equation for the
/// cylinder Z_{l,r} and scans radii rho in (0, l/2] of Z_{l,rho}.
SphereInfeasibility cylinder_sphere_infeasibility(int n, double l, double r, int samples = 400);

// ---- double cones and cones (n = 3) ---------------------------------------

/// Kenmotsu arclength s > 0 (s < 0 when `left`) at which a curve with
/// parameters (H, B), B >= sin(beta), has slope -tan(beta) (resp. +tan(beta)).
double kenmotsu_tangent_parameter(double H, double B, double beta, bool left);

/// The same quantities written as in the double-cone literature:
/// s1 = -(1/H) arctan((sqrt((B^2-1)tan^2 th + B^2) - B) / ((B-1) tan th)),
/// s2 = (1/H) arctan((sqrt(l^2(B^2-1)tan^2 th + B^2 r^2) - B r) / (l(B-1) tan th)).
double double_cone_s1(double H, double B, double theta);
double double_cone_s2(double H, double B, double l, double r, double theta);

/// All admissible double-cone candidates at H, ordered by B.
std::vector<CandidateSet> double_cone_candidates(double l, double r, double theta, double H,
                                                 double tol = 1e-10);

/// The candidate with index root_index among double_cone_candidates.
/// Throws NoRootError if there is no such root.
CandidateSet double_cone_candidate(double l, double r, double theta, double H, int root_index,
                                   double tol = 1e-10);

std::vector<CandidateSet> cone_candidates(double l, double theta, double H, double tol = 1e-10);

/// Lowest-ratio cone candidate. Throws InadmissibleError if none exists.
CandidateSet cone_candidate(double l, double theta, double H, double tol = 1e-10);

// ---- hourglass (n = 3) ----------------------------------------------------

enum class HourglassCase { I = 1, II = 2, III = 3, IV = 4 };

std::string hourglass_structure(HourglassCase c);

/// Every admissible candidate among cases (i)-(iv) at H (only `only` when
/// given). For each middle solution the cheaper of the outer-corner options
/// (nodoid to the face, circle to the axis) is kept.
std::vector<CandidateSet> hourglass_candidates(double A, double B, double C, double D, double H,
                                               std::optional<HourglassCase> only = std::nullopt,
                                               double tol = 1e-10);

// ---- generic ----------------------------------------------------------------

/// All candidates of the domain's family at H (the ball yields itself at
/// H = 1/R). Empty when none is admissible.
std::vector<CandidateSet> candidates_for(const DomainSpec& domain, double H,
                                         const std::string& only_structure = "",
                                         double tol = 1e-10);

struct RatioResult {
    double ratio = 0.0;  ///< P/V from revolve on the generatrix
    double P = 0.0;
    double V = 0.0;
    RatioBreakdown breakdown;
};

RatioResult candidate_ratio(const CandidateSet& c, double tol = 1e-10);

/// Minimum over sampled generatrix points of upper_boundary(x) - y, and of
/// the distance to the lateral ends of the domain (negative = outside).
double candidate_clearance(const CandidateSet& c, int per_piece = 128);

/// Delaunay parameters of a free-boundary piece (Arc pieces map to the
/// sphere T = 0 with H = 1/R).
DelaunayParams free_piece_params(const CandidateSet& c, std::size_t piece_index);

} // namespace cheeger
