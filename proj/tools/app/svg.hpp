#pragma once

// SVG 1.1 rendering of generating curves. The y axis points up; `scale`
// is the number of SVG user units per unit length.

#include "cheeger/candidates.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cheeger::app {

/// Domain outline (stroked), the candidate region with its mirror image as
/// one filled path, and the rotation axis.
std::string candidate_svg(const CandidateSet& c, double scale = 100.0);

/// One polyline per first integral in `Ts` (generating curves of one family).
std::string delaunay_family_svg(int n, double H, const std::vector<double>& Ts, double length,
                                double scale = 100.0);

/// Start point used for plotted and printed profiles: the highest point of
/// the curve, or ordinate y0 when given.
CurvePoint profile_start(const DelaunayParams& p, std::optional<double> y0 = std::nullopt);

} // namespace cheeger::app
