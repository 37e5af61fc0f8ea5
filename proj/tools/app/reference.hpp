#pragma once

// Published reference values for the cylinder, double-cone and cone tables.

#include "cheeger/domains.hpp"

#include <string>
#include <vector>

namespace cheeger::app {

struct ReferenceEntry {
    std::string table;
    DomainSpec domain;
    double H = 0.0;  ///< NaN when the table lists h only
    double h = 0.0;
};

const std::vector<ReferenceEntry>& reference_entries();

/// (A, B, C, D) hourglass reference: optimum and the two nonoptimal candidates.
struct HourglassReference {
    double A = 3.0, B = 2.0, C = 0.3, D = 0.6;
    double h = 2.13324;
    double h_case_iv = 2.1742;
    double h_case_iii = 2.17616;
    double critical[4] = {0.42312, 0.44163, 1.1216, 1.9282};
};

inline constexpr HourglassReference kHourglassReference{};

} // namespace cheeger::app
