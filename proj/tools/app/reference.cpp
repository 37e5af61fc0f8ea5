#include "reference.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cheeger::app {

const std::vector<ReferenceEntry>& reference_entries() {
    static const std::vector<ReferenceEntry> entries = [] {
        constexpr double pi = std::numbers::pi;
        constexpr double none = std::numeric_limits<double>::quiet_NaN();
        std::vector<ReferenceEntry> v;
        const int ns[] = {3, 4, 5, 10, 30};
        const double H1[] = {1.86237, 1.53976, 1.38214, 1.13465, 1.02474};
        const double h1[] = {3.72474, 4.61928, 5.52854, 10.2118, 29.7175};
        const double H2[] = {1.40106, 1.24549, 1.17083, 1.05746, 1.01027};
        const double h2[] = {2.80212, 3.73646, 4.68334, 9.51714, 29.2978};
        const double H3[] = {1.25659, 1.15544, 1.10738, 1.03555, 1.00634};
        const double h3[] = {2.51318, 3.46631, 4.42954, 9.31991, 29.184};
        for (int i = 0; i < 5; ++i)
            v.push_back({"cylinder l=1", make_cylinder(1, 1, ns[i]), H1[i], h1[i]});
        for (int i = 0; i < 5; ++i)
            v.push_back({"cylinder l=2", make_cylinder(2, 1, ns[i]), H2[i], h2[i]});
        for (int i = 0; i < 5; ++i)
            v.push_back({"cylinder l=3", make_cylinder(3, 1, ns[i]), H3[i], h3[i]});

        v.push_back({"double cone", make_double_cone(9.0 / 5, 16.0 / 5, std::asin(0.8)), none, 1.6502});
        v.push_back({"double cone", make_double_cone(1, 3, pi / 3), none, 2.22333});
        v.push_back({"double cone", make_double_cone(1, 1, 2 * pi / 5), none, 2.38303});
        v.push_back({"double cone", make_double_cone(1, 1, pi / 3), none, 3.00582});
        v.push_back({"double cone", make_double_cone(1, 1, pi / 4), none, 4.00593});
        v.push_back({"double cone", make_double_cone(1, 1, pi / 6), none, 5.75003});

        v.push_back({"cone", make_cone(4, std::asin(0.6)), none, 1.69452});
        v.push_back({"cone", make_cone(3, std::asin(0.8)), none, 1.71916});
        v.push_back({"cone", make_cone(1, pi / 3), none, 4.6575});
        v.push_back({"cone", make_cone(1, pi / 4), none, 5.86018});
        v.push_back({"cone", make_cone(1, pi / 6), none, 7.85898});
        return v;
    }();
    return entries;
}

} // namespace cheeger::app
