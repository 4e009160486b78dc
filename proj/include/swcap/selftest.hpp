#pragma once
// Reference instances with known values, shared by the CLI selftest and the
// acceptance suite.

#include <string>
#include <vector>

#include "swcap/graph.hpp"
#include "swcap/sw.hpp"

namespace swcap {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// det 2 base graph with s = (15, 14); CAP fails.
PlumbingGraph cap_fail_base();
/// Its universal abelian cover, 8 vertices, s_0 = 21.
PlumbingGraph cap_fail_cover();
/// det 2 base graph with s = (147, 132); CAP holds.
PlumbingGraph cap_hold_base();
/// Its universal abelian cover, 10 vertices, s_0 = 279.
PlumbingGraph cap_hold_cover();

CheckResult check_three_knot_surgery(SWEngine& engine);
CheckResult check_cap_failure(SWEngine& engine);
CheckResult check_cap_success(SWEngine& engine);
CheckResult check_t34_surgery(SWEngine& engine);
CheckResult check_t27_surgery(SWEngine& engine);
CheckResult check_alexander();

/// All of the above, in order.
std::vector<CheckResult> reference_checks();

}  // namespace swcap
