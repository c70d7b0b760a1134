#pragma once

#include <cstdint>

#include <json.hpp>

#include "weyl.hpp"

namespace weylfold {

// Runs the full acceptance battery: one entry per criterion with a pass flag
// and a short deterministic detail string. The last criterion re-runs the
// battery and checks the serialized report is byte-identical.
nlohmann::json selftest_report(std::uint64_t seed,
                               unsigned long long budget = kDefaultOrderBudget);

}  // namespace weylfold
