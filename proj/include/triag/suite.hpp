#pragma once

#include <ostream>

#include "triag/catalog.hpp"

namespace triag {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::uint32_t trials = 5;
    ExecMode exec = ExecMode::Serial;
    // count-only runs of the maximal extension at M = 10..13
    bool include_slow = false;
    // when set, one line per criterion is streamed as it finishes
    std::ostream* progress = nullptr;
};

// Runs the full verification battery; every check is exact. Returns one
// result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace triag
