#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asai/report.hpp"

namespace asai {

struct SuiteConfig {
    long p = 3;
    int order = 20;
    uint64_t seed = 7;
};

std::vector<std::string> suite_names();
// Runs a named identity suite. Cases run concurrently; rows come back sorted by case index.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace asai
