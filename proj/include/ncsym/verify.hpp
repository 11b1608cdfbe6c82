#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncsym {

struct SuiteOptions {
    int max_size = -1; // -1 selects the suite default
    int vars = -1;     // oracle cutoff; -1 means the degree
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string name;
    std::string range;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const noexcept { return failures.empty(); }
};

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

} // namespace ncsym
