#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tropfrieze {

struct SuiteReport {
    std::string suite;
    std::vector<std::string> types;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> details;  // failure descriptions, then informational lines
    bool ok() const { return failures == 0; }
};

struct VerifyOptions {
    std::vector<std::string> types;  // empty selects the suite's default list
    std::size_t trials = 0;          // zero selects the suite's default count
    std::uint64_t seed = 1;
    std::size_t depth = 16;
};

std::vector<std::string> suite_names();
// Types and trial count used when the options leave them unset.
std::vector<std::string> default_suite_types(const std::string& suite);
std::size_t default_suite_trials(const std::string& suite);

// Runs one suite; independent (type, trial) batches run concurrently and are merged in input order.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace tropfrieze
