#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ingleton/sampling.hpp"

namespace ingleton::verify {

struct SuiteOptions {
    std::uint64_t seed = sampling::kDefaultSeed;
    /// Multiplies every sample count (1.0 = the full audit).
    double scale = 1.0;
};

/// Outcome of one named property audit inside a suite.
struct Check {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;  // first few failure messages
    bool advisory = false;              // reported, does not fail the suite
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;
};

SuiteReport shannon_suite(const SuiteOptions& options = {});
SuiteReport mixing_suite(const SuiteOptions& options = {});
SuiteReport splitter_suite(const SuiteOptions& options = {});
SuiteReport bounds_suite(const SuiteOptions& options = {});

/// Errors: InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace ingleton::verify
