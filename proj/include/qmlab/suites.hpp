#pragma once

#include "qmlab/criteria.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qm {

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names(); // without "all"
bool is_suite_name(const std::string& name);   // including "all"

SuiteReport run_suite(const std::string& name, std::uint64_t seed);
// "all" expands to every suite; suites run concurrently unless serial.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, bool serial);

} // namespace qm
