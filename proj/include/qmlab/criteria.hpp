#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qm {

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct Check {
    std::string id;
    Status status = Status::skip;
    std::string detail;
    double ms = 0;
};

struct Outcome {
    bool ok = false;
    std::string detail;
};

// Runs fn, timing it and turning exceptions into failures; a run slower than
// budget_ms also fails.
Check timed_check(const std::string& id, const std::function<Outcome()>& fn, double budget_ms = 0);

constexpr std::uint64_t default_seed = 20240611;

struct Criterion {
    int number = 0;
    std::string title;
    std::string tolerance;
    double budget_ms = 0;
    std::function<Outcome(std::uint64_t seed)> run;
};
const std::vector<Criterion>& acceptance_criteria();
Check run_criterion(const Criterion& c, std::uint64_t seed);

} // namespace qm
