#pragma once

// The property suite behind `dualramsey verify` and the acceptance binary.
// Cases are drawn from the seed up front and checked in index order; the
// first failing case of a criterion is kept as a replayable dump.

#include <dualramsey/json_io.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dualramsey::verify {

struct Criterion {
    int id;
    const char* name;
};

const std::vector<Criterion>& criteria();

struct CriterionResult {
    int id = 0;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;
    std::optional<Json> counterexample;  // {"criterion", "seed", "case", "message"}
    double seconds = 0;                  // never serialized
    bool passed() const { return cases > 0 && failures == 0; }
};

CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::vector<int>& only = {});

/// Deterministic report: no timings, no paths.
Json report_json(std::uint64_t seed, const std::vector<CriterionResult>& results);
std::string report_table(const std::vector<CriterionResult>& results);

/// Re-runs the single case of a dump; the failure message, or nullopt when it passes.
/// Throws SchemaError for a malformed dump.
std::optional<std::string> replay(const Json& dump);

} // namespace dualramsey::verify
