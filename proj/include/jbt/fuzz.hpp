#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jbt/chains.hpp"

namespace jbt {

struct FuzzConfig {
    std::vector<Kind> families{Kind::Full, Kind::Symmetric, Kind::Antisymmetric,
                               Kind::Spin};
    std::uint64_t seedBegin = 0;
    std::uint64_t seedEnd = 100;  // half-open
    int maxDim = 6;
    double tol = 1e-9;
};

// Aggregated counters of a seeded sweep. Each seed draws a system and a
// tripotent pair per family and checks:
//   * the eleven verdicts respect the implication lattice,
//   * SIM_H agrees with both halves (e +- u)/2 being tripotents,
//   * LE_N pairs have u ~_2 {u, u, e},
//   * nested projection pairs collapse all eleven relations,
//   * LE_2 pairs admit verified cert_nt and cert_hct chains within bounds.
struct FuzzReport {
    std::uint64_t pairs = 0;
    std::uint64_t latticeViolations = 0;
    std::uint64_t simhWitnessMismatches = 0;
    std::uint64_t lenWitnessMismatches = 0;
    std::uint64_t projectionViolations = 0;
    std::uint64_t certFailures = 0;
    std::uint64_t chainsBuilt = 0;
    int maxChainLength = 0;
    std::vector<std::string> diagnostics;  // first few failures, verbatim

    bool clean() const {
        return latticeViolations == 0 && simhWitnessMismatches == 0 &&
               lenWitnessMismatches == 0 && projectionViolations == 0 &&
               certFailures == 0;
    }
};

// Deterministic: the report depends only on the config.
FuzzReport run_fuzz(const FuzzConfig& cfg);

} // namespace jbt
