#pragma once

#include <string>
#include <vector>

#include "jbt/chains.hpp"

namespace jbt {

// One expected relation verdict inside a fixture.
struct RelationCheck {
    std::string name;
    RelationKind kind;
    Element u;
    Element e;
    bool expected;
};

struct TripotencyCheck {
    std::string name;
    Element x;
    bool expected;
};

// Expected outcome of a chain construction, with an optional length cap.
struct CertCheck {
    std::string name;
    ChainClaim claim;
    Element u;
    Element e;
    bool expectSuccess;
    int maxLength;  // -1: no bound asserted
};

struct FixtureCase {
    std::string id;
    std::string note;
    std::vector<RelationCheck> relations;
    std::vector<TripotencyCheck> tripotency;
    std::vector<CertCheck> certs;
};

// The bundled reference cases: concrete small tripotent pairs whose
// relation patterns separate the eleven relations and exhibit the
// non-transitive ones.
const std::vector<FixtureCase>& fixture_registry();

struct CheckResult {
    std::string name;
    bool expected = false;
    bool got = false;
    double residual = 0.0;

    bool pass() const { return expected == got; }
};

struct FixtureCaseResult {
    std::string id;
    bool pass = true;
    double maxResidual = 0.0;
    std::vector<CheckResult> checks;
};

struct FixtureSuiteReport {
    bool allPass = true;
    double maxResidual = 0.0;
    std::vector<FixtureCaseResult> cases;
};

FixtureCaseResult run_fixture(const FixtureCase& fc);
FixtureSuiteReport run_fixture_suite();

} // namespace jbt
