#pragma once

#include <string>
#include <vector>

#include "srgh/lms.hpp"

namespace srgh {

struct AuditOptions {
    long grid_max = 25;              // integer grid radius for r and |s|
    unsigned long long seed = 0;     // RNG seed for sampled identities
    int samples = 100;               // number of random rational sample points
};

struct AuditFailure {
    std::string point;   // grid point or sample where the check failed
    std::string detail;  // what was expected vs found
};

struct AuditResult {
    std::string id;
    std::string grid;          // human-readable description of the range covered
    long points_checked = 0;
    long applicable = 0;       // points where a conditional clause actually applied
    bool passed = false;
    std::vector<AuditFailure> failures;
};

/** Identifiers of all auditable facts, in execution order. */
std::vector<std::string> audit_ids();

/**
 * Re-verifies one fact of the classification argument over an exhaustive
 * integer grid or a seeded random sample, entirely in exact arithmetic.
 * Unknown ids throw Error.
 */
AuditResult run_audit(const std::string& id, const AuditOptions& opt);

/** Runs every audit in order. */
std::vector<AuditResult> run_all_audits(const AuditOptions& opt);

}  // namespace srgh
