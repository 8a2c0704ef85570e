#pragma once

#include "raney/webs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace raney {

struct VerifyOptions {
    // Ranges for the arithmetic identity suites; the structural suites run
    // at their own fixed ranges (documented per suite below).
    std::uint32_t p_max = 5;
    std::uint32_t r_max = 5;
    std::uint32_t k_max = 8;
    // Ceiling for the brute-force web filters; filter checks that would
    // exceed it are skipped (and the suite detail says how far it got).
    std::uint64_t cap = kDefaultSizeCap;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs every identity, bijection and enumeration cross-check.  Output is
// fully deterministic for fixed options (fixed RNG seed, no timing info).
std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

// "PASS name: detail" / "FAIL name: detail" lines plus a summary line.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace raney
