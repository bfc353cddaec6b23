#pragma once

#include "qfisher/parallel.hpp"
#include "qfisher/quadrature.hpp"

#include <string>
#include <vector>

namespace qfisher {

/// Outcome of one named invariant suite.
struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;     // largest discrepancy observed by the suite
    double tolerance = 0.0; // threshold worst was held against
    std::string detail;     // where the worst case sat, for diagnostics
};

struct VerifyOptions {
    /// Cap for the per-state families (Fourier grid, orthonormality,
    /// residuals, nodes). The closed-form and product sweeps always cover at
    /// least n = 1..20.
    int n_max = 8;

    /// Deliberate defect for exercising the failure path: strips the phase off
    /// the closed-form momentum amplitude inside the Fourier consistency
    /// comparison, which must make that check (and only that check) fail.
    bool fault_real_phi = false;

    QuadratureConfig quad;
    ExecutionMode mode = ExecutionMode::Parallel;
};

/// Runs every suite and reports one CheckResult each, in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace qfisher
