#pragma once

#include "qfisher/fisher.hpp"
#include "qfisher/verify.hpp"

#include <span>
#include <string>
#include <vector>

namespace qfisher {

/// Uniform sample grid for figure output: points values from min to max
/// inclusive, points >= 2.
struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
};

/// Fixed header: n,energy,i_rho_numeric,i_rho_closed,i_gamma_numeric,
/// i_gamma_closed,product,discrepancy,converged. Floats carry 17 significant
/// digits so identical runs diff clean.
std::string table_to_csv(std::span<const FisherReport> reports);

/// Same table as a JSON document {"system", "width", "reports": [...]}.
std::string table_to_json(std::span<const FisherReport> reports);

/// Position-space figure samples: columns x, psi_<n> per requested state.
std::string figure_position_csv(SystemKind kind, double width, std::span<const int> ns,
                                const GridSpec& grid);

/// Momentum-space figure samples for p >= 0: columns p, re_phi_<n>,
/// im_phi_<n>. Hydrogen uses the closed amplitude; the well samples the
/// numerical transform, so quadrature settings apply there and
/// all_converged (when given) reports whether every sample converged.
std::string figure_momentum_csv(SystemKind kind, double width, std::span<const int> ns,
                                const GridSpec& grid, const QuadratureConfig& config = {},
                                ExecutionMode mode = ExecutionMode::Parallel,
                                bool* all_converged = nullptr);

/// One line per check plus a summary line; failures carry FAIL and the name.
std::string checks_to_text(const std::vector<CheckResult>& checks);

/// {"all_passed": bool, "checks": [{name, passed, worst, tolerance, detail}]}.
std::string checks_to_json(const std::vector<CheckResult>& checks);

/// 17-significant-digit decimal form of v (%.17g).
std::string format_double(double v);

} // namespace qfisher
