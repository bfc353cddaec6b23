#pragma once

#include "qfisher/parallel.hpp"
#include "qfisher/quadrature.hpp"
#include "qfisher/systems.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qfisher {

/// Closed-form pair I_rho = 4/n^2, I_gamma = 2 n^2 (product 8 for every n).
/// Hydrogen only; the well has no closed forms here and is checked through
/// the reciprocity routes below.
struct FisherPair {
    double i_rho = 0.0;
    double i_gamma = 0.0;
};

FisherPair fisher_closed_hydrogen(int n);

/// Position-space Fisher information by quadrature. For real bound states
/// rho'^2 / rho == 4 psi'^2, which stays finite across the nodes of psi, so
/// that is the integrand used.
IntegralResult fisher_position(const BoundState& state, const QuadratureConfig& config = {});

/// Momentum-space Fisher information by quadrature. Hydrogen integrates
/// gamma'^2 / gamma with the analytic derivative of the Lorentzian-squared
/// density; the well goes through the position route below.
IntegralResult fisher_momentum(const BoundState& state, const QuadratureConfig& config = {});

/// Well I_gamma as 4 <x^2>: for a real wavefunction with <x> = 0 the momentum
/// Fisher information reduces to the position variance.
IntegralResult well_fisher_momentum_via_position(int n, double a,
                                                 const QuadratureConfig& config = {});

/// Independent cross-check of the reduction above: samples the momentum
/// amplitude by numerical Fourier transform on a dense grid, differentiates
/// it with a five-point stencil, and integrates 4 phi'^2 by Simpson's rule.
/// A few parts in 1e5 relative accuracy (grid spacing 0.01/a, cutoff 240/a).
struct WellMomentumDirect {
    double value = 0.0;
    bool converged = false; // all transform samples converged
};

WellMomentumDirect well_fisher_momentum_direct(int n, double a,
                                               const QuadratureConfig& config = {},
                                               ExecutionMode mode = ExecutionMode::Parallel);

/// int psi_n psi_n' dx over the shared support; delta_{nn'} for exact states.
IntegralResult position_overlap(const BoundState& s1, const BoundState& s2,
                                const QuadratureConfig& config = {});

/// int conj(Phi_n) Phi_n' dp over the whole line (hydrogen momentum states).
ComplexIntegralResult momentum_overlap(int n1, int n2, const QuadratureConfig& config = {});

/// Which representation an orthonormality check integrates over.
enum class Space { Position, Momentum };

/// Real part of <n | n_prime> in the requested space, close to the Kronecker
/// delta for exact states. `like` supplies the system kind and width; its own
/// quantum number is ignored. Momentum space is hydrogen only.
double orthonormality_check(int n, int n_prime, Space space, const BoundState& like,
                            const QuadratureConfig& config = {});

/// Numerical momentum amplitudes on a p grid, one Fourier transform per
/// sample. Hydrogen transforms over (0, x_max); the well over the box.
std::vector<ComplexIntegralResult> hydrogen_phi_numeric_grid(int n, std::span<const double> ps,
                                                             const QuadratureConfig& config = {},
                                                             ExecutionMode mode = ExecutionMode::Parallel);

std::vector<ComplexIntegralResult> well_phi_numeric_grid(int n, double a,
                                                         std::span<const double> ps,
                                                         const QuadratureConfig& config = {},
                                                         ExecutionMode mode = ExecutionMode::Parallel);

/// Everything the table and verification paths need for one state. Closed
/// forms exist for hydrogen only, so those fields are empty for the well and
/// the discrepancy then covers no pairs (it stays 0).
struct FisherReport {
    BoundState state;
    double energy = 0.0;
    double i_rho_numeric = 0.0;
    std::optional<double> i_rho_closed;
    double i_gamma_numeric = 0.0;
    std::optional<double> i_gamma_closed;
    double product = 0.0;             // i_rho_numeric * i_gamma_numeric
    double max_abs_discrepancy = 0.0; // worst |numeric - closed| of the pairs present
    bool converged = false;
};

FisherReport build_report(const BoundState& state, const QuadratureConfig& config = {});

/// Batch of reports, one state per loop iteration.
std::vector<FisherReport> build_reports(std::span<const BoundState> states,
                                        const QuadratureConfig& config = {},
                                        ExecutionMode mode = ExecutionMode::Parallel);

} // namespace qfisher
