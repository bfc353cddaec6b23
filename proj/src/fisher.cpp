#include "qfisher/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qfisher {

namespace {

IntegrationDomain hydrogen_domain(int n) {
    return IntegrationDomain::finite(0.0, hydrogen_x_max(n));
}

IntegrationDomain well_domain(double a) {
    return IntegrationDomain::finite(-0.5 * a, 0.5 * a);
}

} // namespace

FisherPair fisher_closed_hydrogen(int n) {
    if (n < 1) throw std::invalid_argument("fisher_closed_hydrogen: n must be >= 1");
    const double nn = static_cast<double>(n) * n;
    return {4.0 / nn, 2.0 * nn};
}

IntegralResult fisher_position(const BoundState& state, const QuadratureConfig& config) {
    if (state.kind == SystemKind::Hydrogen) {
        const int n = state.n;
        return integrate(
            [n](double x) {
                const double d = hydrogen_psi_derivative(n, x);
                return 4.0 * d * d;
            },
            hydrogen_domain(n), config);
    }
    const int n = state.n;
    const double a = state.width;
    return integrate(
        [n, a](double x) {
            const double d = well_psi_derivative(n, a, x);
            return 4.0 * d * d;
        },
        well_domain(a), config);
}

IntegralResult fisher_momentum(const BoundState& state, const QuadratureConfig& config) {
    if (state.kind == SystemKind::Well)
        return well_fisher_momentum_via_position(state.n, state.width, config);

    // gamma = (2n/pi) s^{-2} with s = 1 + n^2 p^2, so
    // gamma'^2 / gamma = 32 n^5 p^2 / (pi s^4): smooth, even, O(p^{-6}) tail.
    const double n = state.n;
    return integrate(
        [n](double p) {
            const double np = n * p;
            const double s = 1.0 + np * np;
            return 32.0 * n * n * n * n * n * p * p / (std::numbers::pi * s * s * s * s);
        },
        IntegrationDomain::whole_line(), config);
}

IntegralResult well_fisher_momentum_via_position(int n, double a,
                                                 const QuadratureConfig& config) {
    return integrate(
        [n, a](double x) {
            const double psi = well_psi(n, a, x);
            return 4.0 * x * x * psi * psi;
        },
        well_domain(a), config);
}

WellMomentumDirect well_fisher_momentum_direct(int n, double a, const QuadratureConfig& config,
                                               ExecutionMode mode) {
    // Sample the real transform component on [0, P + 2h]; parity supplies the
    // ghost points below p = 0. Odd n gives an even real amplitude, even n an
    // odd imaginary one; either way 4 phi'^2 is even in p. The integrand tail
    // falls off like n^2/p^4, so P = 240/a keeps the truncation near 1e-5
    // relative through n = 4.
    const double cutoff = 240.0 / a;
    const double h = 0.01 / a;
    const std::size_t grid_count = static_cast<std::size_t>(std::llround(cutoff / h)) + 1;
    const bool odd_n = (n % 2 == 1);

    std::vector<double> amp(grid_count + 2, 0.0);
    std::vector<char> ok(grid_count + 2, 0);
    parallel_for(grid_count + 2, mode, [&](std::size_t j) {
        const double p = static_cast<double>(j) * h;
        const ComplexIntegralResult phi = fourier_transform_numeric(
            [n, a](double x) { return well_psi(n, a, x); }, p, well_domain(a), config);
        amp[j] = odd_n ? phi.value.real() : phi.value.imag();
        ok[j] = phi.converged ? 1 : 0;
    });

    const double parity = odd_n ? 1.0 : -1.0;
    auto at = [&](long long j) { return j >= 0 ? amp[static_cast<std::size_t>(j)]
                                               : parity * amp[static_cast<std::size_t>(-j)]; };
    auto integrand = [&](long long j) {
        const double d =
            (at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2)) / (12.0 * h);
        return 4.0 * d * d;
    };

    // Composite Simpson over [0, cutoff], doubled for the negative half line.
    double simpson = integrand(0) + integrand(static_cast<long long>(grid_count) - 1);
    for (std::size_t j = 1; j + 1 < grid_count; ++j)
        simpson += (j % 2 == 1 ? 4.0 : 2.0) * integrand(static_cast<long long>(j));

    WellMomentumDirect result;
    result.value = 2.0 * simpson * h / 3.0;
    result.converged = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return result;
}

IntegralResult position_overlap(const BoundState& s1, const BoundState& s2,
                                const QuadratureConfig& config) {
    if (s1.kind != s2.kind)
        throw std::invalid_argument("position_overlap: states belong to different systems");
    if (s1.kind == SystemKind::Hydrogen) {
        const int n1 = s1.n;
        const int n2 = s2.n;
        return integrate(
            [n1, n2](double x) { return hydrogen_psi(n1, x) * hydrogen_psi(n2, x); },
            hydrogen_domain(std::max(n1, n2)), config);
    }
    if (s1.width != s2.width)
        throw std::invalid_argument("position_overlap: well states need a common width");
    const int n1 = s1.n;
    const int n2 = s2.n;
    const double a = s1.width;
    return integrate(
        [n1, n2, a](double x) { return well_psi(n1, a, x) * well_psi(n2, a, x); },
        well_domain(a), config);
}

ComplexIntegralResult momentum_overlap(int n1, int n2, const QuadratureConfig& config) {
    const IntegralResult re = integrate(
        [n1, n2](double p) {
            return (std::conj(hydrogen_phi(n1, p)) * hydrogen_phi(n2, p)).real();
        },
        IntegrationDomain::whole_line(), config);
    const IntegralResult im = integrate(
        [n1, n2](double p) {
            return (std::conj(hydrogen_phi(n1, p)) * hydrogen_phi(n2, p)).imag();
        },
        IntegrationDomain::whole_line(), config);

    ComplexIntegralResult result;
    result.value = {re.value, im.value};
    result.error_estimate = re.error_estimate + im.error_estimate;
    result.converged = re.converged && im.converged;
    result.panels_used = re.panels_used + im.panels_used;
    return result;
}

double orthonormality_check(int n, int n_prime, Space space, const BoundState& like,
                            const QuadratureConfig& config) {
    if (space == Space::Momentum) {
        if (like.kind != SystemKind::Hydrogen)
            throw std::invalid_argument("orthonormality_check: momentum space is hydrogen only");
        return momentum_overlap(n, n_prime, config).value.real();
    }
    const BoundState a = (like.kind == SystemKind::Hydrogen) ? BoundState::hydrogen(n)
                                                             : BoundState::well(n, like.width);
    const BoundState b = (like.kind == SystemKind::Hydrogen)
                             ? BoundState::hydrogen(n_prime)
                             : BoundState::well(n_prime, like.width);
    return position_overlap(a, b, config).value;
}

std::vector<ComplexIntegralResult> hydrogen_phi_numeric_grid(int n, std::span<const double> ps,
                                                             const QuadratureConfig& config,
                                                             ExecutionMode mode) {
    std::vector<ComplexIntegralResult> out(ps.size());
    parallel_for(ps.size(), mode, [&](std::size_t i) {
        out[i] = fourier_transform_numeric([n](double x) { return hydrogen_psi(n, x); }, ps[i],
                                           hydrogen_domain(n), config);
    });
    return out;
}

std::vector<ComplexIntegralResult> well_phi_numeric_grid(int n, double a,
                                                         std::span<const double> ps,
                                                         const QuadratureConfig& config,
                                                         ExecutionMode mode) {
    std::vector<ComplexIntegralResult> out(ps.size());
    parallel_for(ps.size(), mode, [&](std::size_t i) {
        out[i] = fourier_transform_numeric([n, a](double x) { return well_psi(n, a, x); }, ps[i],
                                           well_domain(a), config);
    });
    return out;
}

FisherReport build_report(const BoundState& state, const QuadratureConfig& config) {
    FisherReport report;
    report.state = state;
    report.energy = (state.kind == SystemKind::Hydrogen) ? hydrogen_energy(state.n)
                                                         : well_energy(state.n, state.width);

    const IntegralResult pos = fisher_position(state, config);
    const IntegralResult mom = fisher_momentum(state, config);

    report.i_rho_numeric = pos.value;
    report.i_gamma_numeric = mom.value;
    report.product = pos.value * mom.value;
    if (state.kind == SystemKind::Hydrogen) {
        const FisherPair closed = fisher_closed_hydrogen(state.n);
        report.i_rho_closed = closed.i_rho;
        report.i_gamma_closed = closed.i_gamma;
        report.max_abs_discrepancy = std::max(std::abs(pos.value - closed.i_rho),
                                              std::abs(mom.value - closed.i_gamma));
    }
    report.converged = pos.converged && mom.converged;
    return report;
}

std::vector<FisherReport> build_reports(std::span<const BoundState> states,
                                        const QuadratureConfig& config, ExecutionMode mode) {
    std::vector<FisherReport> out(states.size());
    parallel_for(states.size(), mode,
                 [&](std::size_t i) { out[i] = build_report(states[i], config); });
    return out;
}

} // namespace qfisher
