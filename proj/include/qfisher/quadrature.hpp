#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace qfisher {

/// Tolerances and panel parameters shared by all integrals.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int panel_order = 15;   // Gauss-Legendre nodes per panel, >= 5
    int max_depth = 30;     // bisection depth per panel
    int max_panels = 20000; // hard cap; exceeding it reports converged=false
};

/// Finite interval, half-line [a, inf), or the whole real line.
/// Infinite pieces are mapped to a finite parameter interval by a rational
/// substitution before any panel is laid down.
struct IntegrationDomain {
    enum class Kind { Finite, SemiInfinite, WholeLine };
    Kind kind = Kind::Finite;
    double a = 0.0;
    double b = 0.0;

    static IntegrationDomain finite(double a, double b);
    static IntegrationDomain semi_infinite(double a);
    static IntegrationDomain whole_line();
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int panels_used = 0;
};

/// Result of a complex-valued transform evaluated as two real integrals.
struct ComplexIntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    bool converged = false;
    int panels_used = 0;
};

/// Adaptive nested-Gauss integration. The error estimate per panel is the
/// difference between the panel_order rule and an embedded half-order rule;
/// panels are bisected worst-first until the global estimate meets
/// max(abs_tol, rel_tol*|value|) or the depth/panel budget runs out.
/// Non-convergence is reported through the flag, never silently.
/// A non-finite integrand sample raises std::runtime_error naming the abscissa.
IntegralResult integrate(const std::function<double(double)>& f,
                         const IntegrationDomain& domain,
                         const QuadratureConfig& config = {});

/// Same engine with caller-supplied split points (original coordinates).
/// Used by the Fourier path to keep each panel under half an oscillation.
IntegralResult integrate(const std::function<double(double)>& f,
                         const IntegrationDomain& domain,
                         const QuadratureConfig& config,
                         std::span<const double> breakpoints);

/// (1/sqrt(2*pi)) int e^{-i p x} psi(x) dx with hbar = 1, evaluated as
/// separate cosine and sine integrals over the given domain. Panels are
/// pre-split so none spans more than pi/|p| in x.
ComplexIntegralResult fourier_transform_numeric(const std::function<double(double)>& psi,
                                                double p,
                                                const IntegrationDomain& domain,
                                                const QuadratureConfig& config = {});

namespace detail {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

/// Single-panel application of a rule to f on [lo, hi].
double apply_rule(const std::function<double(double)>& f, double lo, double hi,
                  const GaussRule& rule);

} // namespace detail

} // namespace qfisher
