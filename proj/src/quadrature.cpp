#include "qfisher/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace qfisher {

IntegrationDomain IntegrationDomain::finite(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw std::invalid_argument("IntegrationDomain::finite: need finite a < b");
    return {Kind::Finite, a, b};
}

IntegrationDomain IntegrationDomain::semi_infinite(double a) {
    if (!std::isfinite(a))
        throw std::invalid_argument("IntegrationDomain::semi_infinite: a must be finite");
    return {Kind::SemiInfinite, a, 0.0};
}

IntegrationDomain IntegrationDomain::whole_line() {
    return {Kind::WholeLine, 0.0, 0.0};
}

namespace detail {

GaussRule gauss_legendre(int order) {
    if (order < 2 || order > 101)
        throw std::invalid_argument("gauss_legendre: order out of range [2, 101]");

    GaussRule rule;
    rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
    rule.weights.assign(static_cast<std::size_t>(order), 0.0);

    const int half = (order + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        // Chebyshev-based starting guess for the i-th root, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = z;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        if (std::abs(z) < 1e-12) z = 0.0; // middle root of odd orders
        rule.nodes[static_cast<std::size_t>(i - 1)] = -z;
        rule.nodes[static_cast<std::size_t>(order - i)] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<std::size_t>(i - 1)] = w;
        rule.weights[static_cast<std::size_t>(order - i)] = w;
    }
    return rule;
}

double apply_rule(const std::function<double(double)>& f, double lo, double hi,
                  const GaussRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double halfwidth = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + halfwidth * rule.nodes[i]);
    return sum * halfwidth;
}

} // namespace detail

namespace {

constexpr int kInitialSplit = 8;      // uniform panels when no breakpoints given
constexpr int kMaxBreakpoints = 4096; // cap on caller/oscillation split points

void check_config(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (cfg.panel_order < 5)
        throw std::invalid_argument("QuadratureConfig: panel_order must be >= 5");
    if (cfg.max_depth < 1 || cfg.max_panels < 1)
        throw std::invalid_argument("QuadratureConfig: depth and panel budget must be positive");
}

/// Transformed integrand g(t) = f(x(t)) * x'(t) on a finite t-interval.
/// Finite:       x = t                      on (a, b)
/// SemiInfinite: x = a + t/(1-t)            on (0, 1)
/// WholeLine:    x = t/(1-t^2)              on (-1, 1)
struct MappedIntegrand {
    const std::function<double(double)>* f = nullptr;
    IntegrationDomain domain;
    double t_lo = 0.0;
    double t_hi = 0.0;

    explicit MappedIntegrand(const std::function<double(double)>& fn,
                             const IntegrationDomain& dom)
        : f(&fn), domain(dom) {
        switch (domain.kind) {
            case IntegrationDomain::Kind::Finite:
                t_lo = domain.a;
                t_hi = domain.b;
                break;
            case IntegrationDomain::Kind::SemiInfinite:
                t_lo = 0.0;
                t_hi = 1.0;
                break;
            case IntegrationDomain::Kind::WholeLine:
                t_lo = -1.0;
                t_hi = 1.0;
                break;
        }
    }

    double x_of_t(double t) const {
        switch (domain.kind) {
            case IntegrationDomain::Kind::Finite: return t;
            case IntegrationDomain::Kind::SemiInfinite: return domain.a + t / (1.0 - t);
            case IntegrationDomain::Kind::WholeLine: return t / (1.0 - t * t);
        }
        return t;
    }

    /// Inverse of x_of_t, used to place breakpoints given in x coordinates.
    double t_of_x(double x) const {
        switch (domain.kind) {
            case IntegrationDomain::Kind::Finite:
                return x;
            case IntegrationDomain::Kind::SemiInfinite: {
                const double u = x - domain.a;
                return u / (1.0 + u);
            }
            case IntegrationDomain::Kind::WholeLine: {
                if (x == 0.0) return 0.0;
                return (std::sqrt(1.0 + 4.0 * x * x) - 1.0) / (2.0 * x);
            }
        }
        return x;
    }

    double operator()(double t) const {
        double x = 0.0;
        double jac = 1.0;
        switch (domain.kind) {
            case IntegrationDomain::Kind::Finite:
                x = t;
                break;
            case IntegrationDomain::Kind::SemiInfinite: {
                const double s = 1.0 - t;
                x = domain.a + t / s;
                jac = 1.0 / (s * s);
                break;
            }
            case IntegrationDomain::Kind::WholeLine: {
                const double s = 1.0 - t * t;
                x = t / s;
                jac = (1.0 + t * t) / (s * s);
                break;
            }
        }
        const double fx = (*f)(x);
        if (!std::isfinite(fx))
            throw std::runtime_error("integrate: non-finite integrand sample at x = " +
                                     std::to_string(x));
        const double g = fx * jac;
        if (!std::isfinite(g))
            throw std::runtime_error("integrate: non-finite transformed sample at x = " +
                                     std::to_string(x));
        return g;
    }
};

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;   // fine-rule estimate
    double error = 0.0;   // |fine - coarse|
    double abs_sum = 0.0; // fine-rule estimate of int |g|, for the rounding floor
    int depth = 0;
    bool alive = true;
};

struct HeapEntry {
    double error = 0.0;
    double lo = 0.0;
    std::size_t index = 0;
};

/// Worst error first; ties go to the leftmost panel so refinement order is
/// deterministic.
struct HeapOrder {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;
    }
};

Panel make_panel(const MappedIntegrand& g, double lo, double hi, int depth,
                 const detail::GaussRule& fine, const detail::GaussRule& coarse) {
    Panel panel;
    panel.lo = lo;
    panel.hi = hi;
    panel.depth = depth;

    const double mid = 0.5 * (lo + hi);
    const double halfwidth = 0.5 * (hi - lo);
    double fine_sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
        const double gi = g(mid + halfwidth * fine.nodes[i]);
        fine_sum += fine.weights[i] * gi;
        abs_sum += fine.weights[i] * std::abs(gi);
    }
    double coarse_sum = 0.0;
    for (std::size_t i = 0; i < coarse.nodes.size(); ++i)
        coarse_sum += coarse.weights[i] * g(mid + halfwidth * coarse.nodes[i]);

    panel.value = fine_sum * halfwidth;
    panel.abs_sum = abs_sum * halfwidth;
    panel.error = std::abs((fine_sum - coarse_sum) * halfwidth);
    return panel;
}

/// Initial split points in t: the uniform grid merged with mapped breakpoints,
/// deduplicated against each other and the interval ends.
std::vector<double> initial_edges(const MappedIntegrand& g,
                                  std::span<const double> breakpoints) {
    std::vector<double> edges;
    edges.push_back(g.t_lo);
    for (int i = 1; i < kInitialSplit; ++i)
        edges.push_back(g.t_lo + (g.t_hi - g.t_lo) * i / kInitialSplit);

    int used = 0;
    for (double x : breakpoints) {
        if (used >= kMaxBreakpoints) break;
        const double t = g.t_of_x(x);
        if (t > g.t_lo && t < g.t_hi) {
            edges.push_back(t);
            ++used;
        }
    }
    edges.push_back(g.t_hi);
    std::sort(edges.begin(), edges.end());

    const double min_gap = 1e-12 * (g.t_hi - g.t_lo);
    std::vector<double> kept;
    kept.push_back(edges.front());
    for (std::size_t i = 1; i + 1 < edges.size(); ++i)
        if (edges[i] - kept.back() > min_gap) kept.push_back(edges[i]);
    if (g.t_hi - kept.back() > min_gap)
        kept.push_back(g.t_hi);
    else
        kept.back() = g.t_hi;
    return kept;
}

IntegralResult integrate_mapped(const MappedIntegrand& g, const QuadratureConfig& cfg,
                                std::span<const double> breakpoints) {
    const detail::GaussRule fine = detail::gauss_legendre(cfg.panel_order);
    const detail::GaussRule coarse = detail::gauss_legendre(std::max(2, cfg.panel_order / 2));

    std::vector<Panel> panels;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> worklist;

    double total_value = 0.0;
    double total_error = 0.0;
    double total_abs = 0.0;
    int alive = 0;

    const std::vector<double> edges = initial_edges(g, breakpoints);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = make_panel(g, edges[i], edges[i + 1], 0, fine, coarse);
        total_value += p.value;
        total_error += p.error;
        total_abs += p.abs_sum;
        panels.push_back(p);
        worklist.push({p.error, p.lo, panels.size() - 1});
        ++alive;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    auto met = [&](double value, double error, double abs_sum) {
        return error + 2.0 * eps * abs_sum <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    };

    while (!worklist.empty() && alive < cfg.max_panels) {
        if (met(total_value, total_error, total_abs)) break;

        const HeapEntry top = worklist.top();
        worklist.pop();
        Panel& parent = panels[top.index];
        if (parent.depth >= cfg.max_depth) continue; // frozen; error stays in the total

        const double mid = 0.5 * (parent.lo + parent.hi);
        Panel left = make_panel(g, parent.lo, mid, parent.depth + 1, fine, coarse);
        Panel right = make_panel(g, mid, parent.hi, parent.depth + 1, fine, coarse);

        total_value += left.value + right.value - parent.value;
        total_error += left.error + right.error - parent.error;
        total_abs += left.abs_sum + right.abs_sum - parent.abs_sum;
        parent.alive = false;

        panels.push_back(left);
        worklist.push({left.error, left.lo, panels.size() - 1});
        panels.push_back(right);
        worklist.push({right.error, right.lo, panels.size() - 1});
        ++alive;
    }

    // Re-sum in left-to-right order so the result is independent of the
    // refinement history that produced the panel set.
    std::vector<const Panel*> final_panels;
    final_panels.reserve(static_cast<std::size_t>(alive));
    for (const Panel& p : panels)
        if (p.alive) final_panels.push_back(&p);
    std::sort(final_panels.begin(), final_panels.end(),
              [](const Panel* a, const Panel* b) { return a->lo < b->lo; });

    double value = 0.0;
    double error = 0.0;
    double abs_sum = 0.0;
    for (const Panel* p : final_panels) {
        value += p->value;
        error += p->error;
        abs_sum += p->abs_sum;
    }

    IntegralResult result;
    result.value = value;
    result.error_estimate = error + 2.0 * eps * abs_sum;
    result.converged = met(value, error, abs_sum);
    result.panels_used = static_cast<int>(final_panels.size());
    return result;
}

/// Split points at multiples of pi/|p| so no panel spans more than half an
/// oscillation of e^{-ipx}. Unbounded domains get a capped ladder and rely on
/// adaptive refinement past it.
std::vector<double> oscillation_breakpoints(double p, const IntegrationDomain& domain) {
    std::vector<double> breaks;
    if (p == 0.0) return breaks;
    const double step = std::numbers::pi / std::abs(p);
    switch (domain.kind) {
        case IntegrationDomain::Kind::Finite:
            for (int k = 1; k <= kMaxBreakpoints; ++k) {
                const double x = domain.a + k * step;
                if (x >= domain.b) break;
                breaks.push_back(x);
            }
            break;
        case IntegrationDomain::Kind::SemiInfinite:
            for (int k = 1; k <= kMaxBreakpoints; ++k)
                breaks.push_back(domain.a + k * step);
            break;
        case IntegrationDomain::Kind::WholeLine:
            for (int k = 1; k <= kMaxBreakpoints / 2; ++k) {
                breaks.push_back(-k * step);
                breaks.push_back(k * step);
            }
            breaks.push_back(0.0);
            break;
    }
    return breaks;
}

} // namespace

IntegralResult integrate(const std::function<double(double)>& f,
                         const IntegrationDomain& domain,
                         const QuadratureConfig& config) {
    return integrate(f, domain, config, {});
}

IntegralResult integrate(const std::function<double(double)>& f,
                         const IntegrationDomain& domain,
                         const QuadratureConfig& config,
                         std::span<const double> breakpoints) {
    check_config(config);
    MappedIntegrand g(f, domain);
    return integrate_mapped(g, config, breakpoints);
}

ComplexIntegralResult fourier_transform_numeric(const std::function<double(double)>& psi,
                                                double p,
                                                const IntegrationDomain& domain,
                                                const QuadratureConfig& config) {
    check_config(config);
    const std::vector<double> breaks = oscillation_breakpoints(p, domain);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);

    const IntegralResult re = integrate(
        [&](double x) { return norm * psi(x) * std::cos(p * x); }, domain, config, breaks);
    const IntegralResult im = integrate(
        [&](double x) { return -norm * psi(x) * std::sin(p * x); }, domain, config, breaks);

    ComplexIntegralResult result;
    result.value = {re.value, im.value};
    result.error_estimate = re.error_estimate + im.error_estimate;
    result.converged = re.converged && im.converged;
    result.panels_used = re.panels_used + im.panels_used;
    return result;
}

} // namespace qfisher
