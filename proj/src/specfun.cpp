#include "qfisher/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfisher {

namespace {

void check_index(const PolyIndex& idx) {
    if (idx.m < 0) throw std::invalid_argument("laguerre: degree m must be >= 0");
    if (!(idx.beta > -1.0)) throw std::invalid_argument("laguerre: beta must be > -1");
}

} // namespace

double laguerre(const PolyIndex& idx, double x) {
    check_index(idx);
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre: x must be finite");

    if (idx.m == 0) return 1.0;
    double lm1 = 1.0;                   // L_0
    double lm = 1.0 + idx.beta - x;     // L_1
    for (int k = 1; k < idx.m; ++k) {
        const double next = ((2.0 * k + 1.0 + idx.beta - x) * lm - (k + idx.beta) * lm1) / (k + 1.0);
        lm1 = lm;
        lm = next;
    }
    return lm;
}

double laguerre_rodrigues_oracle(const PolyIndex& idx, double x) {
    check_index(idx);
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre_rodrigues_oracle: x must be finite");
    const double beta_rounded = std::nearbyint(idx.beta);
    if (idx.beta != beta_rounded || idx.beta < 0.0)
        throw std::invalid_argument("laguerre_rodrigues_oracle: beta must be a nonnegative integer");
    if (idx.m > 12)
        throw std::invalid_argument("laguerre_rodrigues_oracle: degree " + std::to_string(idx.m) +
                                    " exceeds oracle cap 12");

    const int m = idx.m;
    const int beta = static_cast<int>(beta_rounded);

    // Coefficients of Q in d^m/dx^m (e^{-x} x^{m+beta}) = e^{-x} Q(x),
    // built by applying Q <- Q' - Q m times. Exact in int64 for m <= 12.
    std::vector<std::int64_t> q(static_cast<std::size_t>(m + beta) + 1, 0);
    q[static_cast<std::size_t>(m + beta)] = 1;
    for (int step = 0; step < m; ++step) {
        std::vector<std::int64_t> next(q.size(), 0);
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (q[j] == 0) continue;
            if (j > 0) next[j - 1] += q[j] * static_cast<std::int64_t>(j);
            next[j] -= q[j];
        }
        q.swap(next);
    }

    // L_m^{(beta)}(x) = x^{-beta} e^x e^{-x} Q(x) / m!; Q has no terms below x^beta.
    double mfact = 1.0;
    for (int k = 2; k <= m; ++k) mfact *= k;

    double value = 0.0;
    for (std::size_t j = q.size(); j-- > static_cast<std::size_t>(beta);) {
        value = value * x + static_cast<double>(q[j]);
    }
    return value / mfact;
}

double laguerre_derivative(const PolyIndex& idx, double x) {
    check_index(idx);
    if (!std::isfinite(x)) throw std::invalid_argument("laguerre_derivative: x must be finite");
    if (idx.m == 0) return 0.0;
    return -laguerre({idx.m - 1, idx.beta + 1.0}, x);
}

double kummer_m(const KummerParams& params) {
    if (params.max_terms < 1) throw std::invalid_argument("kummer_m: max_terms must be >= 1");
    if (!(params.series_tol > 0.0)) throw std::invalid_argument("kummer_m: series_tol must be > 0");
    const double b_rounded = std::nearbyint(params.b);
    if (params.b == b_rounded && params.b <= 0.0)
        throw std::invalid_argument("kummer_m: b must not be a nonpositive integer");

    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < params.max_terms; ++k) {
        const double ratio_num = params.a + k;
        if (ratio_num == 0.0) return sum;   // polynomial case: series terminates
        term *= ratio_num / (params.b + k) * params.x / (k + 1.0);
        sum += term;
        if (std::abs(term) <= params.series_tol * std::abs(sum)) return sum;
    }
    throw std::runtime_error("kummer_m: no convergence within max_terms");
}

} // namespace qfisher
