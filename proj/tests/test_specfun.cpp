#include "qfisher/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace qfisher;

namespace {

const std::vector<double> kXGrid = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};

double binomial(int top, int bottom) {
    double value = 1.0;
    for (int k = 1; k <= bottom; ++k) value *= static_cast<double>(top - bottom + k) / k;
    return value;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

TEST_CASE("laguerre degree zero is identically one") {
    for (double beta : {0.0, 1.0, 2.5}) {
        for (double x : kXGrid) CHECK(laguerre({0, beta}, x) == 1.0);
    }
}

TEST_CASE("laguerre degree one and two against hand-expanded forms") {
    // L_1^{(1)}(x) = 2 - x, L_2^{(1)}(x) = 3 - 3x + x^2/2
    CHECK(laguerre({1, 1.0}, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(laguerre({1, 1.0}, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(laguerre({2, 1.0}, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(laguerre({2, 1.0}, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("laguerre at zero equals the binomial coefficient") {
    for (int m = 0; m <= 12; ++m) {
        for (int beta : {0, 1, 2, 3}) {
            CHECK(close_rel(laguerre({m, static_cast<double>(beta)}, 0.0),
                            binomial(m + beta, m), 1e-12));
        }
    }
}

TEST_CASE("laguerre recurrence matches the Rodrigues expansion") {
    for (int m = 0; m <= 12; ++m) {
        for (double beta : {1.0, 2.0}) {
            for (double x : kXGrid) {
                const double rec = laguerre({m, beta}, x);
                const double rod = laguerre_rodrigues_oracle({m, beta}, x);
                CHECK(close_rel(rec, rod, 1e-10));
            }
        }
    }
}

TEST_CASE("laguerre derivative matches a central difference") {
    const double h = 1e-6;
    for (int m : {1, 2, 5, 9}) {
        for (double x : {0.3, 1.7, 6.0}) {
            const double fd =
                (laguerre({m, 1.0}, x + h) - laguerre({m, 1.0}, x - h)) / (2.0 * h);
            CHECK(close_rel(laguerre_derivative({m, 1.0}, x), fd, 1e-7));
        }
    }
}

TEST_CASE("laguerre derivative of degree one is minus one") {
    CHECK(laguerre_derivative({1, 1.0}, 0.7) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(laguerre_derivative({0, 1.0}, 0.7) == 0.0);
}

TEST_CASE("kummer series with a = 0 is identically one") {
    CHECK(kummer_m({0.0, 2.0, 4.2}) == 1.0);
}

TEST_CASE("kummer series reproduces exp when a equals b") {
    for (double x : {0.1, 1.5, 4.0}) {
        CHECK(close_rel(kummer_m({2.0, 2.0, x}), std::exp(x), 1e-13));
    }
}

TEST_CASE("kummer polynomial termination reproduces scaled laguerre") {
    // n M(1-n, 2, x) = L_{n-1}^{(1)}(x)
    for (int n = 1; n <= 10; ++n) {
        for (double x : kXGrid) {
            const double lhs = n * kummer_m({1.0 - n, 2.0, x});
            const double rhs = laguerre({n - 1, 1.0}, x);
            CHECK(close_rel(lhs, rhs, 1e-10));
        }
    }
}

TEST_CASE("specfun argument validation") {
    CHECK_THROWS_AS(laguerre({-1, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre({2, -1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_rodrigues_oracle({13, 1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_rodrigues_oracle({3, 0.5}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(kummer_m({1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(kummer_m({1.0, -2.0, 1.0}), std::invalid_argument);
    // divergent truncation: too few terms for a large argument
    CHECK_THROWS_AS(kummer_m({1.0, 3.0, 50.0, 5}), std::runtime_error);
}
