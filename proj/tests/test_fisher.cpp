#include "qfisher/fisher.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

using namespace qfisher;

namespace {

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

} // namespace

TEST_CASE("closed-form pair and constant product") {
    const FisherPair n1 = fisher_closed_hydrogen(1);
    CHECK(n1.i_rho == 4.0);
    CHECK(n1.i_gamma == 2.0);

    const FisherPair n2 = fisher_closed_hydrogen(2);
    CHECK(n2.i_rho == 1.0);
    CHECK(n2.i_gamma == 8.0);

    for (int n = 1; n <= 30; ++n) {
        const FisherPair c = fisher_closed_hydrogen(n);
        CHECK(c.i_rho * c.i_gamma == doctest::Approx(8.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(fisher_closed_hydrogen(0), std::invalid_argument);
}

TEST_CASE("hydrogen position Fisher information matches 4/n^2") {
    const IntegralResult n1 = fisher_position(BoundState::hydrogen(1));
    CHECK(n1.converged);
    CHECK(close_rel(n1.value, 4.0, 1e-8));

    const IntegralResult n3 = fisher_position(BoundState::hydrogen(3));
    CHECK(n3.converged);
    CHECK(close_rel(n3.value, 4.0 / 9.0, 1e-8));
}

TEST_CASE("defining density form agrees on the node-free ground state") {
    // rho'^2 / rho with the literal division; integrable because psi_1 has no
    // interior nodes and the quadrature never samples x = 0 itself.
    const IntegralResult defining = integrate(
        [](double x) {
            const double psi = hydrogen_psi(1, x);
            const double drho = 2.0 * psi * hydrogen_psi_derivative(1, x);
            return drho * drho / (psi * psi);
        },
        IntegrationDomain::finite(0.0, hydrogen_x_max(1)));
    const IntegralResult reduced = fisher_position(BoundState::hydrogen(1));

    CHECK(defining.converged);
    CHECK(close_rel(defining.value, 4.0, 1e-8));
    CHECK(std::abs(defining.value - reduced.value) <= 1e-9);
}

TEST_CASE("hydrogen momentum Fisher information matches 2n^2") {
    for (int n : {1, 2, 5}) {
        const IntegralResult r = fisher_momentum(BoundState::hydrogen(n));
        CHECK(r.converged);
        CHECK(close_rel(r.value, 2.0 * n * n, 1e-8));
    }
}

TEST_CASE("well position Fisher information for the ground state") {
    const double pi = std::numbers::pi;
    const IntegralResult r = fisher_position(BoundState::well(1, 1.0));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 4.0 * pi * pi) <= 1e-6);
}

TEST_CASE("well momentum route reproduces the variance oracle") {
    const double pi = std::numbers::pi;
    const double oracle = 1.0 / 3.0 - 2.0 / (pi * pi);

    const IntegralResult via = well_fisher_momentum_via_position(1, 1.0);
    CHECK(via.converged);
    CHECK(close_rel(via.value, oracle, 1e-8));

    // fisher_momentum dispatches the well to the same variance route
    const IntegralResult dispatched = fisher_momentum(BoundState::well(1, 1.0));
    CHECK(dispatched.value == via.value);
}

TEST_CASE("well momentum Fisher information scales as a^2") {
    for (int n : {1, 3}) {
        const double one = well_fisher_momentum_via_position(n, 1.0).value;
        const double two = well_fisher_momentum_via_position(n, 2.0).value;
        CHECK(close_rel(two, 4.0 * one, 1e-9));
    }
}

TEST_CASE("well momentum Fisher information rises monotonically toward a^2/3") {
    double previous = 0.0;
    for (int n = 1; n <= 8; ++n) {
        const double value = well_fisher_momentum_via_position(n, 1.0).value;
        CHECK(value > previous);
        CHECK(value < 1.0 / 3.0);
        previous = value;
    }
    CHECK(std::abs(previous - 1.0 / 3.0) < 0.01); // n = 8 sits within 1% of the limit
}

TEST_CASE("well direct transform route agrees with the variance route") {
    for (int n : {1, 2}) {
        const double via = well_fisher_momentum_via_position(n, 1.0).value;
        const WellMomentumDirect direct = well_fisher_momentum_direct(n, 1.0);
        CHECK(direct.converged);
        CHECK(std::abs(direct.value - via) / via <= 1e-4);
    }
}

TEST_CASE("position overlaps reproduce the Kronecker delta") {
    const IntegralResult same =
        position_overlap(BoundState::hydrogen(1), BoundState::hydrogen(1));
    CHECK(same.converged);
    CHECK(std::abs(same.value - 1.0) <= 1e-10);

    const IntegralResult cross =
        position_overlap(BoundState::hydrogen(1), BoundState::hydrogen(2));
    CHECK(std::abs(cross.value) <= 1e-10);

    const IntegralResult well_cross =
        position_overlap(BoundState::well(1, 1.0), BoundState::well(3, 1.0));
    CHECK(std::abs(well_cross.value) <= 1e-10);

    CHECK_THROWS_AS(position_overlap(BoundState::hydrogen(1), BoundState::well(1, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(position_overlap(BoundState::well(1, 1.0), BoundState::well(1, 2.0)),
                    std::invalid_argument);
}

TEST_CASE("momentum overlaps reproduce the Kronecker delta") {
    const ComplexIntegralResult same = momentum_overlap(2, 2);
    CHECK(same.converged);
    CHECK(std::abs(same.value.real() - 1.0) <= 1e-8);
    CHECK(std::abs(same.value.imag()) <= 1e-8);

    const ComplexIntegralResult cross = momentum_overlap(2, 3);
    CHECK(std::abs(cross.value.real()) <= 1e-8);
    CHECK(std::abs(cross.value.imag()) <= 1e-8);
}

TEST_CASE("orthonormality check wraps the overlaps") {
    const BoundState h = BoundState::hydrogen(1);
    CHECK(std::abs(orthonormality_check(1, 1, Space::Position, h) - 1.0) <= 1e-10);
    CHECK(std::abs(orthonormality_check(1, 2, Space::Position, h)) <= 1e-10);
    CHECK(std::abs(orthonormality_check(3, 3, Space::Momentum, h) - 1.0) <= 1e-8);

    const BoundState w = BoundState::well(1, 2.0);
    CHECK(std::abs(orthonormality_check(2, 2, Space::Position, w) - 1.0) <= 1e-10);
    CHECK_THROWS_AS(orthonormality_check(1, 1, Space::Momentum, w), std::invalid_argument);
}

TEST_CASE("hydrogen report carries closed forms and a tiny discrepancy") {
    const FisherReport r = build_report(BoundState::hydrogen(4));
    CHECK(r.converged);
    CHECK(r.energy == doctest::Approx(-1.0 / 32.0).epsilon(1e-15));
    REQUIRE(r.i_rho_closed.has_value());
    REQUIRE(r.i_gamma_closed.has_value());
    CHECK(*r.i_rho_closed == 0.25);
    CHECK(*r.i_gamma_closed == 32.0);
    CHECK(close_rel(r.i_rho_numeric, 0.25, 1e-8));
    CHECK(close_rel(r.i_gamma_numeric, 32.0, 1e-8));
    CHECK(std::abs(r.product - 8.0) <= 1e-6);

    const FisherReport ground = build_report(BoundState::hydrogen(1));
    CHECK(ground.max_abs_discrepancy <= 1e-8);
}

TEST_CASE("well report leaves the closed-form fields empty") {
    const FisherReport r = build_report(BoundState::well(2, 1.0));
    CHECK(r.converged);
    CHECK_FALSE(r.i_rho_closed.has_value());
    CHECK_FALSE(r.i_gamma_closed.has_value());
    CHECK(r.max_abs_discrepancy == 0.0);
    CHECK(r.product > 0.0);
    CHECK(std::isfinite(r.product));
    // derived check: I_rho I_gamma = 4 n^2 pi^2 (1/3 - 2/(n^2 pi^2)), width-free
    const double pi = std::numbers::pi;
    const double expected = 4.0 * 4.0 * pi * pi * (1.0 / 3.0 - 2.0 / (4.0 * pi * pi));
    CHECK(close_rel(r.product, expected, 1e-8));
}

TEST_CASE("report batches match one-at-a-time construction") {
    const std::vector<BoundState> states = {BoundState::hydrogen(1), BoundState::hydrogen(2),
                                            BoundState::well(1, 1.0)};
    const std::vector<FisherReport> serial =
        build_reports(states, {}, ExecutionMode::Serial);
    const std::vector<FisherReport> parallel =
        build_reports(states, {}, ExecutionMode::Parallel);

    REQUIRE(serial.size() == states.size());
    REQUIRE(parallel.size() == states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const FisherReport single = build_report(states[i]);
        CHECK(serial[i].i_rho_numeric == single.i_rho_numeric);
        CHECK(serial[i].i_gamma_numeric == single.i_gamma_numeric);
        CHECK(parallel[i].i_rho_numeric == single.i_rho_numeric);
        CHECK(parallel[i].i_gamma_numeric == single.i_gamma_numeric);
        CHECK(serial[i].converged);
    }
}
