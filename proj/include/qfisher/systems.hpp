#pragma once

#include <complex>

namespace qfisher {

enum class SystemKind { Hydrogen, Well };

/// One bound state of a supported system. width is the box size for the well
/// and is ignored for hydrogen. Atomic units throughout (hbar = m = e = 1).
struct BoundState {
    SystemKind kind = SystemKind::Hydrogen;
    int n = 1;
    double width = 1.0;

    static BoundState hydrogen(int n);
    static BoundState well(int n, double width);
};

// --- Quasi-1D hydrogen on the half line x > 0, regular branch ---

/// E_n = -1/(2 n^2).
double hydrogen_energy(int n);

/// psi_n(x) = (2x / n^{5/2}) e^{-x/n} L_{n-1}^{(1)}(2x/n); rejects x < 0
/// (the potential wall makes the half line the whole domain).
double hydrogen_psi(int n, double x);

/// d/dx of hydrogen_psi via the product rule and dL_m/dx = -L_{m-1}^{(beta+1)}.
double hydrogen_psi_derivative(int n, double x);

/// Momentum amplitude
///   Phi_n(p) = (-1)^{n+1} sqrt(2n/pi) (1 - i n p)^{n-1} / (1 + i n p)^{n+1},
/// evaluated in polar form: modulus (1 + n^2 p^2)^{-1}, phase -2n atan(np).
/// Stays stable at large n where binomial expansion of the powers would not.
std::complex<double> hydrogen_phi(int n, double p);

/// Position density psi_n^2.
double hydrogen_rho(int n, double x);

/// Momentum density (2n/pi) (1 + n^2 p^2)^{-2}; equals |Phi_n|^2.
double hydrogen_gamma(int n, double p);

/// Integration cutoff n(2n + 40): the outer turning point 2n^2 plus 40 decay
/// lengths; the density tail beyond it stays under 1e-20 through n = 25.
double hydrogen_x_max(int n);

/// |(-1/2) psi'' - psi/x - E_n psi| with a 5-point second-difference stencil.
/// Requires x > 2h so the stencil stays on the half line.
double schrodinger_residual(int n, double x, double h = 1e-4);

// --- Infinite well on [-a/2, a/2] ---

/// E_n = n^2 pi^2 / (2 a^2).
double well_energy(int n, double a);

/// psi_n(x) = sqrt(2/a) sin(n pi (x/a + 1/2)); rejects |x| > a/2.
double well_psi(int n, double a, double x);

/// d/dx of well_psi; rejects |x| > a/2.
double well_psi_derivative(int n, double a, double x);

} // namespace qfisher
