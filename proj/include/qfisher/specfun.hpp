#pragma once

namespace qfisher {

/// Generalized Laguerre polynomial index: degree m >= 0, superscript beta > -1.
struct PolyIndex {
    int m = 0;
    double beta = 0.0;
};

/// Arguments for the confluent hypergeometric series M(a,b,x).
/// b must not be zero or a negative integer.
struct KummerParams {
    double a = 0.0;
    double b = 1.0;
    double x = 0.0;
    int max_terms = 500;
    double series_tol = 1e-16;
};

/// L_m^{(beta)}(x) by the upward three-term recurrence
///   (m+1) L_{m+1} = (2m+1+beta-x) L_m - (m+beta) L_{m-1}.
double laguerre(const PolyIndex& idx, double x);

/// Independent check path for laguerre(): expands d^m/dx^m (e^{-x} x^{m+beta})
/// with exact integer coefficients and divides out the weight.
/// Requires integer beta >= 0 and m <= 12 (coefficient growth).
double laguerre_rodrigues_oracle(const PolyIndex& idx, double x);

/// d/dx L_m^{(beta)}(x) = -L_{m-1}^{(beta+1)}(x); zero for m = 0.
double laguerre_derivative(const PolyIndex& idx, double x);

/// Truncated Kummer series M(a,b,x) = sum_k (a)_k/(b)_k x^k/k!.
/// Terminates exactly when a is a nonpositive integer; otherwise stops once
/// the next term drops below series_tol relative to the running sum.
/// Throws if max_terms is exhausted first.
double kummer_m(const KummerParams& params);

} // namespace qfisher
