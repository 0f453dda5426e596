#pragma once

#include <cmath>
#include <span>
#include <vector>

// Scalar density and special-function helpers shared across the library.
// All log densities are fully normalized (natural log).

namespace bwf {

inline constexpr double log_2pi = 1.8378770664093454836;
inline constexpr double log_two = 0.6931471805599453094;

double log_sum_exp(double a, double b);
double log_sum_exp(std::span<const double> values);

double normal_lpdf(double x, double mean, double sd);
double std_normal_lpdf(double z);

/// Half-normal on [0, inf): twice the Normal(0, sd) density.
double half_normal_lpdf(double x, double sd);

/// Normalized density of the correlation of a 2x2 LKJ(eta) matrix,
/// p(rho) = (1 - rho^2)^(eta-1) / (2^(2*eta-1) * Beta(eta, eta)).
double lkj2_lpdf(double rho, double eta);

double normal_cdf(double x);

/// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Upper tail probability of a chi-square distribution.
double chi_square_sf(double x, double df);

/// Smallest k in [0, n] with Binomial(n, prob) CDF(k) >= p.
int binomial_quantile(double p, int n, double prob);

double mean(std::span<const double> xs);
/// Sample variance with the n-1 denominator; 0 for fewer than 2 values.
double variance(std::span<const double> xs);
double sd(std::span<const double> xs);

/// Type-7 (linear interpolation) empirical quantile; xs need not be sorted.
double quantile(std::span<const double> xs, double p);

}  // namespace bwf
