#include "bwf/math.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bwf {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

double log_sum_exp(double a, double b) {
  if (a == -inf) return b;
  if (b == -inf) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double log_sum_exp(std::span<const double> values) {
  double m = -inf;
  for (double v : values) m = std::max(m, v);
  if (m == -inf) return -inf;
  double s = 0;
  for (double v : values) s += std::exp(v - m);
  return m + std::log(s);
}

double normal_lpdf(double x, double mean, double sd) {
  const double z = (x - mean) / sd;
  return -0.5 * z * z - std::log(sd) - 0.5 * log_2pi;
}

double std_normal_lpdf(double z) { return -0.5 * z * z - 0.5 * log_2pi; }

double half_normal_lpdf(double x, double sd) {
  if (x < 0) return -inf;
  return log_two + normal_lpdf(x, 0.0, sd);
}

double lkj2_lpdf(double rho, double eta) {
  if (!(rho > -1.0 && rho < 1.0)) return -inf;
  // Normalizer: integral of (1-rho^2)^(eta-1) over (-1,1) = 2^(2*eta-1) B(eta,eta).
  const double lbeta = std::lgamma(eta) * 2.0 - std::lgamma(2.0 * eta);
  const double log_norm = (2.0 * eta - 1.0) * log_two + lbeta;
  return (eta - 1.0) * std::log1p(-rho * rho) - log_norm;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

// Series expansion for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction (modified Lentz) for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
  if (x < 0 || a <= 0) throw std::domain_error("gamma_p: a > 0 and x >= 0 required");
  if (x == 0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (x < 0 || a <= 0) throw std::domain_error("gamma_q: a > 0 and x >= 0 required");
  if (x == 0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double x, double df) {
  if (x <= 0) return 1.0;
  return gamma_q(df / 2.0, x / 2.0);
}

int binomial_quantile(double p, int n, double prob) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial_quantile: p in [0,1] required");
  if (prob <= 0.0) return 0;
  if (prob >= 1.0) return n;
  if (p >= 1.0) return n;
  // Accumulate the pmf directly; log-space terms avoid under/overflow.
  const double lp = std::log(prob);
  const double lq = std::log1p(-prob);
  double cdf = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double lpmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                        k * lp + (n - k) * lq;
    cdf += std::exp(lpmf);
    if (cdf >= p) return k;
  }
  return n;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  const auto n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(n - 1);
}

double sd(std::span<const double> xs) { return std::sqrt(variance(xs)); }

double quantile(std::span<const double> xs, double p) {
  if (xs.empty()) throw std::invalid_argument("quantile: empty sample");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (p <= 0) return sorted.front();
  if (p >= 1) return sorted.back();
  const double h = p * (static_cast<double>(sorted.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace bwf
