#pragma once

#include <span>
#include <string>
#include <vector>

namespace bwf {

/// Differentiable log density over R^d, the sampler-facing contract.
/// Implementations must be safe to call concurrently from multiple threads.
class LogDensity {
 public:
  virtual ~LogDensity() = default;

  virtual int dim() const = 0;

  /// Log density at q; writes the gradient (same length as q). A -inf return
  /// flags an invalid point and the gradient is zero-filled, never NaN.
  virtual double value_and_gradient(std::span<const double> q, std::span<double> grad) const = 0;

  /// Density without the gradient; default falls back to value_and_gradient.
  virtual double value(std::span<const double> q) const;

  /// Reporting-space hooks; defaults expose the sampling coordinates as-is.
  virtual int constrained_dim() const { return dim(); }
  virtual void constrain(std::span<const double> q, std::span<double> out) const;
  virtual std::vector<std::string> parameter_names() const;
};

}  // namespace bwf
