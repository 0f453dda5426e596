#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bwf/design.hpp"
#include "bwf/log_density.hpp"

namespace bwf {

struct NormalPrior {
  double mean = 0.0;
  double sd = 1.0;
};

struct HalfNormalPrior {
  double sd = 1.0;
};

struct LkjPrior {
  double eta = 2.0;
};

/// Prior families and hyperparameters for every parameter block.
struct PriorSpec {
  NormalPrior intercept{0.0, 10.0};
  NormalPrior slope{0.0, 1.0};
  HalfNormalPrior subj_int_sd{1.0};
  HalfNormalPrior subj_slope_sd{1.0};
  HalfNormalPrior item_int_sd{1.0};
  HalfNormalPrior item_slope_sd{1.0};
  HalfNormalPrior resid_sd{1.0};
  LkjPrior subj_cor{2.0};
  LkjPrior item_cor{2.0};

  static PriorSpec diffuse();
  static PriorSpec weakly_informative();

  /// Throws std::invalid_argument listing every invalid hyperparameter.
  void validate() const;
};

struct FixedEffects {
  double intercept = 0.0;
  double slope = 0.0;  // held at 0 in the null variant
};

struct RandomEffectBlock {
  double sigma_int = 1.0;
  double sigma_slope = 1.0;
  double rho = 0.0;
};

/// Actual adjustments on the log-ms scale, one row per subject/item.
struct LatentEffects {
  std::vector<double> subj_int;
  std::vector<double> subj_slope;
  std::vector<double> item_int;
  std::vector<double> item_slope;
};

struct ParameterVector {
  FixedEffects fixed;
  RandomEffectBlock subj;
  RandomEffectBlock item;
  double sigma_rt = 1.0;
  LatentEffects latents;
};

/// Constrained value at a boundary of the parameter space (sigma = 0, |rho| = 1).
struct BoundaryError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Parameter outside the prior's support (negative SD, |rho| >= 1).
struct OutOfSupportError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Likelihood evaluated to a non-finite value (e.g. sigma_rt = 0).
struct DensityUnderflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hierarchical lognormal mixed model for a two-condition repeated-measures
/// design: lognormal likelihood, fixed intercept (+ optional slope), and
/// correlated by-subject and by-item intercept/slope adjustments.
///
/// The unconstrained coordinates are: fixed effects as-is, log of every SD,
/// atanh of every correlation, and standardized (non-centered) latent
/// coordinates z with adjustment = diag(sigma) * chol(corr) * z.
class Model {
 public:
  Model(bool include_slope, int n_subjects, int n_items);

  bool include_slope() const { return include_slope_; }
  int n_subjects() const { return n_subjects_; }
  int n_items() const { return n_items_; }

  /// Dimension of both the unconstrained vector and the flattened
  /// constrained vector (9 or 8 structural + 2 per subject + 2 per item).
  int dim() const;
  int structural_dim() const { return include_slope_ ? 9 : 8; }

  std::vector<std::string> parameter_names() const;

  // --- transforms -----------------------------------------------------
  std::vector<double> to_unconstrained(const ParameterVector& params) const;
  ParameterVector to_constrained(std::span<const double> q) const;
  /// log |d constrained / d unconstrained| at q (SD, correlation and latent
  /// standardization terms).
  double log_jacobian(std::span<const double> q) const;

  std::vector<double> flatten_constrained(const ParameterVector& params) const;
  ParameterVector unflatten_constrained(std::span<const double> values) const;

  // --- densities (constrained space) ----------------------------------
  double log_likelihood(const Dataset& data, const ParameterVector& params) const;
  double log_prior(const ParameterVector& params, const PriorSpec& prior) const;

  // --- unconstrained joint --------------------------------------------
  /// log_likelihood + log_prior + log_jacobian as a function of q, with the
  /// exact gradient. Invalid points return -inf with a zero-filled gradient.
  double log_joint_unconstrained(const Dataset& data, const PriorSpec& prior,
                                 std::span<const double> q, std::span<double> grad) const;
  double log_joint_unconstrained(const Dataset& data, const PriorSpec& prior,
                                 std::span<const double> q) const;

 private:
  bool include_slope_;
  int n_subjects_;
  int n_items_;
};

/// The full model includes the condition slope; the null variant removes it
/// from the parameter space and prior while retaining random slopes.
Model model_variant(bool include_slope, int n_subjects, int n_items);

/// Normalized log joint of (model, data, prior) over the unconstrained
/// space, with exact gradients; the sampling target.
class JointDensity final : public LogDensity {
 public:
  JointDensity(const Model& model, const Dataset& data, const PriorSpec& prior);

  int dim() const override { return model_.dim(); }
  double value_and_gradient(std::span<const double> q, std::span<double> grad) const override;
  double value(std::span<const double> q) const override;

  int constrained_dim() const override { return model_.dim(); }
  void constrain(std::span<const double> q, std::span<double> out) const override;
  std::vector<std::string> parameter_names() const override { return model_.parameter_names(); }

  const Model& model() const { return model_; }

 private:
  double evaluate(std::span<const double> q, double* grad) const;

  Model model_;
  PriorSpec prior_;
  // Trial data in gradient-friendly layout.
  std::vector<double> log_rt_;
  std::vector<double> so_;
  std::vector<std::int32_t> subject_;
  std::vector<std::int32_t> item_;
};

}  // namespace bwf
