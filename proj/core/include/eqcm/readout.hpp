#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "eqcm/features.hpp"

namespace eqcm {

struct DesignMatrix {
  Eigen::MatrixXd rows;     // N x M, one feature vector per row
  Eigen::VectorXd targets;  // length N
  std::uint64_t family_fingerprint = 0;
};

struct ReadoutModel {
  Eigen::VectorXd weights;  // length M
  double lambda = 0.0;
  std::uint64_t family_fingerprint = 0;
};

/// Stacks feature vectors (all sharing one family fingerprint) with
/// their targets.
DesignMatrix make_design_matrix(const std::vector<FeatureVector>& features,
                                const std::vector<double>& targets);

/// Ridge regression: solves (X^T X + lambda I) w = X^T t by Cholesky
/// factorization of the SPD normal matrix. The residual of the normal
/// equations is verified against 1e-8 * max(1, ||X^T t||_inf).
ReadoutModel fit_ridge(const DesignMatrix& design, double lambda);

/// y = w . x. Throws when the model and the feature vector carry
/// different family fingerprints.
double deliberative_index(const ReadoutModel& model, const FeatureVector& features);

/// Sign rule: y > 0 -> t_plus, y < 0 -> t_minus; the measure-zero tie
/// y = 0 goes to t_minus. Throws on non-finite y.
double decide(double y, double t_plus, double t_minus);

}  // namespace eqcm
