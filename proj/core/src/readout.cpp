#include "eqcm/readout.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace eqcm {

DesignMatrix make_design_matrix(const std::vector<FeatureVector>& features,
                                const std::vector<double>& targets) {
  if (features.empty()) throw std::invalid_argument("design matrix: no samples");
  if (features.size() != targets.size()) {
    throw std::invalid_argument("design matrix: sample/target count mismatch");
  }
  DesignMatrix design;
  design.family_fingerprint = features.front().family_fingerprint;
  const Eigen::Index m = features.front().values.size();
  design.rows.resize(static_cast<Eigen::Index>(features.size()), m);
  design.targets.resize(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].family_fingerprint != design.family_fingerprint) {
      throw std::invalid_argument("design matrix: mixed observable families");
    }
    design.rows.row(static_cast<Eigen::Index>(i)) = features[i].values.transpose();
    design.targets(static_cast<Eigen::Index>(i)) = targets[i];
  }
  return design;
}

ReadoutModel fit_ridge(const DesignMatrix& design, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("fit_ridge: lambda must be positive");
  if (design.rows.rows() < 1) throw std::invalid_argument("fit_ridge: empty design matrix");
  if (!design.rows.allFinite() || !design.targets.allFinite()) {
    throw std::invalid_argument("fit_ridge: non-finite entries");
  }

  const Eigen::Index m = design.rows.cols();
  const Eigen::MatrixXd gram =
      design.rows.transpose() * design.rows + lambda * Eigen::MatrixXd::Identity(m, m);
  const Eigen::VectorXd rhs = design.rows.transpose() * design.targets;

  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("fit_ridge: Cholesky factorization failed");
  }
  Eigen::VectorXd w = llt.solve(rhs);

  const double residual = (gram * w - rhs).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
  if (residual >= 1e-8 * scale) {
    throw std::runtime_error("fit_ridge: normal-equation residual " + std::to_string(residual) +
                             " exceeds tolerance");
  }
  return ReadoutModel{std::move(w), lambda, design.family_fingerprint};
}

double deliberative_index(const ReadoutModel& model, const FeatureVector& features) {
  if (model.family_fingerprint != features.family_fingerprint) {
    throw std::invalid_argument(
        "deliberative_index: feature vector comes from a different observable family");
  }
  return model.weights.dot(features.values);
}

double decide(double y, double t_plus, double t_minus) {
  if (!std::isfinite(y)) throw std::invalid_argument("decide: non-finite index");
  return y > 0.0 ? t_plus : t_minus;
}

}  // namespace eqcm
