#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqcm/quantum.hpp"

namespace eqcm {

struct ObservableSpec {
  enum class Kind { PauliString, Identity };
  Kind kind = Kind::PauliString;
  std::vector<std::pair<PauliAxis, int>> factors;  // sites strictly increasing
  std::string label;                               // e.g. "Z3Z4Z5", "I"
};

/// Fixed, ordered observable set whose expectations form the feature
/// vector. The order (and hence the fingerprint) is deterministic:
/// single-site block, nearest-neighbour block, longitudinal z-strings
/// by increasing length then leftmost site, identity last.
struct ObservableFamily {
  std::vector<ObservableSpec> specs;
  std::uint64_t fingerprint = 0;
  int register_size = 0;

  std::size_t size() const { return specs.size(); }
};

enum class FamilyKind { Full, Local };

/// Full: 3m single-site + 3(m-1) nearest-neighbour + all z-strings of
/// length 3..m + identity (55 for m=7). Local drops the z-strings
/// (40 for m=7).
ObservableFamily observable_family(FamilyKind kind, int sites);

/// Tr[rho Q] as a dense trace. The imaginary residue must stay below
/// 1e-10 (anything larger signals a broken invariant upstream) and is
/// then discarded.
double expectation(const DensityMatrix& rho, const ObservableSpec& spec);

struct FeatureVector {
  Eigen::VectorXd values;
  std::uint64_t family_fingerprint = 0;
};

/// Materializes the family operators once so feature extraction can be
/// reused across samples. Immutable after construction.
class FamilyEvaluator {
 public:
  explicit FamilyEvaluator(ObservableFamily family);

  const ObservableFamily& family() const { return family_; }
  FeatureVector operator()(const DensityMatrix& rho) const;

 private:
  ObservableFamily family_;
  std::vector<ComplexMatrix> ops_;
};

/// One-shot convenience around FamilyEvaluator.
FeatureVector extract_features(const DensityMatrix& rho, const ObservableFamily& family);

}  // namespace eqcm
