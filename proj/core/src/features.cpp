#include "eqcm/features.hpp"

#include <array>
#include <stdexcept>

#include "eqcm/hash.hpp"

namespace eqcm {

namespace {

constexpr std::array<PauliAxis, 3> kAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

std::string label_for(const std::vector<std::pair<PauliAxis, int>>& factors) {
  std::string label;
  for (const auto& [axis, site] : factors) {
    label += axis_letter(axis);
    label += std::to_string(site);
  }
  return label;
}

std::uint64_t family_fingerprint(const ObservableFamily& family) {
  std::uint64_t h = fnv1a64("m=" + std::to_string(family.register_size));
  for (const auto& spec : family.specs) {
    h = fnv1a64(spec.label + ";", h);
  }
  return h;
}

ComplexMatrix materialize(const ObservableSpec& spec, int sites) {
  const Eigen::Index dim = Eigen::Index(1) << sites;
  if (spec.kind == ObservableSpec::Kind::Identity) {
    return ComplexMatrix::Identity(dim, dim);
  }
  return pauli_string(spec.factors, sites);
}

}  // namespace

ObservableFamily observable_family(FamilyKind kind, int sites) {
  if (sites < 2) throw std::invalid_argument("observable_family: register needs >= 2 sites");
  ObservableFamily family;
  family.register_size = sites;

  // (i) single-site expectations, site-major, axes X, Y, Z.
  for (int k = 1; k <= sites; ++k) {
    for (PauliAxis axis : kAxes) {
      ObservableSpec spec;
      spec.factors = {{axis, k}};
      spec.label = label_for(spec.factors);
      family.specs.push_back(std::move(spec));
    }
  }
  // (ii) nearest-neighbour two-body correlators, same axis on both sites.
  for (int k = 1; k < sites; ++k) {
    for (PauliAxis axis : kAxes) {
      ObservableSpec spec;
      spec.factors = {{axis, k}, {axis, k + 1}};
      spec.label = label_for(spec.factors);
      family.specs.push_back(std::move(spec));
    }
  }
  // (iii) longitudinal z-strings, ascending length then leftmost site.
  if (kind == FamilyKind::Full) {
    for (int len = 3; len <= sites; ++len) {
      for (int first = 1; first + len - 1 <= sites; ++first) {
        ObservableSpec spec;
        for (int k = first; k < first + len; ++k) {
          spec.factors.emplace_back(PauliAxis::Z, k);
        }
        spec.label = label_for(spec.factors);
        family.specs.push_back(std::move(spec));
      }
    }
  }
  // (iv) identity bias feature, always last.
  ObservableSpec identity;
  identity.kind = ObservableSpec::Kind::Identity;
  identity.label = "I";
  family.specs.push_back(std::move(identity));

  family.fingerprint = family_fingerprint(family);
  return family;
}

namespace {

double expectation_of(const DensityMatrix& rho, const ComplexMatrix& op,
                      const std::string& label) {
  if (rho.dim() != op.rows()) {
    throw std::invalid_argument("expectation: dimension mismatch for " + label);
  }
  // Tr[rho Q] = sum_ij rho_ij Q_ji
  const std::complex<double> tr = (rho.matrix().transpose().cwiseProduct(op)).sum();
  if (std::abs(tr.imag()) >= 1e-10) {
    throw std::runtime_error("expectation: imaginary residue " + std::to_string(tr.imag()) +
                             " for " + label + " signals a broken invariant");
  }
  return tr.real();
}

}  // namespace

double expectation(const DensityMatrix& rho, const ObservableSpec& spec) {
  return expectation_of(rho, materialize(spec, rho.sites()), spec.label);
}

FamilyEvaluator::FamilyEvaluator(ObservableFamily family) : family_(std::move(family)) {
  ops_.reserve(family_.specs.size());
  for (const auto& spec : family_.specs) {
    ops_.push_back(materialize(spec, family_.register_size));
  }
}

FeatureVector FamilyEvaluator::operator()(const DensityMatrix& rho) const {
  FeatureVector out;
  out.family_fingerprint = family_.fingerprint;
  out.values.resize(static_cast<Eigen::Index>(ops_.size()));
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    out.values(static_cast<Eigen::Index>(i)) =
        expectation_of(rho, ops_[i], family_.specs[i].label);
  }
  return out;
}

FeatureVector extract_features(const DensityMatrix& rho, const ObservableFamily& family) {
  return FamilyEvaluator(family)(rho);
}

}  // namespace eqcm
