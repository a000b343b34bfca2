#include "eqcm/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "eqcm/rng.hpp"

namespace eqcm {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr std::complex<double> kI{0.0, 1.0};

int sites_for_dim(Eigen::Index dim) {
  int m = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d <<= 1;
    ++m;
  }
  if (d != dim || dim < 2) {
    throw std::invalid_argument("matrix dimension is not a power of two");
  }
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
  if (hermiticity_defect(a) > kHermTol) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian within 1e-12");
  }
}

ComplexMatrix single_site_pauli(PauliAxis axis) {
  ComplexMatrix p(2, 2);
  switch (axis) {
    case PauliAxis::X:
      p << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      p << 0, -kI, kI, 0;
      break;
    case PauliAxis::Z:
      p << 1, 0, 0, -1;
      break;
  }
  return p;
}

/// Spin value (+1 for |0>, -1 for |1>) of 1-based site `k` in basis
/// state `index` of an m-site register; site 1 owns the most
/// significant bit.
inline int spin_of(Eigen::Index index, int k, int m) {
  return ((index >> (m - k)) & 1) ? -1 : +1;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho)
    : rho_(std::move(rho)), sites_(sites_for_dim(rho_.rows())) {}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix rho) {
  require_hermitian(rho, "DensityMatrix");
  const std::complex<double> tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
  }
  return DensityMatrix(std::move(rho));
}

double DensityMatrix::purity() const {
  return rho_.cwiseAbs2().sum();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::string describe(const HamiltonianProvenance& provenance) {
  struct Visitor {
    std::string operator()(const GoeProvenance& p) const {
      return "goe(sigma=" + std::to_string(p.sigma) + ",seed=" + std::to_string(p.seed) +
             (p.textbook_diagonal ? ",textbook_diagonal" : "") + ")";
    }
    std::string operator()(const IsingProvenance& p) const {
      return "ising(J=" + std::to_string(p.coupling) + ",Bz=" + std::to_string(p.field_z) +
             ",Bx=" + std::to_string(p.field_x) + ")";
    }
    std::string operator()(const AttentionProvenance& p) const {
      return "attention(g1=" + std::to_string(p.g1) + ",g2=" + std::to_string(p.g2) +
             (p.topology == AttentionTopology::Chain ? ",chain" : ",all_pairs") + ")";
    }
    std::string operator()(const SumProvenance& p) const {
      std::string s = "sum(";
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += " + ";
        s += p.parts[i];
      }
      return s + ")";
    }
  };
  return std::visit(Visitor{}, provenance);
}

Hamiltonian Hamiltonian::from_matrix(ComplexMatrix h, HamiltonianProvenance provenance) {
  require_hermitian(h, "Hamiltonian");
  return Hamiltonian{std::move(h), std::move(provenance)};
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.matrix.rows() != b.matrix.rows()) {
    throw std::invalid_argument("Hamiltonian sum: dimension mismatch");
  }
  return Hamiltonian{a.matrix + b.matrix,
                     SumProvenance{{describe(a.provenance), describe(b.provenance)}}};
}

DensityMatrix init_state(std::span<const double> z) {
  const int m = static_cast<int>(z.size());
  if (m < 1) throw std::invalid_argument("init_state: empty input vector");
  for (double zk : z) {
    if (!(std::abs(zk) <= 1.0)) {
      throw std::invalid_argument("init_state: |z_k| must not exceed 1");
    }
  }
  const Eigen::Index dim = Eigen::Index(1) << m;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double p = 1.0;
    for (int k = 1; k <= m; ++k) {
      p *= 0.5 * (1.0 + z[static_cast<std::size_t>(k - 1)] * spin_of(i, k, m));
    }
    rho(i, i) = p;
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -1e-10) {
      throw std::domain_error("von_neumann_entropy: eigenvalue below -1e-10");
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

char axis_letter(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

ComplexMatrix pauli_string(std::span<const std::pair<PauliAxis, int>> factors, int sites) {
  if (sites < 1) throw std::invalid_argument("pauli_string: register must have >= 1 site");
  std::vector<int> seen(static_cast<std::size_t>(sites) + 1, 0);
  for (const auto& [axis, site] : factors) {
    if (site < 1 || site > sites) {
      throw std::invalid_argument("pauli_string: site " + std::to_string(site) +
                                  " outside register of " + std::to_string(sites));
    }
    if (seen[static_cast<std::size_t>(site)]++) {
      throw std::invalid_argument("pauli_string: duplicate site " + std::to_string(site));
    }
  }

  ComplexMatrix op = ComplexMatrix::Identity(1, 1);
  for (int k = 1; k <= sites; ++k) {
    ComplexMatrix factor = ComplexMatrix::Identity(2, 2);
    for (const auto& [axis, site] : factors) {
      if (site == k) factor = single_site_pauli(axis);
    }
    // op = op (x) factor
    ComplexMatrix next(op.rows() * 2, op.cols() * 2);
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      for (Eigen::Index c = 0; c < op.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = op(r, c) * factor;
      }
    }
    op = std::move(next);
  }
  return op;
}

Hamiltonian build_goe(int sites, double sigma, std::uint64_t seed, bool textbook_diagonal) {
  if (sites < 1) throw std::invalid_argument("build_goe: register must have >= 1 site");
  if (sigma < 0.0) throw std::invalid_argument("build_goe: sigma must be >= 0");
  const Eigen::Index dim = Eigen::Index(1) << sites;
  const double off_scale = std::sqrt(sigma);
  const double diag_scale = textbook_diagonal ? std::sqrt(2.0 * sigma) : off_scale;

  RandomSource rng(seed);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const double g = rng.gaussian() * (i == j ? diag_scale : off_scale);
      h(i, j) = g;
      h(j, i) = g;
    }
  }
  return Hamiltonian{std::move(h), GoeProvenance{sigma, seed, textbook_diagonal}};
}

Hamiltonian build_ising(int sites, double coupling, double field_z, double field_x) {
  if (sites < 2) throw std::invalid_argument("build_ising: chain needs at least 2 sites");
  const int m = sites;
  const Eigen::Index dim = Eigen::Index(1) << m;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

  // Diagonal part: J sum Z_i Z_{i+1} + B_z sum Z_i.
  for (Eigen::Index i = 0; i < dim; ++i) {
    double d = 0.0;
    for (int k = 1; k < m; ++k) {
      d += coupling * spin_of(i, k, m) * spin_of(i, k + 1, m);
    }
    for (int k = 1; k <= m; ++k) {
      d += field_z * spin_of(i, k, m);
    }
    h(i, i) = d;
  }
  // Transverse part: B_x sum X_i flips one bit.
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (int k = 1; k <= m; ++k) {
      const Eigen::Index j = i ^ (Eigen::Index(1) << (m - k));
      h(i, j) += field_x;
    }
  }
  return Hamiltonian{std::move(h), IsingProvenance{coupling, field_z, field_x}};
}

Hamiltonian build_attention(std::span<const double> z, double g1, double g2,
                            AttentionTopology topology) {
  const int m = static_cast<int>(z.size());
  if (m < 1) throw std::invalid_argument("build_attention: empty input vector");
  if (!std::isfinite(g1) || !std::isfinite(g2)) {
    throw std::invalid_argument("build_attention: couplings must be finite");
  }
  const Eigen::Index dim = Eigen::Index(1) << m;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double d = 0.0;
    for (int k = 1; k <= m; ++k) {
      d -= g1 * z[static_cast<std::size_t>(k - 1)] * spin_of(i, k, m);
    }
    if (topology == AttentionTopology::AllPairs) {
      for (int a = 2; a <= m; ++a) {
        for (int b = 1; b < a; ++b) {
          d -= g2 * z[static_cast<std::size_t>(a - 1)] * z[static_cast<std::size_t>(b - 1)] *
               spin_of(i, a, m) * spin_of(i, b, m);
        }
      }
    } else {
      for (int k = 1; k < m; ++k) {
        d -= g2 * z[static_cast<std::size_t>(k - 1)] * z[static_cast<std::size_t>(k)] *
             spin_of(i, k, m) * spin_of(i, k + 1, m);
      }
    }
    h(i, i) = d;
  }
  return Hamiltonian{std::move(h),
                     AttentionProvenance{{z.begin(), z.end()}, g1, g2, topology}};
}

ComplexMatrix propagator(const Hamiltonian& hamiltonian, double tau) {
  require_hermitian(hamiltonian.matrix, "propagator");
  if (!std::isfinite(tau) || tau < 0.0) {
    throw std::invalid_argument("propagator: tau must be finite and non-negative");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian.matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("propagator: eigendecomposition failed");
  }
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::exp(-kI * evals(i) * tau);
  }
  return evecs * phases.asDiagonal() * evecs.adjoint();
}

DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& hamiltonian, double tau) {
  if (rho0.dim() != hamiltonian.matrix.rows()) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  if (tau == 0.0) return rho0;
  const ComplexMatrix u = propagator(hamiltonian, tau);
  ComplexMatrix rho_tau = u * rho0.matrix() * u.adjoint();
  // Unitary conjugation keeps rho Hermitian up to roundoff; symmetrize
  // the residue so the construction-time invariant check stays exact.
  rho_tau = 0.5 * (rho_tau + rho_tau.adjoint().eval());
  return DensityMatrix::from_matrix(std::move(rho_tau));
}

}  // namespace eqcm
