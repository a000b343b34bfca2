#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eqcm {

using ComplexMatrix = Eigen::MatrixXcd;

/// Hermitian, unit-trace, positive-semidefinite matrix over a register
/// of qubits. Construction validates Hermiticity (1e-12) and the trace
/// (1e-12); positivity is guaranteed analytically by the builders and
/// checked explicitly where tests require it via min_eigenvalue().
///
/// Conventions: site 1 is the leftmost tensor factor (most significant
/// bit of the basis index) and sigma_z |0> = +|0>, so z_k = +1 pins
/// site k to |0><0|.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(ComplexMatrix rho);

  const ComplexMatrix& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }
  int sites() const { return sites_; }

  /// Tr[rho^2].
  double purity() const;
  /// Smallest eigenvalue; the PSD invariant requires >= -1e-10.
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(ComplexMatrix rho);
  ComplexMatrix rho_;
  int sites_;
};

enum class AttentionTopology { AllPairs, Chain };

struct GoeProvenance {
  double sigma;
  std::uint64_t seed;
  bool textbook_diagonal;
};
struct IsingProvenance {
  double coupling;
  double field_z;
  double field_x;
};
struct AttentionProvenance {
  std::vector<double> z;
  double g1;
  double g2;
  AttentionTopology topology;
};
struct SumProvenance {
  std::vector<std::string> parts;
};

using HamiltonianProvenance =
    std::variant<GoeProvenance, IsingProvenance, AttentionProvenance, SumProvenance>;

std::string describe(const HamiltonianProvenance& provenance);

/// Hermitian generator of the deliberative dynamics. Builders produce
/// exactly Hermitian matrices; from_matrix enforces the 1e-12 bound.
struct Hamiltonian {
  ComplexMatrix matrix;
  HamiltonianProvenance provenance;

  static Hamiltonian from_matrix(ComplexMatrix h, HamiltonianProvenance provenance);
};

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);

/// Maximum-entropy product state with Tr[rho sigma_z^(k)] = z_k:
/// rho = tensor_k (I + z_k sigma_z)/2. Requires |z_k| <= 1.
DensityMatrix init_state(std::span<const double> z);

/// -sum lambda ln lambda over the spectrum, in nats; eigenvalues in
/// [-1e-10, 0) are clamped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

enum class PauliAxis { X, Y, Z };

char axis_letter(PauliAxis axis);

/// Kronecker embedding of single-site Paulis with identities on the
/// unlisted sites. Sites are 1-based and must be distinct and within
/// [1, sites].
ComplexMatrix pauli_string(std::span<const std::pair<PauliAxis, int>> factors, int sites);

/// Real symmetric reservoir with independent N(0, sigma) entries for
/// i <= j (sigma is the variance). The upper triangle is filled row by
/// row, so the matrix is a pure function of (sites, sigma, seed). With
/// textbook_diagonal the diagonal variance is doubled to 2 sigma.
Hamiltonian build_goe(int sites, double sigma, std::uint64_t seed,
                      bool textbook_diagonal = false);

/// Open transverse- and longitudinal-field Ising chain:
/// H0 = J sum_i Z_i Z_{i+1} + B_z sum_i Z_i + B_x sum_i X_i.
Hamiltonian build_ising(int sites, double coupling, double field_z, double field_x);

/// Input-dependent attention term, diagonal in the computational basis:
/// H_I = -g1 sum_k z_k Z_k - g2 sum_{i>j} z_i z_j Z_i Z_j, with the pair
/// sum restricted to nearest neighbours for the chain topology.
Hamiltonian build_attention(std::span<const double> z, double g1, double g2,
                            AttentionTopology topology);

/// U(tau) = exp(-i H tau) through the eigendecomposition of H.
ComplexMatrix propagator(const Hamiltonian& hamiltonian, double tau);

/// rho(tau) = U rho U^dagger. Exact for this matrix scale; conserves
/// trace, Hermiticity, purity and energy to numerical precision.
DensityMatrix evolve(const DensityMatrix& rho0, const Hamiltonian& hamiltonian, double tau);

}  // namespace eqcm
