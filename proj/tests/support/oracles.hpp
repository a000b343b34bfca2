// Test-side reference implementations, kept independent of the library
// code paths they cross-check.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "eqcm/quantum.hpp"
#include "eqcm/rng.hpp"

namespace eqcm::testing {

/// Single-site Pauli matrices written out longhand.
inline Eigen::Matrix2cd oracle_pauli(char axis) {
  Eigen::Matrix2cd p;
  const std::complex<double> i{0.0, 1.0};
  switch (axis) {
    case 'x': p << 0, 1, 1, 0; break;
    case 'y': p << 0, -i, i, 0; break;
    case 'z': p << 1, 0, 0, -1; break;
    default:  p.setIdentity(); break;
  }
  return p;
}

/// Elementwise Kronecker chain: entry (r, c) is the product over sites
/// of the single-site factors evaluated at the per-site bits of r and
/// c, with site 1 on the most significant bit. Deliberately a different
/// algorithm from the library's block-composition builder.
inline ComplexMatrix oracle_kron_chain(const std::vector<Eigen::Matrix2cd>& factors) {
  const int m = static_cast<int>(factors.size());
  const Eigen::Index dim = Eigen::Index(1) << m;
  ComplexMatrix op(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      std::complex<double> v = 1.0;
      for (int k = 0; k < m; ++k) {
        const int rb = static_cast<int>((r >> (m - 1 - k)) & 1);
        const int cb = static_cast<int>((c >> (m - 1 - k)) & 1);
        v *= factors[static_cast<std::size_t>(k)](rb, cb);
      }
      op(r, c) = v;
    }
  }
  return op;
}

/// Tr[rho Q] by the definition, as an explicit double loop.
inline std::complex<double> oracle_trace_product(const ComplexMatrix& rho,
                                                 const ComplexMatrix& op) {
  std::complex<double> tr = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      tr += rho(i, j) * op(j, i);
    }
  }
  return tr;
}

/// Random mixed state: convex mixture of a few gaussian-amplitude pure
/// states.
inline ComplexMatrix random_density(int sites, RandomSource& rng, int components = 4) {
  const Eigen::Index dim = Eigen::Index(1) << sites;
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  std::vector<double> weights;
  double total = 0.0;
  for (int c = 0; c < components; ++c) {
    weights.push_back(rng.uniform01() + 1e-3);
    total += weights.back();
  }
  for (int c = 0; c < components; ++c) {
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      psi(i) = std::complex<double>(rng.gaussian(), rng.gaussian());
    }
    psi.normalize();
    rho += (weights[static_cast<std::size_t>(c)] / total) * (psi * psi.adjoint());
  }
  return rho;
}

/// Binary entropy in nats with h(0) = h(1) = 0.
inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

/// True when fn() throws Ex whose message contains `needle`.
template <typename Ex, typename Fn>
bool throws_with_substring(Fn&& fn, const std::string& needle) {
  try {
    fn();
  } catch (const Ex& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace eqcm::testing
