#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "eqcm/quantum.hpp"
#include "eqcm/rng.hpp"
#include "eqcm/serialize.hpp"
#include "support/oracles.hpp"

using namespace eqcm;
using eqcm::testing::binary_entropy;
using eqcm::testing::oracle_kron_chain;
using eqcm::testing::oracle_pauli;
using eqcm::testing::oracle_trace_product;

namespace {

std::vector<double> random_z(int m, RandomSource& rng, double max_abs = 1.0) {
  std::vector<double> z(static_cast<std::size_t>(m));
  for (double& zk : z) zk = max_abs * (2.0 * rng.uniform01() - 1.0);
  return z;
}

double z_expectation(const DensityMatrix& rho, int site) {
  const std::pair<PauliAxis, int> factor{PauliAxis::Z, site};
  const ComplexMatrix op = pauli_string({&factor, 1}, rho.sites());
  return oracle_trace_product(rho.matrix(), op).real();
}

}  // namespace

TEST_CASE("init_state single-site examples") {
  {
    const double z[] = {1.0};
    DensityMatrix rho = init_state(z);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(1.0));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.0));
  }
  {
    const double z[] = {0.5};
    DensityMatrix rho = init_state(z);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.75));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.25));
    CHECK(z_expectation(rho, 1) == doctest::Approx(0.5).epsilon(1e-12));
  }
  {
    const double z[] = {1.5};
    CHECK_THROWS_AS(init_state(z), std::invalid_argument);
  }
}

TEST_CASE("init_state satisfies the expectation constraints exactly") {
  RandomSource rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_below(4));
    const std::vector<double> z = random_z(m, rng);
    DensityMatrix rho = init_state(z);
    for (int k = 1; k <= m; ++k) {
      CHECK(std::abs(z_expectation(rho, k) - z[static_cast<std::size_t>(k - 1)]) < 1e-12);
    }
  }
}

TEST_CASE("init_state from a dichotomic word vector is pure") {
  // z = +-1 everywhere gives a pure product state: entropy 0, purity 1
  const std::vector<double> z = {-1, 1, 1, -1, 1, 1, -1};
  DensityMatrix rho = init_state(z);
  CHECK(rho.dim() == 128);
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(rho) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rho.min_eigenvalue() >= -1e-10);
}

TEST_CASE("von Neumann entropy") {
  {
    ComplexMatrix mixed = 0.5 * ComplexMatrix::Identity(2, 2);
    CHECK(von_neumann_entropy(DensityMatrix::from_matrix(mixed)) ==
          doctest::Approx(std::log(2.0)));
  }
  {
    // closed form: S(rho0(z)) = sum_k h((1 + z_k) / 2)
    RandomSource rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<double> z = random_z(4, rng);
      double expected = 0.0;
      for (double zk : z) expected += binary_entropy(0.5 * (1.0 + zk));
      CHECK(von_neumann_entropy(init_state(z)) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("pauli_string") {
  SUBCASE("single site z") {
    const std::pair<PauliAxis, int> f{PauliAxis::Z, 1};
    ComplexMatrix p = pauli_string({&f, 1}, 1);
    CHECK(p(0, 0).real() == doctest::Approx(1.0));
    CHECK(p(1, 1).real() == doctest::Approx(-1.0));
  }
  SUBCASE("two-site zz") {
    const std::vector<std::pair<PauliAxis, int>> f{{PauliAxis::Z, 1}, {PauliAxis::Z, 2}};
    ComplexMatrix p = pauli_string(f, 2);
    CHECK(p(0, 0).real() == doctest::Approx(1.0));
    CHECK(p(1, 1).real() == doctest::Approx(-1.0));
    CHECK(p(2, 2).real() == doctest::Approx(-1.0));
    CHECK(p(3, 3).real() == doctest::Approx(1.0));
  }
  SUBCASE("involutive and traceless") {
    RandomSource rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 2 + static_cast<int>(rng.uniform_below(3));
      std::vector<std::pair<PauliAxis, int>> factors;
      for (int k = 1; k <= m; ++k) {
        if (rng.uniform01() < 0.6) {
          factors.emplace_back(static_cast<PauliAxis>(rng.uniform_below(3)), k);
        }
      }
      if (factors.empty()) factors.emplace_back(PauliAxis::X, 1);
      ComplexMatrix p = pauli_string(factors, m);
      CHECK(std::abs(p.trace()) < 1e-12);
      CHECK((p * p - ComplexMatrix::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("errors") {
    const std::pair<PauliAxis, int> out{PauliAxis::X, 3};
    CHECK_THROWS_AS(pauli_string({&out, 1}, 2), std::invalid_argument);
    const std::vector<std::pair<PauliAxis, int>> dup{{PauliAxis::X, 1}, {PauliAxis::Z, 1}};
    CHECK_THROWS_AS(pauli_string(dup, 2), std::invalid_argument);
  }
}

TEST_CASE("GOE reservoir") {
  SUBCASE("sigma -> 0 gives the zero matrix") {
    Hamiltonian h = build_goe(3, 0.0, 4);
    CHECK(h.matrix.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("deterministic in the seed") {
    Hamiltonian a = build_goe(5, 0.1, 99);
    Hamiltonian b = build_goe(5, 0.1, 99);
    CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
    Hamiltonian c = build_goe(5, 0.1, 100);
    CHECK((a.matrix - c.matrix).cwiseAbs().maxCoeff() > 0.0);
  }
  SUBCASE("real symmetric with the requested entry variance") {
    const double sigma = 0.1;
    Hamiltonian h = build_goe(7, sigma, 2024);
    CHECK((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.matrix.imag().cwiseAbs().maxCoeff() == 0.0);
    // sample variance of the strict upper triangle: 8128 entries
    double sum = 0.0, sum2 = 0.0;
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < h.matrix.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < h.matrix.cols(); ++j) {
        const double v = h.matrix(i, j).real();
        sum += v;
        sum2 += v * v;
        ++n;
      }
    }
    const double mean = sum / double(n);
    const double var = sum2 / double(n) - mean * mean;
    CHECK(var == doctest::Approx(sigma).epsilon(0.2));
  }
  SUBCASE("textbook diagonal convention doubles the diagonal variance") {
    const double sigma = 0.5;
    Hamiltonian lit = build_goe(6, sigma, 31, false);
    Hamiltonian txt = build_goe(6, sigma, 31, true);
    double lit2 = 0.0, txt2 = 0.0;
    for (Eigen::Index i = 0; i < lit.matrix.rows(); ++i) {
      lit2 += lit.matrix(i, i).real() * lit.matrix(i, i).real();
      txt2 += txt.matrix(i, i).real() * txt.matrix(i, i).real();
    }
    CHECK(txt2 / lit2 == doctest::Approx(2.0).epsilon(1e-12));
    // off-diagonals identical
    CHECK((lit.matrix - txt.matrix).cwiseAbs().maxCoeff() ==
          doctest::Approx((lit.matrix - txt.matrix).diagonal().cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("Ising chain") {
  SUBCASE("m=2, J=1 only") {
    Hamiltonian h = build_ising(2, 1.0, 0.0, 0.0);
    CHECK(h.matrix(0, 0).real() == doctest::Approx(1.0));
    CHECK(h.matrix(1, 1).real() == doctest::Approx(-1.0));
    CHECK(h.matrix(2, 2).real() == doctest::Approx(-1.0));
    CHECK(h.matrix(3, 3).real() == doctest::Approx(1.0));
    CHECK(h.matrix.cwiseAbs().sum() == doctest::Approx(4.0));  // diagonal only
  }
  SUBCASE("B_x = 0 is diagonal in the computational basis") {
    Hamiltonian h = build_ising(4, -1.0, 1.5, 0.0);
    ComplexMatrix off = h.matrix;
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("matches an independent Kronecker-sum oracle at the benchmark parameters") {
    const int m = 7;
    const double J = -1.0, Bz = 1.5, Bx = 0.7;
    Hamiltonian h = build_ising(m, J, Bz, Bx);

    ComplexMatrix expected = ComplexMatrix::Zero(1 << m, 1 << m);
    auto embedded = [&](char axis, int site) {
      std::vector<Eigen::Matrix2cd> fs(m, Eigen::Matrix2cd::Identity());
      fs[static_cast<std::size_t>(site - 1)] = oracle_pauli(axis);
      return oracle_kron_chain(fs);
    };
    for (int k = 1; k < m; ++k) {
      std::vector<Eigen::Matrix2cd> fs(m, Eigen::Matrix2cd::Identity());
      fs[static_cast<std::size_t>(k - 1)] = oracle_pauli('z');
      fs[static_cast<std::size_t>(k)] = oracle_pauli('z');
      expected += J * oracle_kron_chain(fs);
    }
    for (int k = 1; k <= m; ++k) expected += Bz * embedded('z', k);
    for (int k = 1; k <= m; ++k) expected += Bx * embedded('x', k);

    CHECK((h.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);

    // ground-state energy agrees between the two constructions
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ours(h.matrix, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(expected, Eigen::EigenvaluesOnly);
    CHECK(ours.eigenvalues().minCoeff() ==
          doctest::Approx(oracle.eigenvalues().minCoeff()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_ising(1, 1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("attention Hamiltonian") {
  SUBCASE("zero couplings give the zero matrix") {
    const std::vector<double> z = {1, -1, 1};
    Hamiltonian h = build_attention(z, 0.0, 0.0, AttentionTopology::AllPairs);
    CHECK(h.matrix.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("m=2 hand evaluation") {
    // -(Z x I + I x Z) - Z x Z with z = (+1, +1):
    // diag(-(2) - 1, -(0) + 1, -(0) + 1, -(-2) - 1) = (-3, 1, 1, 1)
    const std::vector<double> z = {1.0, 1.0};
    for (auto topo : {AttentionTopology::AllPairs, AttentionTopology::Chain}) {
      Hamiltonian h = build_attention(z, 1.0, 1.0, topo);
      CHECK(h.matrix(0, 0).real() == doctest::Approx(-3.0));
      CHECK(h.matrix(1, 1).real() == doctest::Approx(1.0));
      CHECK(h.matrix(2, 2).real() == doctest::Approx(1.0));
      CHECK(h.matrix(3, 3).real() == doctest::Approx(1.0));
      CHECK(std::abs(h.matrix.trace()) < 1e-12);  // sum of traceless terms
    }
  }
  SUBCASE("pair-term counts: 6 for the chain, 21 all-pairs at m=7") {
    // with g1 = 0 the diagonal is a sum of g2-weighted pair terms; compare
    // against explicit sums over the two index sets
    RandomSource rng(8);
    const std::vector<double> z = random_z(7, rng);
    Hamiltonian chain = build_attention(z, 0.0, 1.0, AttentionTopology::Chain);
    Hamiltonian pairs = build_attention(z, 0.0, 1.0, AttentionTopology::AllPairs);

    auto zz = [&](int a, int b) {
      std::vector<std::pair<PauliAxis, int>> f{{PauliAxis::Z, a}, {PauliAxis::Z, b}};
      return pauli_string(f, 7);
    };
    ComplexMatrix chain_expected = ComplexMatrix::Zero(128, 128);
    int chain_terms = 0;
    for (int k = 1; k < 7; ++k) {
      chain_expected -= z[k - 1] * z[k] * zz(k, k + 1);
      ++chain_terms;
    }
    ComplexMatrix pairs_expected = ComplexMatrix::Zero(128, 128);
    int pair_terms = 0;
    for (int a = 2; a <= 7; ++a) {
      for (int b = 1; b < a; ++b) {
        pairs_expected -= z[a - 1] * z[b - 1] * zz(a, b);
        ++pair_terms;
      }
    }
    CHECK(chain_terms == 6);
    CHECK(pair_terms == 21);
    CHECK((chain.matrix - chain_expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((pairs.matrix - pairs_expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("commutes with every z-string; Ising with B_x does not") {
    RandomSource rng(21);
    const std::vector<double> z = random_z(4, rng);
    Hamiltonian att = build_attention(z, 0.3, 0.7, AttentionTopology::AllPairs);
    std::vector<std::pair<PauliAxis, int>> f{{PauliAxis::Z, 1}, {PauliAxis::Z, 3}};
    ComplexMatrix zs = pauli_string(f, 4);
    CHECK((att.matrix * zs - zs * att.matrix).cwiseAbs().maxCoeff() < 1e-12);

    Hamiltonian ising = build_ising(4, -1.0, 1.5, 0.7);
    ComplexMatrix comm = ising.matrix * att.matrix - att.matrix * ising.matrix;
    CHECK(comm.cwiseAbs().maxCoeff() > 1e-6);
  }
}

TEST_CASE("evolution") {
  SUBCASE("tau = 0 is the identity map") {
    const std::vector<double> z = {0.3, -0.7};
    DensityMatrix rho = init_state(z);
    Hamiltonian h = build_ising(2, 1.0, 0.5, 0.3);
    DensityMatrix out = evolve(rho, h, 0.0);
    CHECK((out.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("Rabi flip: H = sigma_x, tau = pi/2 sends |0><0| to |1><1|") {
    const double z[] = {1.0};
    DensityMatrix rho = init_state(z);
    const std::pair<PauliAxis, int> f{PauliAxis::X, 1};
    Hamiltonian h = Hamiltonian::from_matrix(pauli_string({&f, 1}, 1), SumProvenance{{"test"}});
    DensityMatrix out = evolve(rho, h, std::numbers::pi / 2.0);
    CHECK(out.matrix()(0, 0).real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(out.matrix()(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("maximally mixed state is a fixed point") {
    ComplexMatrix mixed = ComplexMatrix::Identity(8, 8) / 8.0;
    DensityMatrix rho = DensityMatrix::from_matrix(mixed);
    Hamiltonian h = build_goe(3, 0.5, 77);
    DensityMatrix out = evolve(rho, h, 3.21);
    CHECK((out.matrix() - mixed).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("conservation laws and the group property") {
    RandomSource rng(13);
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<double> z = random_z(3, rng);
      DensityMatrix rho = init_state(z);
      Hamiltonian h = build_goe(3, 0.2, 1000 + trial) +
                      build_attention(z, 0.1, 0.4, AttentionTopology::AllPairs);
      const double tau1 = 5.0 * rng.uniform01();
      const double tau2 = 5.0 * rng.uniform01();

      DensityMatrix direct = evolve(rho, h, tau1 + tau2);
      DensityMatrix stepped = evolve(evolve(rho, h, tau1), h, tau2);
      CHECK((direct.matrix() - stepped.matrix()).cwiseAbs().maxCoeff() < 1e-9);

      CHECK(std::abs(direct.matrix().trace().real() - 1.0) < 1e-10);
      CHECK(std::abs(direct.purity() - rho.purity()) < 1e-10);
      const double e0 = oracle_trace_product(rho.matrix(), h.matrix).real();
      const double e1 = oracle_trace_product(direct.matrix(), h.matrix).real();
      CHECK(std::abs(e1 - e0) < 1e-10);
      CHECK(direct.min_eigenvalue() >= -1e-10);
    }
  }
  SUBCASE("propagator unitarity") {
    Hamiltonian h = build_goe(4, 0.3, 55);
    ComplexMatrix u = propagator(h, 7.7);
    CHECK((u * u.adjoint() - ComplexMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("non-Hermitian input is rejected") {
    ComplexMatrix bad(2, 2);
    bad << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(Hamiltonian::from_matrix(bad, SumProvenance{{}}), std::invalid_argument);
  }
}

TEST_CASE("hamiltonian JSON dump carries provenance and full-precision entries") {
  const std::vector<double> z = {1.0, -1.0};
  Hamiltonian h = build_ising(2, -1.0, 1.5, 0.7) +
                  build_attention(z, 2.0, 2.0, AttentionTopology::Chain);
  const nlohmann::json j = to_json(h);
  CHECK(j.at("dim") == 4);
  CHECK(j.at("entries").size() == 16);
  const std::string provenance = j.at("provenance").get<std::string>();
  CHECK(provenance.find("ising") != std::string::npos);
  CHECK(provenance.find("attention") != std::string::npos);
  // entry (0,0): ising diagonal -1 + 2*1.5 = 2; attention -2(z1) - ... check
  // round-trip instead of hand values for the rest
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      const auto& e = j.at("entries")[static_cast<std::size_t>(4 * r + c)];
      CHECK(e[0].get<double>() == h.matrix(r, c).real());
      CHECK(e[1].get<double>() == h.matrix(r, c).imag());
    }
  }
}

TEST_CASE("maximum-entropy optimality against constrained random competitors") {
  // Feasible competitors: rho = alpha * rho_random + (1 - alpha) * rho0(w)
  // with w adjusted so the sigma_z constraints still hold exactly.
  RandomSource rng(2718);
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::vector<double> z = random_z(m, rng, 0.9);
      DensityMatrix rho0 = init_state(z);
      const double s_opt = von_neumann_entropy(rho0);

      const double alpha = 0.05 + 0.04 * rng.uniform01();
      ComplexMatrix random_part = eqcm::testing::random_density(m, rng);
      std::vector<double> w(z.size());
      bool feasible = true;
      for (int k = 1; k <= m; ++k) {
        const double vk =
            oracle_trace_product(random_part,
                                 pauli_string(std::vector<std::pair<PauliAxis, int>>{
                                                  {PauliAxis::Z, k}},
                                              m))
                .real();
        w[static_cast<std::size_t>(k - 1)] = (z[static_cast<std::size_t>(k - 1)] - alpha * vk) /
                                             (1.0 - alpha);
        if (std::abs(w[static_cast<std::size_t>(k - 1)]) > 1.0) feasible = false;
      }
      if (!feasible) continue;

      ComplexMatrix competitor =
          alpha * random_part + (1.0 - alpha) * init_state(w).matrix();
      DensityMatrix rho_c = DensityMatrix::from_matrix(competitor);
      // competitor satisfies the same constraints...
      for (int k = 1; k <= m; ++k) {
        CHECK(std::abs(z_expectation(rho_c, k) - z[static_cast<std::size_t>(k - 1)]) < 1e-10);
      }
      // ...and never beats the product state's entropy
      CHECK(von_neumann_entropy(rho_c) <= s_opt + 1e-9);
    }
  }

  // m = 1 exhaustive slice: fixed diagonal, scan the off-diagonal disc
  for (double zv : {-0.6, 0.0, 0.4, 0.8}) {
    const double z1[] = {zv};
    const double s_opt = von_neumann_entropy(init_state(z1));
    const double rmax = 0.5 * std::sqrt(1.0 - zv * zv);
    for (int step = 1; step <= 10; ++step) {
      const double r = rmax * step / 10.0 * 0.999;
      ComplexMatrix rho(2, 2);
      rho << 0.5 * (1 + zv), r, r, 0.5 * (1 - zv);
      CHECK(von_neumann_entropy(DensityMatrix::from_matrix(rho)) <= s_opt + 1e-9);
    }
  }
}
