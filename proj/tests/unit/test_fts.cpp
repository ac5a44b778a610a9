#include "helpers.hpp"

#include "entanglia/fts.hpp"
#include "entanglia/multiqubit.hpp"

using namespace entanglia;

namespace {
// gamma_a by explicit index loops over the antisymmetric symbol
Eigen::Matrix2cd loop_gamma(const StateVector& psi, int a) {
  auto eps = [](int x, int y) { return x == y ? 0.0 : x < y ? 1.0 : -1.0; };
  auto at = [&](int p, int q, int r) { return psi.amps(4 * p + 2 * q + r); };
  Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 2; ++j)
        for (int jp = 0; jp < 2; ++jp)
          for (int k = 0; k < 2; ++k)
            for (int kp = 0; kp < 2; ++kp) {
              double e = eps(j, jp) * eps(k, kp);
              if (e == 0) continue;
              cplx x = a == 0 ? at(i, j, k) * at(ip, jp, kp)
                       : a == 1 ? at(j, i, k) * at(jp, ip, kp)
                                : at(j, k, i) * at(jp, kp, ip);
              g(i, ip) += e * x;
            }
  return g;
}

StateVector w3() {
  Vec v = Vec::Zero(8);
  v(1) = v(2) = v(4) = 1 / std::sqrt(3.0);
  return {{2, 2, 2}, v};
}

StateVector act(const Mat& op, const StateVector& psi) { return {psi.dims, op * psi.amps}; }
}  // namespace

TEST_SUITE("fts") {

TEST_CASE("covariants agree with index loops") {
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    StateVector psi = random_state({2, 2, 2}, rng);
    FtsCovariants c = fts_covariants(psi);
    for (int a = 0; a < 3; ++a) {
      CHECK(th::max_abs(c.gamma[a] - loop_gamma(psi, a)) < 1e-13);
      CHECK(th::max_abs(c.gamma[a] - c.gamma[a].transpose()) < 1e-13);
      CHECK(th::max_abs(fts_T(psi, a) - c.T) < 1e-12);
    }
    // the quartic scalar is -2 Det and the three determinants agree
    CHECK(std::abs(c.q + 2.0 * hyperdeterminant(psi)) < 1e-12);
    CHECK(std::abs(c.gamma[1].determinant() - c.gamma[0].determinant()) < 1e-12);
    CHECK(three_tangle(psi) == doctest::Approx(std::sqrt(fts_invariants(psi).tau2)).epsilon(1e-10));
  }
}

TEST_CASE("GHZ and W values") {
  FtsInvariants g = fts_invariants(ghz_state());
  CHECK(g.y == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.tau2 == doctest::Approx(1.0).epsilon(1e-12));
  for (int a = 0; a < 3; ++a) {
    CHECK(g.c2[a] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.g[a] == doctest::Approx(0.5).epsilon(1e-12));
  }
  FtsInvariants w = fts_invariants(w3());
  CHECK(w.y == doctest::Approx(8.0 / 9).epsilon(1e-12));
  CHECK(w.t == doctest::Approx(16.0 / 27).epsilon(1e-12));
  CHECK(w.tau2 < 1e-24);
  for (int a = 0; a < 3; ++a) {
    CHECK(w.c2[a] == doctest::Approx(8.0 / 9).epsilon(1e-12));
    CHECK(w.g[a] == doctest::Approx(4.0 / 9).epsilon(1e-12));
  }
}

TEST_CASE("biseparable and product vectors") {
  StateVector bi = kron(th::qubit(0.6, 0.8), StateVector({2, 2}, th::bell().amps));
  FtsInvariants v = fts_invariants(bi);
  CHECK(v.c2[0] < 1e-14);
  CHECK(v.c2[1] == doctest::Approx(1.0));
  CHECK(v.g[0] == doctest::Approx(1.0));
  CHECK(v.g[1] < 1e-14);
  CHECK(v.t < 1e-14);
  CHECK(v.tau2 < 1e-14);
  CHECK(slocc_class_pure(bi) == "1|23");
  StateVector p = basis_state({2, 2, 2}, {0, 1, 0});
  CHECK(slocc_class_pure(p) == "1|2|3");
  CHECK(slocc_class_pure(ghz_state()) == "GHZ");
  CHECK(slocc_class_pure(w3()) == "W");
  CHECK(slocc_class_pure(StateVector({2, 2, 2}, Vec::Zero(8))) == "Null");
}

TEST_CASE("classes are stable under local invertible maps") {
  Rng rng(2);
  for (int k = 0; k < 30; ++k) {
    // near-identity factors keep the map well conditioned
    Mat A = Mat::Identity(8, 8);
    for (int site = 0; site < 3; ++site)
      A = local_op({2, 2, 2}, site, Mat::Identity(2, 2) + 0.3 * random_ginibre(2, 2, rng)) * A;
    CHECK(slocc_class_pure(act(A, ghz_state())) == "GHZ");
    CHECK(slocc_class_pure(act(A, w3())) == "W");
    StateVector bi = act(A, kron(th::qubit(1, 0), StateVector({2, 2}, th::bell().amps)));
    CHECK(slocc_class_pure(bi) == "1|23");
  }
}

TEST_CASE("local unitary invariance and homogeneity") {
  Rng rng(3);
  for (int k = 0; k < 30; ++k) {
    StateVector psi = random_state({2, 2, 2}, rng);
    FtsInvariants a = fts_invariants(psi), b = fts_invariants(act(random_local_unitary(psi.dims, rng), psi));
    CHECK(std::abs(a.y - b.y) < 1e-12);
    CHECK(std::abs(a.t - b.t) < 1e-12);
    CHECK(std::abs(a.tau2 - b.tau2) < 1e-12);
    for (int x = 0; x < 3; ++x) CHECK(std::abs(a.g[x] - b.g[x]) < 1e-12);
    FtsInvariants raw = fts_invariants_raw(StateVector(psi.dims, 2.0 * psi.amps));
    CHECK(raw.n == doctest::Approx(4.0));
    CHECK(raw.y == doctest::Approx(16 * a.y));
    CHECK(raw.t == doctest::Approx(64 * a.t));
    CHECK(raw.tau2 == doctest::Approx(256 * a.tau2));
  }
}

TEST_CASE("canonical invariants predict the set") {
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    StateVector psi = random_state({2, 2, 2}, rng);
    FtsInvariants a = fts_invariants(psi);
    CanonicalInvariants c = canonical_invariants(psi);
    FtsInvariants b = fts_from_canonical(c);
    CHECK(std::abs(a.y - b.y) < 1e-10);
    CHECK(std::abs(a.t - b.t) < 1e-10);
    CHECK(std::abs(a.tau2 - b.tau2) < 1e-10);
    for (int x = 0; x < 3; ++x) {
      CHECK(std::abs(a.c2[x] - b.c2[x]) < 1e-10);
      CHECK(std::abs(a.g[x] - b.g[x]) < 1e-10);
    }
    CHECK(std::abs(c.kempe_residual) < 1e-10);
    CHECK(std::abs(c.t_norm_residual) < 1e-10);
  }
}

TEST_CASE("monogamy and reduced concurrences") {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    StateVector psi = random_state({2, 2, 2}, rng);
    for (auto& r : reduced_concurrence_fidelity(psi)) {
      CHECK(std::abs(r.ckw_residual) < 1e-8);
      CHECK(std::abs(r.wootters2 - r.predicted2) < 1e-8);
      CHECK(r.fidelity2 >= r.wootters2 - 1e-12);
    }
  }
  auto w = reduced_concurrence_fidelity(w3());
  CHECK(w[0].wootters2 == doctest::Approx(4.0 / 9));
  CHECK_THROWS_AS(fts_invariants(random_state({2, 2}, rng)), StateError);
}

}  // TEST_SUITE
