#include "helpers.hpp"

#include "entanglia/bipartite.hpp"
#include "entanglia/fermionic.hpp"
#include "entanglia/mixedness.hpp"
#include "entanglia/twoqubit.hpp"

using namespace entanglia;

namespace {
FermionicParams random_params(Rng& rng) {
  FermionicParams p;
  Vec v = random_gaussian_vec(6, rng).normalized();
  p.w = v.head(3);
  p.z = v.tail(3);
  return p;
}

cplx sq(const C3& v) { return (v.array() * v.array()).sum(); }
}  // namespace

TEST_SUITE("fermionic") {

TEST_CASE("closed-form state has the expected algebra") {
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    FermionicParams p = random_params(rng);
    FermionicBuild b = fermionic_build(p);
    CHECK(b.normalized);
    CHECK(std::abs(b.psi.norm2() - 1.0) < 1e-12);
    Mat want = (Mat::Identity(4, 4) + b.lambda) / 4.0;
    CHECK(th::max_abs(b.rho.m - want) < 1e-12);
    double e2 = b.derived.eta * b.derived.eta;
    CHECK(th::max_abs(b.lambda * b.lambda - (1 - e2) * Mat::Identity(4, 4)) < 1e-12);
    CHECK(b.derived.eta <= 1 + 1e-12);
    CHECK(b.derived.gamma_plus == doctest::Approx(b.derived.r + b.derived.s));
  }
}

TEST_CASE("derived quantities") {
  FermionicParams same;
  same.w << 0.5, cplx(0, 0.1), 0.2;
  same.z = same.w;
  same.w /= std::sqrt(2 * same.w.squaredNorm());
  same.z = same.w;
  CHECK(fermionic_derived(same).eta < 1e-14);
  for (double th : {0.2, 0.7, 1.3})
    for (double ph : {0.4, 1.0, 2.5}) {
      FermionicDerived d = fermionic_derived(fermionic_two_param(th, ph));
      CHECK(d.r == doctest::Approx(std::cos(th) * std::cos(th) * std::sin(ph)).epsilon(1e-12));
      CHECK(d.s == doctest::Approx(std::sin(th) * std::sin(th) * std::sin(ph)).epsilon(1e-12));
    }
  // w^2 = z^2 = 0 gives gamma_+ = 1
  FermionicParams iso;
  iso.w << 1.0, cplx(0, 1), 0.0;
  iso.z << 0.0, 1.0, cplx(0, 1);
  iso.w *= 0.5;
  iso.z *= 0.5;
  CHECK(fermionic_derived(iso).gamma_plus == doctest::Approx(1.0).epsilon(1e-12));
  FermionicParams bad;
  bad.w << 1.0, 1.0, 0.0;
  CHECK_FALSE(fermionic_build(bad).normalized);
}

TEST_CASE("measures at the maximal point and in the separable regime") {
  FermionicDerived top;
  top.gamma_plus = 1;
  FermionicMeasures m = fermionic_measures(top);
  CHECK(m.concurrence == doctest::Approx(0.5));
  CHECK(m.negativity == doctest::Approx((std::sqrt(2.0) - 1) / 2));
  FermionicMeasures sat = fermionic_measures(fermionic_derived(fermionic_two_param(M_PI / 4, M_PI / 2)));
  // gamma+ lands one ulp below 1 and sqrt(1 - gamma+^2) lifts that to ~1e-8
  CHECK(sat.lower_bound == doctest::Approx(sat.negativity).epsilon(1e-7));
  CHECK(sat.upper_bound == doctest::Approx(sat.negativity).epsilon(1e-12));
  Rng rng(2);
  int seen = 0;
  for (int k = 0; k < 500; ++k) {
    FermionicDerived d = fermionic_derived(random_params(rng));
    if (d.eta * d.eta < 4 * d.r * d.s) continue;
    ++seen;
    CHECK(fermionic_measures(d).concurrence == 0.0);
  }
  CHECK(seen > 0);
  FermionicDerived wrong;
  wrong.eta = 1.5;
  CHECK_THROWS_AS(fermionic_measures(wrong), StateError);
}

TEST_CASE("closed forms against direct computation") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    FermionicBuild b = fermionic_build(random_params(rng));
    FermionicMeasures m = fermionic_measures(b.derived);
    CHECK(std::abs(m.concurrence - wootters_concurrence(b.rho)) < 1e-8);
    CHECK(std::abs(m.negativity - negativity(b.rho, {0})) < 1e-8);
    CHECK(m.concurrence <= 0.5 + 1e-12);
    CHECK(m.lower_bound <= m.negativity + 1e-12);
    CHECK(m.negativity <= m.upper_bound + 1e-12);
    double c2_12 = purity_stats(reduced(b.psi, {0, 1})).concurrence_squared;
    CHECK(c2_12 == doctest::Approx((2 + b.derived.eta * b.derived.eta) / 3).epsilon(1e-10));
  }
}

TEST_CASE("four-qubit monogamy and invariants") {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    FermionicParams p = random_params(rng);
    FermionicDerived d = fermionic_derived(p);
    FermionicMonogamy m = fermionic_monogamy(p);
    CHECK(m.c2_single[0] == doctest::Approx(1 - d.r * d.r).epsilon(1e-10));
    CHECK(m.c2_single[1] == doctest::Approx(1 - d.s * d.s).epsilon(1e-10));
    // pairs 12, 14, 23, 34 share one value
    CHECK(std::abs(m.c2_pair[0] - m.c2_pair[2]) < 1e-8);
    CHECK(std::abs(m.c2_pair[0] - m.c2_pair[3]) < 1e-8);
    CHECK(std::abs(m.c2_pair[0] - m.c2_pair[5]) < 1e-8);
    double z2 = p.z.squaredNorm(), w2 = p.w.squaredNorm();
    double c13 = z2 - std::abs(sq(p.w)), c24 = w2 - std::abs(sq(p.z));
    CHECK(std::abs(m.c2_pair[1] - c13 * c13) < 1e-8);
    CHECK(std::abs(m.c2_pair[4] - c24 * c24) < 1e-8);
    CHECK(m.sigma1 >= -1e-9);
    CHECK(m.sigma2 >= -1e-9);
    CHECK(std::abs(m.residual1 - m.sigma1) < 1e-8);
    CHECK(std::abs(m.residual2 - m.sigma2) < 1e-8);
    cplx H = -0.5 * (sq(p.z) + sq(p.w));
    cplx L = (sq(p.z) - sq(p.w)) * (sq(p.z) - sq(p.w)) / 16.0;
    CHECK(std::abs(m.inv.H - H) < 1e-10);
    CHECK(std::abs(m.inv.L - L) < 1e-10);
    CHECK(std::abs(m.inv.M) < 1e-10);
    CHECK(std::abs(m.inv.D) < 1e-10);
    CHECK(std::abs(m.inv.L + m.inv.M + m.inv.N) < 1e-10);
    CHECK(std::abs(std::abs(m.inv.L) - d.eta * d.eta / 16) < 1e-10);
  }
}

TEST_CASE("four-qubit invariants on a generic vector") {
  Rng rng(5);
  StateVector psi = random_state({2, 2, 2, 2}, rng);
  FourQubitInvariants v = four_qubit_invariants(psi);
  // L + M + N = 0 holds for every vector
  CHECK(std::abs(v.L + v.M + v.N) < 1e-12);
  CHECK(std::abs(v.M) > 1e-6);
  CHECK_THROWS_AS(four_qubit_invariants(random_state({2, 2, 2}, rng)), StateError);
}

}  // TEST_SUITE
