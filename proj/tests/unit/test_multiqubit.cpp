#include "helpers.hpp"

#include "entanglia/bipartite.hpp"
#include "entanglia/ghzw.hpp"
#include "entanglia/multiqubit.hpp"

using namespace entanglia;

namespace {
DensityMatrix symmetrized(const DensityMatrix& rho) {
  Mat acc = Mat::Zero(8, 8);
  std::vector<int> p = {0, 1, 2};
  do {
    acc += reorder(rho, p).m;
  } while (std::next_permutation(p.begin(), p.end()));
  return DensityMatrix(rho.dims, acc / 6.0);
}

DensityMatrix product3(Rng& rng) {
  return kron(kron(projector(random_state({2}, rng)), projector(random_state({2}, rng))),
              projector(random_state({2}, rng)));
}

bool clear(double x) { return std::abs(x) > 1e-7; }
}  // namespace

TEST_SUITE("multiqubit") {

TEST_CASE("settings") {
  CHECK_NOTHROW(SpinSetting::setting_I().validate());
  CHECK_NOTHROW(SpinSetting::setting_II().validate());
  CHECK_NOTHROW(SpinSetting::setting_III().validate());
  SpinSetting bad = SpinSetting::uniform(3, {pauli(1), pauli(1), pauli(3)});
  CHECK_THROWS_AS(bad.validate(), StateError);
  SpinSetting scaled = SpinSetting::uniform(3, {2.0 * pauli(1), pauli(2), pauli(3)});
  CHECK_THROWS_AS(scaled.validate(), StateError);
  // right-handed Pauli algebra
  CHECK(th::max_abs(pauli(1) * pauli(2) - cplx(0, 1) * pauli(3)) < 1e-15);
  CHECK(th::max_abs(pauli(2) * pauli(3) - cplx(0, 1) * pauli(1)) < 1e-15);
}

TEST_CASE("observable family") {
  SuOperators ops = su_operators(SpinSetting::setting_I());
  REQUIRE(ops.X.size() == 4);
  for (int x = 0; x < 4; ++x)
    for (const Mat* m : {&ops.X[x], &ops.Y[x], &ops.Z[x], &ops.I[x]}) {
      CHECK(m->rows() == 8);
      CHECK(th::max_abs(*m - m->adjoint()) < 1e-15);
    }
  Rng rng(1);
  for (int k = 0; k < 10; ++k) {
    DensityMatrix rho = symmetrized(random_density({2, 2, 2}, rng));
    double e[4];
    for (int x = 0; x < 4; ++x) {
      double a = (rho.m * ops.X[x]).trace().real();
      e[x] = a * a;
    }
    CHECK(std::abs(e[1] - e[2]) < 1e-12);
    CHECK(std::abs(e[1] - e[3]) < 1e-12);
  }
}

TEST_CASE("fully separable states pass every tripartite test") {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    DensityMatrix rho = product3(rng);
    for (auto s : {SpinSetting::setting_I(), SpinSetting::setting_II(), SpinSetting::setting_III()}) {
      SuVerdicts v = su_criteria(rho, s);
      CHECK(v.bisep.holds);
      CHECK(v.all_bipartitions.holds);
      CHECK(v.fullsep.holds);
    }
    for (auto& v : gs_matrix_criteria(rho)) CHECK(v.holds);
    for (auto& v : permutation_criterion(rho)) CHECK(v.holds);
    for (int kk : {2, 3}) {
      CHECK(gabriel_criterion(rho, kk, phi_ghz()).holds);
      CHECK(gabriel_criterion(rho, kk, phi_w()).holds);
    }
  }
  // diagonal product: matrix-element tests sit exactly on equality for the pure product
  DensityMatrix diag = projector(basis_state({2, 2, 2}, {0, 1, 1}));
  for (auto& v : gs_matrix_criteria(diag)) CHECK(v.holds);
}

TEST_CASE("white noise passes everything") {
  DensityMatrix rho = build_ghzw({0, 0});
  SuVerdicts v = su_criteria(rho, SpinSetting::setting_I());
  CHECK(v.fullsep.holds);
  for (auto& c : gs_matrix_criteria(rho)) CHECK(c.holds);
  for (auto& c : permutation_criterion(rho)) CHECK(c.holds);
  for (auto& c : witness_criteria(rho)) CHECK(c.holds);
  CHECK(gabriel_criterion(rho, 3, phi_w()).holds);
}

TEST_CASE("spin criteria on the noisy family") {
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; i + j <= 40; ++j) {
      SimplexPoint p{i / 40.0, j / 40.0};
      GhzwClosedForms c = ghzw_closed_forms(p);
      DensityMatrix rho = build_ghzw(p);
      SuVerdicts s1 = su_criteria(rho, SpinSetting::setting_I());
      SuVerdicts s2 = su_criteria(rho, SpinSetting::setting_II());
      if (clear(c.su21_poly)) CHECK(s1.bisep.holds == (c.su21_poly >= 0));
      if (clear(c.su22_poly)) CHECK(s2.bisep.holds == (c.su22_poly >= 0));
      if (clear(c.su283_2)) CHECK(s2.all_bipartitions.holds == (c.su283_2 >= 0));
      // setting I on all bipartitions: min diagonal product minus g~^2
      double d = p.dt(), g = p.gt(), w = p.wt();
      double su = std::min((d + g) * (d + g), d * (d + w)) - g * g;
      CHECK(std::abs(s1.all_bipartitions.margins[0] / 4 - su) < 1e-12);
      // equal to the PPT block determinant wherever that block binds
      if (d * (d + w) <= (d + g) * (d + g))
        CHECK(std::abs(s1.all_bipartitions.margins[0] / 4 - c.ppt_det) < 1e-12);
      if (clear(c.ppt_det)) CHECK(s1.all_bipartitions.holds == (c.ppt_det >= 0));
      // 2-separability: g~ <= 3 sqrt(d~(d~+w~))
      double m = 3 * std::sqrt(p.dt() * (p.dt() + p.wt())) - p.gt();
      if (clear(m)) CHECK(s1.bisep.holds == (m >= 0));
      // swap-operator criterion with the GHZ vector
      CriterionVerdict gab = gabriel_criterion(rho, 2, phi_ghz());
      CHECK(std::abs(gab.margins[0] - s1.bisep.margins[0] / 2) < 1e-12);
      CriterionVerdict gw = gabriel_criterion(rho, 3, phi_w());
      if (clear(c.su283_2)) CHECK(gw.holds == (c.su283_2 >= 0));
    }
}

TEST_CASE("matrix-element criteria on the noisy family") {
  CHECK(gs_full_sep_variants().size() == 13);
  for (int i = 0; i <= 30; ++i)
    for (int j = 0; i + j <= 30; ++j) {
      SimplexPoint p{i / 30.0, j / 30.0};
      double d = std::max(0.0, p.dt()), g = p.gt(), w = p.wt();
      DensityMatrix rho = build_ghzw(p);
      double gs22 = std::sqrt((d + g) * d) + (d + w) / 2 - w;
      double gs311 = std::pow((d + g) * d * d * d, 0.25) - g;
      CHECK(std::abs(gs_criterion(rho, "gs2b").margins[0] - 3 * gs22) < 1e-12);
      CHECK(std::abs(gs_criterion(rho, "gs3.1g:r4.5").margins[0] - gs311) < 1e-12);
    }
  CHECK_THROWS_AS(gs_criterion(build_ghzw({0, 0}), "gs9"), StateError);
}

TEST_CASE("bound entangled point of the noisy family") {
  DensityMatrix rho = build_ghzw({0.2, 0.2});
  // exact entries of 120 rho
  CHECK(std::abs(120.0 * rho.m(0, 0).real() - 21) < 1e-12);
  CHECK(std::abs(120.0 * rho.m(0, 7).real() - 12) < 1e-12);
  CHECK(std::abs(120.0 * rho.m(1, 1).real() - 17) < 1e-12);
  CHECK(std::abs(120.0 * rho.m(1, 2).real() - 8) < 1e-12);
  CHECK(std::abs(120.0 * rho.m(3, 3).real() - 9) < 1e-12);
  CHECK(ppt_criterion(rho, {0}).verdict.min_margin() >= -1e-12);
  CHECK(gs_criterion(rho, "gs3.1g:r4.5").min_margin() < -1e-3);
}

TEST_CASE("permutation tests") {
  REQUIRE(tripartite_permutations().size() == 6);
  for (SimplexPoint p : {SimplexPoint{0.3, 0.1}, SimplexPoint{0.05, 0.6}}) {
    DensityMatrix rho = build_ghzw(p);
    auto v = permutation_criterion(rho);
    double pt = 1 - trace_norm(partial_transpose(rho, {0}).m);
    CHECK(std::abs(v[0].margins[0] - pt) < 1e-12);
    CHECK(std::abs(v[1].margins[0] - pt) < 1e-12);
    CHECK(std::abs(v[2].margins[0] - pt) < 1e-12);
    CHECK(std::abs(v[3].margins[0] - v[4].margins[0]) < 1e-12);
    CHECK(std::abs(v[3].margins[0] - v[5].margins[0]) < 1e-12);
  }
  CHECK_FALSE(permutation_criterion(build_ghzw({0.5, 0.3}))[3].holds);
}

TEST_CASE("witnesses") {
  for (SimplexPoint p : {SimplexPoint{0.1, 0.2}, SimplexPoint{0.7, 0.1}, SimplexPoint{0.0, 0.9}}) {
    auto v = witness_criteria(build_ghzw(p));
    CHECK(v[0].margins[0] == doctest::Approx((5 - 7 * p.g + p.w) / 8).epsilon(1e-12));
    CHECK(v[1].margins[0] == doctest::Approx((13 + 3 * p.g - 21 * p.w) / 24).epsilon(1e-12));
    CHECK(v[2].margins[0] == doctest::Approx((3 - 7 * p.g + p.w) / 8).epsilon(1e-12));
  }
  auto ghz = witness_criteria(build_ghzw({1, 0}));
  CHECK(ghz[0].margins[0] == doctest::Approx(-0.25));
  CHECK_FALSE(ghz[0].holds);
  CHECK(tau_bar_g0() == doctest::Approx(0.626851).epsilon(1e-6));
  CHECK(tau_bar_line_w(tau_bar_g0()) == doctest::Approx(1 - tau_bar_g0()).epsilon(1e-12));
}

TEST_CASE("input validation") {
  Rng rng(3);
  DensityMatrix two = random_density({2, 2}, rng);
  CHECK_THROWS_AS(su_criteria(two, SpinSetting::setting_I()), StateError);
  CHECK_THROWS_AS(gs_matrix_criteria(two), StateError);
  DensityMatrix rho = build_ghzw({0.1, 0.1});
  CHECK_THROWS_AS(gabriel_criterion(rho, 2, ghz_state(6)), StateError);
  CHECK_THROWS_AS(gabriel_criterion(rho, 4, phi_ghz()), StateError);
}

}  // TEST_SUITE
