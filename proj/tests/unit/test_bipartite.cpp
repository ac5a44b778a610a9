#include "helpers.hpp"

#include "entanglia/bipartite.hpp"
#include "entanglia/ghzw.hpp"
#include "entanglia/multiqubit.hpp"

using namespace entanglia;

namespace {
DensityMatrix product_state(Rng& rng) {
  return kron(projector(random_state({2}, rng)), projector(random_state({3}, rng)));
}

DensityMatrix separable_mixture(const Dims& dims, int terms, Rng& rng) {
  std::uniform_real_distribution<double> un(0.1, 1.0);
  Mat m = Mat::Zero(total_dim(dims), total_dim(dims));
  double tot = 0;
  for (int k = 0; k < terms; ++k) {
    double p = un(rng);
    tot += p;
    m += p * kron(random_density({dims[0]}, rng), random_density({dims[1]}, rng)).m;
  }
  return DensityMatrix(dims, m / tot);
}

DensityMatrix noisy(const DensityMatrix& rho, double p) {
  long D = rho.m.rows();
  return DensityMatrix(rho.dims, (1 - p) * rho.m + p * Mat::Identity(D, D) / double(D));
}

double ppt1(double g, double w) { return -135 * g * g - 15 * w * w - 6 * g * w - 18 * g + 6 * w + 9; }
double ppt2(double g, double w) { return -27 * g * g - 119 * w * w - 18 * g * w + 18 * g - 18 * w + 9; }
}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("product states pass everything") {
  Rng rng(1);
  DensityMatrix rho = product_state(rng);
  CHECK(majorization_criterion(rho, {0}).holds);
  CHECK(entropy_criterion(rho, {0}, EntropyFamily::tsallis(2)).holds);
  PptResult p = ppt_criterion(rho, {0});
  CHECK(p.verdict.holds);
  CHECK(p.negativity < 1e-12);
  CHECK(reduction_criterion(rho, {1}).holds);
  CriterionVerdict r = reshuffling_criterion(rho, {0});
  CHECK(r.holds);
  CHECK(std::abs(r.margins[0]) < 1e-12);  // pure product: trace norm exactly 1
}

TEST_CASE("Bell state fails everything") {
  DensityMatrix b = projector(th::bell());
  PptResult p = ppt_criterion(b, {0});
  CHECK_FALSE(p.verdict.holds);
  CHECK(p.negativity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(negativity(b, {1}) == doctest::Approx(1.0).epsilon(1e-12));
  CriterionVerdict r = reshuffling_criterion(b, {0});
  CHECK_FALSE(r.holds);
  CHECK(r.margins[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(entropy_criterion(b, {0}, EntropyFamily::tsallis(2)).holds);
  CHECK_FALSE(reduction_criterion(b, {0}).holds);
  CHECK_FALSE(majorization_criterion(b, {0}).holds);
}

TEST_CASE("white noise and diagonal states") {
  DensityMatrix noise({2, 2}, Mat::Identity(4, 4) / 4.0);
  for (double q : {0.5, 2.0, 7.0})
    CHECK(entropy_criterion(noise, {0}, EntropyFamily::renyi(q)).holds);
  Mat d = Mat::Zero(4, 4);
  d(0, 0) = 0.4; d(1, 1) = 0.1; d(2, 2) = 0.3; d(3, 3) = 0.2;
  PptResult p = ppt_criterion(DensityMatrix({2, 2}, d), {0});
  CHECK(p.verdict.holds);
  CHECK(p.negativity < 1e-14);
}

TEST_CASE("majorization on the noisy family") {
  DensityMatrix a = build_ghzw({0.1, 0.1});
  CHECK(majorization_criterion(a, {0}).holds);
  CHECK(0.1 <= 3.0 / 11 - 3.0 * 0.1 / 11);
  DensityMatrix ghz = build_ghzw({1.0, 0.0});
  CHECK_FALSE(majorization_criterion(ghz, {0}).holds);
  CHECK_FALSE(majorization_criterion(ghz, {1, 2}).holds);
  // the pure GHZ spectrum fails against both halves separately
  RVec p = herm_spectrum(ghz);
  CHECK(majorizes(p, herm_spectrum(reduced(ghz, {0}))) == Majorization::SecondMajorized);
  CHECK(majorizes(p, herm_spectrum(reduced(ghz, {1, 2}))) == Majorization::SecondMajorized);
}

TEST_CASE("Chebyshev entropy criterion on the noisy family matches majorization columns") {
  // q -> infinity: largest eigenvalue of rho below that of each marginal
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; i + j <= 20; ++j) {
      SimplexPoint pt{i / 20.0, j / 20.0};
      DensityMatrix rho = build_ghzw(pt);
      double lmax = herm_spectrum(rho)(0);
      double l1 = herm_spectrum(reduced(rho, {0}))(0);
      double l23 = herm_spectrum(reduced(rho, {1, 2}))(0);
      CriterionVerdict v = entropy_criterion(rho, {0}, EntropyFamily::chebyshev());
      CHECK(v.margins[0] == doctest::Approx(std::log(l1 / lmax)).epsilon(1e-12));
      CHECK(v.margins[1] == doctest::Approx(std::log(l23 / lmax)).epsilon(1e-12));
    }
}

TEST_CASE("PPT region of the noisy family") {
  int agree = 0, total = 0;
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; i + j <= 60; ++j) {
      double g = i / 60.0, w = j / 60.0;
      double a = ppt1(g, w), b = ppt2(g, w);
      if (std::abs(a) < 1e-6 || std::abs(b) < 1e-6) continue;
      bool want = a >= 0 && b >= 0;
      ++total;
      agree += ppt_criterion(build_ghzw({g, w}), {0}).verdict.holds == want;
      // all three one-qubit cuts agree by permutation symmetry
      CHECK(ppt_criterion(build_ghzw({g, w}), {2}).verdict.holds == want);
    }
  CHECK(agree == total);
}

TEST_CASE("reduction criterion on the noisy family") {
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; i + j <= 40; ++j) {
      SimplexPoint p{i / 40.0, j / 40.0};
      double d = p.dt(), g = p.gt(), w = p.wt();
      DensityMatrix rho = build_ghzw(p);
      Mat right = embed(reduced(rho, {1, 2}).m, rho.dims, {1, 2}) - rho.m;
      RVec s_right = herm_spectrum(right), s_pt = herm_spectrum(partial_transpose(rho, {0}));
      CHECK((s_right - s_pt).cwiseAbs().maxCoeff() < 1e-12);
      Mat left = embed(reduced(rho, {0}).m, rho.dims, {0}) - rho.m;
      double r1 = std::sqrt(4 * g * g + w * w) / 2;
      std::vector<double> want = {3 * d + 1.5 * w + r1, 3 * d + 1.5 * w - r1,
                                  3 * d + g + std::sqrt(2.0) * w, 3 * d + g - std::sqrt(2.0) * w,
                                  3 * d + g + 2 * w, 3 * d + g + 2 * w, 3 * d + g + w, 3 * d + g + w};
      CHECK(th::spectrum_gap(herm_spectrum(left), want) < 1e-12);
      double gg = p.g, ww = p.w;
      double red3 = -63 * gg * gg - 7 * ww * ww - 54 * gg * ww - 162 * gg + 54 * ww + 81;
      double red4 = 3 * gg - (9 + 8 * std::sqrt(2.0)) * ww + 9;
      double lmin = herm_spectrum(left).minCoeff();
      if (std::min(std::abs(red3), std::abs(red4)) > 1e-9 && std::abs(lmin) > 1e-12)
        CHECK((lmin >= 0) == (red3 >= 0 && red4 >= 0));
      CriterionVerdict red = reduction_criterion(rho, {0});
      CriterionVerdict ppt = ppt_criterion(rho, {0}).verdict;
      if (std::abs(ppt.min_margin()) > 1e-10) CHECK(red.holds == ppt.holds);
    }
}

TEST_CASE("reduction and PPT coincide on 2 x 4") {
  Rng rng(7);
  std::uniform_real_distribution<double> un(0.0, 1.0);
  int decided = 0, both = 0;
  for (int k = 0; k < 1000; ++k) {
    DensityMatrix rho = noisy(random_density({2, 4}, rng, 1 + k % 4), un(rng));
    PptResult p = ppt_criterion(rho, {0});
    if (std::abs(p.verdict.min_margin()) < 1e-9) continue;
    ++decided;
    both += reduction_criterion(rho, {0}).holds == p.verdict.holds;
  }
  CHECK(decided > 900);
  CHECK(both == decided);
}

TEST_CASE("entropy criterion holds whenever majorization holds") {
  Rng rng(9);
  std::uniform_real_distribution<double> un(0.0, 1.0);
  int maj_held = 0;
  for (int k = 0; k < 1000; ++k) {
    DensityMatrix rho = noisy(random_density({3, 3}, rng, 1 + k % 9), un(rng));
    if (!majorization_criterion(rho, {0}).holds) continue;
    ++maj_held;
    for (double q : {0.5, 1.0, 2.0, 5.0}) {
      CHECK(entropy_criterion(rho, {0}, EntropyFamily::renyi(q)).holds);
      CHECK(entropy_criterion(rho, {0}, EntropyFamily::tsallis(q)).holds);
    }
    CHECK(entropy_criterion(rho, {0}, EntropyFamily::chebyshev()).holds);
  }
  CHECK(maj_held > 100);
}

TEST_CASE("separable mixtures are PPT") {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    CHECK(ppt_criterion(separable_mixture({2, 2}, 1 + k % 6, rng), {0}).verdict.holds);
    CHECK(ppt_criterion(separable_mixture({2, 3}, 1 + k % 8, rng), {1}).verdict.holds);
    CHECK(reshuffling_criterion(separable_mixture({2, 3}, 1 + k % 5, rng), {0}).holds);
  }
}

TEST_CASE("criteria reject improper cuts") {
  DensityMatrix b = projector(th::bell());
  CHECK_THROWS_AS(ppt_criterion(b, {}), StateError);
  CHECK_THROWS_AS(reduction_criterion(b, {0, 1}), StateError);
}

TEST_CASE("verdict tolerance") {
  CHECK(CriterionVerdict::make("x", {0.3, -5e-10}).holds);
  CHECK_FALSE(CriterionVerdict::make("x", {0.3, -2e-9}).holds);
  CHECK(CriterionVerdict::make("x", {0.3, -2e-9}).min_margin() == -2e-9);
}

}  // TEST_SUITE
