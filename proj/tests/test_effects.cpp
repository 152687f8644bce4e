#include <doctest.h>

#include <cmath>
#include <functional>

#include "fuzzycausal/builtins.hpp"
#include "fuzzycausal/effects.hpp"
#include "fuzzycausal/errors.hpp"
#include "fuzzycausal/metrics.hpp"
#include "fuzzycausal/regression.hpp"
#include "fuzzycausal/scm.hpp"

using namespace fuzzycausal;

namespace {

OutcomeCurve analytic_curve(const std::function<double(double)>& f, double lo,
                            double hi, std::size_t points = 201) {
  const auto grid = linspace(lo, hi, points);
  std::vector<double> y;
  y.reserve(grid.size());
  for (double t : grid) y.push_back(f(t));
  return OutcomeCurve(grid, std::move(y),
                      std::vector<double>(grid.size(), 0.0),
                      CurveProvenance::OracleMonteCarlo);
}

ScmSpec linear_scm(double beta) {
  std::vector<ScmVariable> vars;
  vars.push_back({"x", NoiseSpec::normal(2.0, 0.5), ""});
  vars.push_back({"t", NoiseSpec::normal(0.0, 1.0), "0.5 * x"});
  vars.push_back({"y", NoiseSpec::normal(0.0, 1.0),
                  std::to_string(beta) + " * t + 0.8 * x"});
  return ScmSpec(std::move(vars), "t", "y");
}

}  // namespace

TEST_CASE("binary ATE") {
  SUBCASE("sodium oracle curve recovers 1.05") {
    const auto curve = potential_outcome_curve(
        builtins::sodium_scm(), linspace(0.0, 8.0, 9), 10000, RandomSource(0));
    CHECK(std::abs(ate_binary(curve).value - 1.05) <= 0.04);
  }
  SUBCASE("constant curve has zero effect") {
    const auto curve = analytic_curve([](double) { return 4.0; }, 0.0, 5.0);
    CHECK(ate_binary(curve).value == doctest::Approx(0.0));
  }
  SUBCASE("slope of Y = 3T") {
    const auto curve = analytic_curve([](double t) { return 3.0 * t; }, 0.0,
                                      5.0);
    CHECK(ate_binary(curve).value == doctest::Approx(3.0));
  }
  SUBCASE("assumption flags are recorded") {
    const auto curve = analytic_curve([](double t) { return t; }, 0.0, 5.0);
    const auto rep = ate_binary(curve);
    REQUIRE(rep.assumptions.size() == 2);
    CHECK(rep.assumptions[1] == "absolute SUTVA assumed");
  }
}

TEST_CASE("pointwise ATE on a quadratic curve") {
  const double beta = 0.7;
  const auto curve = analytic_curve(
      [&](double t) { return beta * t * t; }, 0.0, 10.0, 401);
  for (double t : {1.0, 2.5, 5.0, 8.0}) {
    CHECK(std::abs(ate_pointwise(curve, t, PointwiseMode::UnitStep) -
                   beta * (2.0 * t + 1.0)) <= 1e-9);
    CHECK(std::abs(ate_pointwise(curve, t, PointwiseMode::Derivative) -
                   2.0 * beta * t) <= 1e-6);
  }
  SUBCASE("a linear curve gives beta in both modes") {
    const auto lin = analytic_curve([](double t) { return 2.0 * t + 1.0; },
                                    0.0, 10.0);
    CHECK(std::abs(ate_pointwise(lin, 3.0, PointwiseMode::UnitStep) - 2.0) <=
          1e-9);
    CHECK(std::abs(ate_pointwise(lin, 3.0, PointwiseMode::Derivative) - 2.0) <=
          1e-9);
  }
}

TEST_CASE("generalized ATE") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const double beta = 1.3;
  const auto curve = analytic_curve([&](double t) { return beta * t + 2.0; },
                                    0.0, 10.0);

  SUBCASE("P = Q gives zero") {
    const auto p = UnivariateDistribution::truncated_normal(u, 4.0, 1.0);
    CHECK(generalized_ate(curve, p, p).value == doctest::Approx(0.0));
  }

  SUBCASE("linear curve: beta times the mean difference") {
    const auto p = UnivariateDistribution::truncated_normal(u, 3.0, 1.0);
    const auto q = UnivariateDistribution::truncated_normal(u, 6.0, 1.5);
    const double expected = beta * (q.mean() - p.mean());
    CHECK(std::abs(generalized_ate(curve, p, q).value - expected) <= 1e-6);
  }

  SUBCASE("threshold pair on binary universe equals the binary ATE") {
    const Universe b = Universe::discrete({0.0, 1.0});
    const auto below = uniform_threshold(b, 0.5, ThresholdSide::Below);
    const auto above = uniform_threshold(b, 0.5, ThresholdSide::Above);
    CHECK(generalized_ate(curve, below, above).value ==
          ate_binary(curve).value);
  }

  SUBCASE("mismatched universes are rejected") {
    const auto p = UnivariateDistribution::uniform(u);
    const auto q =
        UnivariateDistribution::uniform(Universe::continuous(0.0, 1.0));
    CHECK_THROWS_AS(generalized_ate(curve, p, q), Error);
  }
}

TEST_CASE("uniform-threshold ATE") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const double beta = 0.9;
  const auto curve = analytic_curve([&](double t) { return beta * t; }, 0.0,
                                    10.0);

  SUBCASE("linear curve at T0 = 5 gives 5 beta") {
    const auto rep = ate_uniform_threshold(curve, u, 5.0);
    CHECK(std::abs(rep.value - 5.0 * beta) <= 0.01 * beta);
  }

  SUBCASE("symmetric curve about T0 vanishes") {
    const auto sym = analytic_curve(
        [](double t) { return (t - 5.0) * (t - 5.0); }, 0.0, 10.0);
    CHECK(std::abs(ate_uniform_threshold(sym, u, 5.0).value) <= 1e-9);
  }

  SUBCASE("binary universe reduces to the binary ATE") {
    const Universe b = Universe::discrete({0.0, 1.0});
    CHECK(ate_uniform_threshold(curve, b, 0.5).value ==
          ate_binary(curve).value);
  }
}

TEST_CASE("FATE closed forms") {
  const double beta = 1.05;
  const double len = 10.0;
  const Universe u = Universe::continuous(0.0, len);
  const auto curve = analytic_curve([&](double t) { return beta * t + 7.0; },
                                    0.0, len);
  const double tol = 1e-3 * beta * len;

  SUBCASE("triangles meeting at the midpoint: 2 L beta / 3") {
    CHECK(std::abs(fate(curve, builtins::fig1a_pair(u)).value -
                   2.0 * len * beta / 3.0) <= tol);
  }
  SUBCASE("triangles vanishing at m: beta (L - 2m/3)") {
    const double m = 6.0;
    CHECK(std::abs(fate(curve, builtins::fig1b_pair(u, m)).value -
                   beta * (len - 2.0 * m / 3.0)) <= tol);
  }
  SUBCASE("trapezoids: 11 L beta / 18") {
    CHECK(std::abs(fate(curve, builtins::fig1c_pair(u)).value -
                   11.0 * len * beta / 18.0) <= tol);
  }
  SUBCASE("gaussians with sigma L/4: about 0.6 L beta") {
    const double value = fate(curve, builtins::fig1d_pair(u)).value;
    CHECK(value >= 0.59 * len * beta);
    CHECK(value <= 0.63 * len * beta);
  }
  SUBCASE("identical attributes give zero") {
    const auto low = builtins::fig1a_pair(u).a;
    CHECK(fate(curve, AttributePair(low, low)).value == doctest::Approx(0.0));
  }
  SUBCASE("antisymmetry is exact") {
    const auto pair = builtins::fig1a_pair(u);
    const AttributePair swapped(pair.b, pair.a);
    CHECK(fate(curve, pair).value == -fate(curve, swapped).value);
  }
}

TEST_CASE("binary reduction: crisp FATE equals the binary ATE exactly") {
  std::vector<ScmVariable> vars;
  vars.push_back({"x", NoiseSpec::normal(0.0, 1.0), ""});
  vars.push_back({"t", NoiseSpec::normal(0.0, 1.0), "0.2 * x"});
  vars.push_back({"y", NoiseSpec::normal(0.0, 1.0), "2 * t + x"});
  const ScmSpec scm(vars, "t", "y");
  const auto curve = potential_outcome_curve(scm, {0.0, 1.0}, 5000,
                                             RandomSource(17));

  const Universe b = Universe::discrete({0.0, 1.0});
  const AttributePair pair(
      FuzzyAttribute("is0", b, MembershipFunction::crisp_indicator({0.0})),
      FuzzyAttribute("is1", b, MembershipFunction::crisp_indicator({1.0})));
  const double diff =
      std::abs(fate(curve, pair).value - ate_binary(curve).value);
  CHECK(diff < 1e-12);
}

TEST_CASE("NFATE") {
  SUBCASE("linear structural model: NFATE = beta for any valid pair") {
    const double beta = 1.05;
    const auto scm = linear_scm(beta);
    const auto curve = potential_outcome_curve(scm, linspace(0.0, 10.0, 101),
                                               4000, RandomSource(4));
    const Universe u = Universe::continuous(0.0, 10.0);
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d"}) {
      const auto pair = builtins::named_pair(name, u);
      CHECK(std::abs(nfate(curve, pair).value - beta) <= 0.02);
    }
  }

  SUBCASE("quadratic model: NFATE = beta L + eta E[X]") {
    const double beta = 0.8, eta = 0.5, len = 10.0, x_mean = 2.0;
    std::vector<ScmVariable> vars;
    vars.push_back({"x", NoiseSpec::normal(x_mean, 0.5), ""});
    vars.push_back({"t", NoiseSpec::normal(0.0, 1.0), "0.3 * x"});
    vars.push_back({"y", NoiseSpec::normal(0.0, 1.0),
                    "0.8 * t^2 + 0.5 * t * x + 0.3 * x^2 + 1.2 * x"});
    const ScmSpec scm(vars, "t", "y");
    const auto curve = potential_outcome_curve(scm, linspace(0.0, len, 101),
                                               10000, RandomSource(5));
    const Universe u = Universe::continuous(0.0, len);
    const double expected = beta * len + eta * x_mean;
    const auto rep = nfate(curve, builtins::fig1a_pair(u));
    CHECK(std::abs(rep.value - expected) <= 0.02 * expected);

    // Same number as the average derivative-mode ATE over [0, L].
    const auto deriv = curve.derivative();
    double mean_ate = 0.0;
    const auto& grid = curve.grid();
    for (std::size_t i = 1; i < grid.size(); ++i) {
      mean_ate += 0.5 * (deriv[i - 1] + deriv[i]) * (grid[i] - grid[i - 1]);
    }
    mean_ate /= len;
    CHECK(std::abs(rep.value - mean_ate) <= 0.02 * expected);
  }

  SUBCASE("swapping the pair leaves NFATE unchanged") {
    const auto curve = analytic_curve(
        [](double t) { return 2.0 * t * t - t; }, 0.0, 10.0);
    const Universe u = Universe::continuous(0.0, 10.0);
    const auto pair = builtins::fig1a_pair(u);
    const AttributePair swapped(pair.b, pair.a);
    CHECK(nfate(curve, pair).value ==
          doctest::Approx(nfate(curve, swapped).value).epsilon(1e-12));
  }

  SUBCASE("equal means raise ZeroDenominator") {
    const auto curve = analytic_curve([](double t) { return t; }, 0.0, 10.0);
    const Universe u = Universe::continuous(0.0, 10.0);
    const auto low = builtins::fig1a_pair(u).a;
    CHECK_THROWS_AS(nfate(curve, AttributePair(low, low)), Error);
  }

  SUBCASE("symmetric-pair identity: E[T_h] - E[T_l] = L - 2 E[T_l]") {
    const Universe u = Universe::continuous(0.0, 10.0);
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d"}) {
      const auto pair = builtins::named_pair(name, u);
      const double ma = standard_density(pair.a).mean();
      const double mb = standard_density(pair.b).mean();
      CHECK(std::abs((mb - ma) - (10.0 - 2.0 * ma)) <= 1e-9);
    }
  }
}

TEST_CASE("GFATE and NGFATE") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const double beta = 1.3;
  const auto curve = analytic_curve([&](double t) { return beta * t; }, 0.0,
                                    10.0);
  const auto pair = builtins::fig1a_pair(u);

  SUBCASE("uniform f_T collapses GFATE to FATE") {
    const auto f_t = UnivariateDistribution::uniform(u);
    CHECK(std::abs(gfate(curve, pair, f_t).value - fate(curve, pair).value) <=
          1e-9);
  }

  SUBCASE("linear curve: beta times the zeta mean difference") {
    const auto f_t = UnivariateDistribution::truncated_normal(u, 5.0, 2.0);
    const auto za = independent_density(pair.a, f_t);
    const auto zb = independent_density(pair.b, f_t);
    const double expected = beta * (zb.mean() - za.mean());
    CHECK(std::abs(gfate(curve, pair, f_t).value - expected) <= 1e-6);
    CHECK(std::abs(ngfate(curve, pair, f_t).value - beta) <= 1e-6);
  }

  SUBCASE("linear structural model: NGFATE = beta") {
    const auto scm = linear_scm(1.05);
    const auto mc_curve = potential_outcome_curve(
        scm, linspace(0.0, 10.0, 101), 4000, RandomSource(6));
    const auto f_t = UnivariateDistribution::truncated_normal(u, 4.0, 1.5);
    CHECK(std::abs(ngfate(mc_curve, pair, f_t).value - 1.05) <= 0.02);
  }

  SUBCASE("sodium pipeline with empirical f_T lands near the reported 2.77") {
    const auto scm = builtins::sodium_scm();
    const auto data = generate_dataset(scm, 10000, RandomSource(0));
    const auto& sodium = data.column("sodium");
    const auto [mn, mx] = std::minmax_element(sodium.begin(), sodium.end());
    const Universe su = Universe::continuous(*mn, *mx);
    const auto model =
        fit_adjustment(data, "bloodpressure", "sodium", {"age"});
    const auto curve2 =
        adjusted_outcome_curve(model, data, linspace(*mn, *mx, 101));
    const auto f_t = empirical_density(data, "sodium", 50);
    const auto spair = builtins::fig1a_pair(su);
    CHECK(std::abs(gfate(curve2, spair, f_t).value - 2.77) <= 0.3);
    CHECK(std::abs(ngfate(curve2, spair, f_t).value - 1.05) <= 0.05);
  }

  SUBCASE("equal zeta means raise ZeroDenominator") {
    const auto f_t = UnivariateDistribution::uniform(u);
    const auto low = pair.a;
    CHECK_THROWS_AS(ngfate(curve, AttributePair(low, low), f_t), Error);
  }

  SUBCASE("generalized-symmetric pair on a quadratic model") {
    // Mirrored attributes with an f_T symmetric about the midpoint make the
    // zeta densities mirror images, so NGFATE equals the average
    // derivative-mode effect over [0, L]: beta L + eta E[X].
    const double len = 10.0, x_mean = 2.0;
    std::vector<ScmVariable> vars;
    vars.push_back({"x", NoiseSpec::normal(x_mean, 0.5), ""});
    vars.push_back({"t", NoiseSpec::normal(0.0, 1.0), "0.3 * x"});
    vars.push_back({"y", NoiseSpec::normal(0.0, 1.0),
                    "0.8 * t^2 + 0.5 * t * x + 0.3 * x^2 + 1.2 * x"});
    const ScmSpec scm(vars, "t", "y");
    const auto mc_curve = potential_outcome_curve(
        scm, linspace(0.0, len, 101), 10000, RandomSource(21));
    const auto f_t = UnivariateDistribution::truncated_normal(
        Universe::continuous(0.0, len), len / 2.0, 2.0);
    const auto za = independent_density(pair.a, f_t);
    const auto zb = independent_density(pair.b, f_t);
    const std::size_t n = za.values().size();
    for (std::size_t i = 0; i < n; ++i) {  // generalized symmetry holds
      CHECK(std::abs(zb.value(i) - za.value(n - 1 - i)) <= 1e-9);
    }
    const double expected = 0.8 * len + 0.5 * x_mean;
    CHECK(std::abs(ngfate(mc_curve, pair, f_t).value - expected) <=
          0.02 * expected);
  }
}

TEST_CASE("NATE of higher degree") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const auto pair = builtins::fig1a_pair(u);
  const auto fa = standard_density(pair.a);
  const auto fb = standard_density(pair.b);

  SUBCASE("degree 1 equals NFATE on the standard densities") {
    const auto curve = analytic_curve(
        [](double t) { return 1.7 * t + 0.4 * t * t; }, 0.0, 10.0);
    CHECK(nate_degree(curve, fa, fb, 1).value ==
          doctest::Approx(nfate(curve, pair).value).epsilon(1e-12));
  }

  SUBCASE("pure square curve at degree 2 recovers the coefficient exactly") {
    const double beta = 0.6;
    const auto curve = analytic_curve(
        [&](double t) { return beta * t * t; }, 0.0, 10.0);
    CHECK(std::abs(nate_degree(curve, fa, fb, 2).value - beta) <= 1e-9);
  }

  SUBCASE("degree 3 on a linear curve matches direct quadrature") {
    const double beta = 2.2;
    const auto curve = analytic_curve([&](double t) { return beta * t; }, 0.0,
                                      10.0);
    const double direct = beta * (fb.mean() - fa.mean()) /
                          (fb.moment(3) - fa.moment(3));
    CHECK(std::abs(nate_degree(curve, fa, fb, 3).value - direct) <= 1e-12);
  }
}

TEST_CASE("stability of FATE") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const auto curve = analytic_curve([](double t) { return 1.5 * t + 3.0; },
                                    0.0, 10.0);
  const double m = curve.sup_abs();
  const auto pair = builtins::fig1a_pair(u);

  SUBCASE("identical pairs: zero on both sides") {
    const auto rep = stability_check(curve, pair, pair, m);
    CHECK(rep.lhs == doctest::Approx(0.0));
    CHECK(rep.rhs == doctest::Approx(0.0));
    CHECK(rep.holds);
  }

  SUBCASE("bound below the curve sup is rejected") {
    CHECK_THROWS_AS(stability_check(curve, pair, pair, m / 2.0), Error);
  }

  SUBCASE("random vertex perturbations never violate the bound") {
    RandomSource rng(31);
    int kl_checked = 0;
    for (int i = 0; i < 200; ++i) {
      const double za = 5.0 + rng.uniform(-1.0, 1.0);
      const double zb = 5.0 - rng.uniform(0.0, 1.0);
      const AttributePair perturbed(
          FuzzyAttribute("low'", u, MembershipFunction::triangular(0, 0, za)),
          FuzzyAttribute("high'", u,
                         MembershipFunction::triangular(zb, 10, 10)));
      const auto rep = stability_check(curve, pair, perturbed, m);
      CHECK(rep.holds);
      if (rep.holds_kl.has_value()) {
        CHECK(*rep.holds_kl);
        ++kl_checked;
      }
    }
    CHECK(kl_checked > 0);
  }
}

TEST_CASE("normalization invariance of the standard model") {
  const Universe u = Universe::continuous(0.0, 10.0);
  const auto curve = analytic_curve(
      [](double t) { return 0.3 * t * t + t; }, 0.0, 10.0);
  const auto pair = builtins::fig1a_pair(u);
  const double base_fate = fate(curve, pair).value;
  const double base_nfate = nfate(curve, pair).value;
  for (double c : {0.9, 0.5, 0.2}) {
    const AttributePair scaled(pair.a.scaled(c), pair.b.scaled(c));
    CHECK(std::abs(fate(curve, scaled).value - base_fate) <= 1e-12);
    CHECK(std::abs(nfate(curve, scaled).value - base_nfate) <= 1e-12);
  }
}
