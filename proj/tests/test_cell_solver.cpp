#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lamhom/cell_solver.hpp"
#include "lamhom/laminate_homogenizer.hpp"
#include "test_support.hpp"

using namespace lamhom;

namespace {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

Laminate conduction_example() {
  const PhaseProperties a = make_isotropic_phase(1.0, 0.3, 1.0, 1.0, 10.0, 1.0,
                                                 PlaneAssumption::PlaneStress);
  const PhaseProperties b = make_isotropic_phase(1.0, 0.3, 1.0, 1.0, 1.0, 1.0,
                                                 PlaneAssumption::PlaneStress);
  return Laminate({{a, 0.5}, {b, 0.5}}, 0.1);
}

}  // namespace

TEST_CASE("single layer: zero slopes and the homogeneous flux constants") {
  std::mt19937_64 rng(11);
  const PhaseProperties p = testing::random_orthotropic(rng);
  const Laminate lam({{p, 1.0}}, 0.3);
  for (CellProblemKind kind : kAllCellProblems) {
    const LayerSlopeSolution sol = solve_cell_problem(lam, kind);
    REQUIRE(sol.slopes.size() == 1);
    CHECK(std::abs(sol.slopes[0]) < 1e-14);
  }
  CHECK(solve_cell_problem(lam, CellProblemKind::Conduction).flux_constant ==
        doctest::Approx(p.K22).epsilon(1e-14));
  CHECK(solve_cell_problem(lam, CellProblemKind::Extension22).flux_constant ==
        doctest::Approx(p.C2222).epsilon(1e-14));
  CHECK(solve_cell_problem(lam, CellProblemKind::ThermalCoupling).flux_constant ==
        doctest::Approx(-p.alpha22).epsilon(1e-14));

  const CellHomogenizationResult res =
      effective_from_profiles(lam, solve_cell_problems(lam));
  CHECK(close_rel(res.effective.C1111, p.C1111, 1e-14));
  CHECK(close_rel(res.effective.alpha22, p.alpha22, 1e-14));
  CHECK(close_rel(res.effective.D22, p.D22, 1e-14));
}

TEST_CASE("bi-phase conduction against the 2x2 hand solve") {
  // Flux continuity K_a (1 + s_a) = K_b (1 + s_b) together with the closure
  // f_a s_a + f_b s_b = 0 gives, for K_a = 10, K_b = 1 and equal fractions,
  // s_a = -(K_a - K_b) / (K_a + K_b) * ... solved by hand: s_a = -9/11.
  const Laminate lam = conduction_example();
  const LayerSlopeSolution sol = solve_cell_problem(lam, CellProblemKind::Conduction);
  CHECK(sol.slopes[0] == doctest::Approx(-9.0 / 11.0).epsilon(1e-13));
  CHECK(sol.slopes[1] == doctest::Approx(9.0 / 11.0).epsilon(1e-13));
  CHECK(sol.flux_constant == doctest::Approx(20.0 / 11.0).epsilon(1e-13));
  CHECK(sol.residual <= 1e-10);
}

TEST_CASE("per-layer generalized flux equals the conserved constant") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Laminate lam = testing::random_multilayer(rng);
    const LayerSlopeSolution cond = solve_cell_problem(lam, CellProblemKind::Conduction);
    const LayerSlopeSolution therm =
        solve_cell_problem(lam, CellProblemKind::ThermalCoupling);
    for (std::size_t i = 0; i < lam.layer_count(); ++i) {
      const PhaseProperties& p = lam.layers()[i].phase;
      CHECK(close_rel(p.K22 * (1.0 + cond.slopes[i]), cond.flux_constant, 1e-12));
      const double coupling_flux = p.C2222 * therm.slopes[i] - p.alpha22;
      CHECK(std::abs(coupling_flux - therm.flux_constant) <=
            1e-12 * std::max({std::abs(coupling_flux), std::abs(therm.flux_constant), p.C2222}));
    }
  }
}

TEST_CASE("profiles from solutions are zero-mean, continuous and periodic") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const Laminate lam = testing::random_multilayer(rng);
    for (const LayerSlopeSolution& sol : solve_cell_problems(lam)) {
      const PerturbationProfile prof = to_profile(lam, sol);
      double scale = 1.0;
      for (double s : prof.slopes) scale = std::max(scale, std::abs(s));
      CHECK(std::abs(prof.mean()) <= 1e-12 * scale);
      CHECK(std::abs(prof.wrap_jump()) <= 1e-12 * scale);
      double closure = 0.0;
      for (std::size_t i = 0; i < prof.slopes.size(); ++i)
        closure += lam.layers()[i].thickness_fraction * prof.slopes[i];
      CHECK(std::abs(closure) <= 1e-12 * scale);
      // continuity across interior interfaces
      for (std::size_t i = 1; i + 1 < prof.breaks.size(); ++i) {
        const double left = prof.offsets[i - 1] +
                            prof.slopes[i - 1] * (prof.breaks[i] - prof.breaks[i - 1]);
        CHECK(std::abs(left - prof.offsets[i]) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("refinement invariance: splitting layers changes nothing") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Laminate lam = testing::random_biphase(rng, t % 2 == 0);
    const EffectiveProperties base =
        effective_from_profiles(lam, solve_cell_problems(lam)).effective;

    std::vector<Layer> split;
    for (const Layer& l : lam.layers()) {
      split.push_back({l.phase, l.thickness_fraction / 2.0});
      split.push_back({l.phase, l.thickness_fraction / 2.0});
    }
    const Laminate fine(split, lam.epsilon());
    const EffectiveProperties refined =
        effective_from_profiles(fine, solve_cell_problems(fine)).effective;
    CHECK(max_relative_discrepancy(base, refined) <= 1e-12);
  }
}

TEST_CASE("quadratic averages agree with the conserved-flux route") {
  const Laminate lam = conduction_example();
  const std::vector<LayerSlopeSolution> sols = solve_cell_problems(lam);
  const CellHomogenizationResult res = effective_from_profiles(lam, sols);

  // Two independent formulas: <K (1+M')^2> versus the conserved flux itself.
  CHECK(res.effective.K22 == doctest::Approx(20.0 / 11.0).epsilon(1e-13));
  CHECK(close_rel(res.effective.K22,
                  solve_cell_problem(lam, CellProblemKind::Conduction).flux_constant,
                  1e-13));

  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    const Laminate rnd = testing::random_multilayer(rng);
    const std::vector<LayerSlopeSolution> s = solve_cell_problems(rnd);
    const EffectiveProperties e = effective_from_profiles(rnd, s).effective;
    for (const LayerSlopeSolution& sol : s) {
      if (sol.kind == CellProblemKind::Conduction)
        CHECK(close_rel(e.K22, sol.flux_constant, 1e-12));
      if (sol.kind == CellProblemKind::Diffusion)
        CHECK(close_rel(e.D22, sol.flux_constant, 1e-12));
      if (sol.kind == CellProblemKind::Extension22)
        CHECK(close_rel(e.C2222, sol.flux_constant, 1e-12));
      if (sol.kind == CellProblemKind::Shear12)
        CHECK(close_rel(e.C1212, sol.flux_constant, 1e-12));
      if (sol.kind == CellProblemKind::Extension11)
        CHECK(close_rel(e.C1122, sol.flux_constant, 1e-12));
    }
  }
}

TEST_CASE("effective tensors of random stacks are symmetric positive definite") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1000; ++t) {
    const Laminate lam = testing::random_multilayer(rng);
    const CellHomogenizationResult res =
        effective_from_profiles(lam, solve_cell_problems(lam));
    CHECK_NOTHROW(res.effective.validate());
    CHECK(res.K12 == 0.0);
    CHECK(res.D12 == 0.0);
  }
}

TEST_CASE("two-layer solutions reduce to the closed-form profiles pointwise") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Laminate lam = testing::random_biphase(rng, t % 2 == 0);
    const std::vector<PerturbationProfile> closed = perturbation_profiles_biphase(lam);
    for (const LayerSlopeSolution& sol : solve_cell_problems(lam)) {
      const PerturbationProfile mine = to_profile(lam, sol);
      const PerturbationProfile* ref = nullptr;
      for (const PerturbationProfile& c : closed)
        if (c.kind == sol.kind) ref = &c;
      REQUIRE(ref != nullptr);
      double scale = 1e-300;
      for (double s : ref->slopes) scale = std::max(scale, std::abs(s));
      const double fa = lam.layers()[0].thickness_fraction;
      for (double xi : {0.0, 0.5 * fa, fa, fa + 0.5 * (1.0 - fa)}) {
        CHECK(std::abs(mine.value(xi) - ref->value(xi)) <= 1e-12 * scale);
      }
    }
  }
}
