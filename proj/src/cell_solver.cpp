#include "lamhom/cell_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lamhom {

namespace {

// Per-layer coefficients of the reduced cell problem: the generalized flux in
// layer i is A_i * s_i + B_i. For the extension/shear/transport problems the
// flux is coefficient * (1 + slope); for the coupling problems it is
// C2222 * slope - coupling.
void layer_coefficients(const PhaseProperties& p, CellProblemKind kind,
                        double& A, double& B) {
  switch (kind) {
    case CellProblemKind::Extension11: A = p.C2222; B = p.C1122; return;
    case CellProblemKind::Extension22: A = p.C2222; B = p.C2222; return;
    case CellProblemKind::Shear12: A = p.C1212; B = p.C1212; return;
    case CellProblemKind::ThermalCoupling: A = p.C2222; B = -p.alpha22; return;
    case CellProblemKind::DiffusiveCoupling: A = p.C2222; B = -p.beta22; return;
    case CellProblemKind::Conduction: A = p.K22; B = p.K22; return;
    case CellProblemKind::Diffusion: A = p.D22; B = p.D22; return;
  }
  throw std::invalid_argument("unknown cell problem kind");
}

// Dense Gaussian elimination with partial pivoting; m is row-major n x n.
// Small systems only (layers + 1 unknowns).
void solve_dense(std::vector<double>& m, std::vector<double>& rhs, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (m[piv * n + col] == 0.0)
      throw std::runtime_error("singular cell-problem system");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    const double d = m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = m[r * n + col] / d;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= factor * m[col * n + c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= m[r * n + c] * rhs[c];
    rhs[r] = acc / m[r * n + r];
  }
}

}  // namespace

LayerSlopeSolution solve_cell_problem(const Laminate& lam, CellProblemKind kind) {
  const std::size_t nl = lam.layer_count();
  const std::size_t n = nl + 1;  // slopes + flux constant

  // Row i: A_i s_i - c = -B_i. Last row: sum_i f_i s_i = 0.
  std::vector<double> M(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  std::vector<double> A(nl), B(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    layer_coefficients(lam.layers()[i].phase, kind, A[i], B[i]);
    M[i * n + i] = A[i];
    M[i * n + nl] = -1.0;
    rhs[i] = -B[i];
    M[nl * n + i] = lam.layers()[i].thickness_fraction;
  }

  std::vector<double> Mcopy = M;
  std::vector<double> x = rhs;
  solve_dense(Mcopy, x, n);

  // Residual of the original system, relative to the coefficient scale.
  double scale = 0.0;
  for (std::size_t i = 0; i < nl; ++i)
    scale = std::max({scale, std::abs(A[i]), std::abs(B[i])});
  double res = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double acc = -rhs[r];
    for (std::size_t c = 0; c < n; ++c) acc += M[r * n + c] * x[c];
    res = std::max(res, std::abs(acc));
  }
  res /= std::max(scale, 1e-300);
  if (res > 1e-10)
    throw std::runtime_error("cell-problem linear solve failed (residual above 1e-10)");

  LayerSlopeSolution sol;
  sol.kind = kind;
  sol.slopes.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(nl));
  sol.flux_constant = x[nl];
  sol.residual = res;
  return sol;
}

std::vector<LayerSlopeSolution> solve_cell_problems(const Laminate& lam) {
  std::vector<LayerSlopeSolution> out;
  out.reserve(std::size(kAllCellProblems));
  for (CellProblemKind kind : kAllCellProblems) out.push_back(solve_cell_problem(lam, kind));
  return out;
}

PerturbationProfile to_profile(const Laminate& lam, const LayerSlopeSolution& sol) {
  return make_profile(sol.kind, lam, sol.slopes);
}

namespace {

std::span<const double> slopes_of(std::span<const LayerSlopeSolution> sols,
                                  CellProblemKind kind) {
  for (const LayerSlopeSolution& s : sols)
    if (s.kind == kind) return s.slopes;
  throw std::invalid_argument("missing cell-problem solution");
}

std::span<const double> slopes_of(std::span<const PerturbationProfile> profs,
                                  CellProblemKind kind) {
  for (const PerturbationProfile& p : profs)
    if (p.kind == kind) return p.slopes;
  throw std::invalid_argument("missing perturbation profile");
}

struct SlopeTable {
  std::span<const double> e11, e22, sh, th, di, m, w;
};

CellHomogenizationResult average(const Laminate& lam, const SlopeTable& s) {
  const std::size_t nl = lam.layer_count();
  CellHomogenizationResult out;
  EffectiveProperties& e = out.effective;
  for (std::size_t i = 0; i < nl; ++i) {
    const PhaseProperties& p = lam.layers()[i].phase;
    const double f = lam.layers()[i].thickness_fraction;
    const double s11 = s.e11[i], s22 = s.e22[i], s12 = s.sh[i];
    const double st = s.th[i], sd = s.di[i], sm = s.m[i], sw = s.w[i];

    // Quadratic averages of the corrected strains / gradients; linear
    // averages for the couplings.
    e.C1111 += f * (p.C1111 + 2.0 * p.C1122 * s11 + p.C2222 * s11 * s11);
    e.C2222 += f * p.C2222 * (1.0 + s22) * (1.0 + s22);
    e.C1122 += f * (p.C1122 + p.C2222 * s11) * (1.0 + s22);
    e.C1212 += f * p.C1212 * (1.0 + s12) * (1.0 + s12);
    e.alpha11 += f * (p.alpha11 - p.C1122 * st);
    e.alpha22 += f * (p.alpha22 - p.C2222 * st);
    e.beta11 += f * (p.beta11 - p.C1122 * sd);
    e.beta22 += f * (p.beta22 - p.C2222 * sd);
    e.K11 += f * p.K11;
    e.K22 += f * p.K22 * (1.0 + sm) * (1.0 + sm);
    e.D11 += f * p.D11;
    e.D22 += f * p.D22 * (1.0 + sw) * (1.0 + sw);
    // K12 = <K12 (1 + M')> and likewise D12: the phase tensors carry no
    // off-diagonal transport, so the integrands vanish layer by layer and
    // the accumulators stay at zero.
  }
  return out;
}

}  // namespace

CellHomogenizationResult effective_from_profiles(const Laminate& lam,
                                                 std::span<const LayerSlopeSolution> sols) {
  SlopeTable t{
      slopes_of(sols, CellProblemKind::Extension11),
      slopes_of(sols, CellProblemKind::Extension22),
      slopes_of(sols, CellProblemKind::Shear12),
      slopes_of(sols, CellProblemKind::ThermalCoupling),
      slopes_of(sols, CellProblemKind::DiffusiveCoupling),
      slopes_of(sols, CellProblemKind::Conduction),
      slopes_of(sols, CellProblemKind::Diffusion),
  };
  return average(lam, t);
}

CellHomogenizationResult effective_from_profiles(const Laminate& lam,
                                                 std::span<const PerturbationProfile> profs) {
  SlopeTable t{
      slopes_of(profs, CellProblemKind::Extension11),
      slopes_of(profs, CellProblemKind::Extension22),
      slopes_of(profs, CellProblemKind::Shear12),
      slopes_of(profs, CellProblemKind::ThermalCoupling),
      slopes_of(profs, CellProblemKind::DiffusiveCoupling),
      slopes_of(profs, CellProblemKind::Conduction),
      slopes_of(profs, CellProblemKind::Diffusion),
  };
  return average(lam, t);
}

}  // namespace lamhom
