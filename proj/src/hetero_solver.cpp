#include "lamhom/hetero_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamhom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

MicroGrid::MicroGrid(const Laminate& lam, int cells, int nodes_per_layer)
    : cells_(cells), nodes_per_layer_(nodes_per_layer) {
  require(cells_ >= 1, "grid needs at least one cell");
  require(nodes_per_layer_ >= 4, "grid needs at least 4 nodes per layer");
  const double eps = lam.epsilon();
  length_ = cells_ * eps;
  const std::size_t nl = lam.layer_count();
  const std::size_t n = static_cast<std::size_t>(cells_) * nl * nodes_per_layer_;

  x_.reserve(n);
  h_.reserve(n);
  layer_.reserve(n);
  const std::vector<double>& bounds = lam.boundaries();
  for (int c = 0; c < cells_; ++c) {
    for (std::size_t li = 0; li < nl; ++li) {
      const double f = lam.layers()[li].thickness_fraction;
      for (int k = 0; k < nodes_per_layer_; ++k) {
        x_.push_back((c + bounds[li] + f * k / nodes_per_layer_) * eps);
        h_.push_back(f * eps / nodes_per_layer_);
        layer_.push_back(static_cast<int>(li));
      }
    }
  }
  weight_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    weight_[i] = 0.5 * (h_[prev] + h_[i]);
  }
}

bool MicroGrid::is_interface_node(std::size_t i) const {
  const std::size_t n = node_count();
  return layer_[(i + n - 1) % n] != layer_[i];
}

namespace {

// Solves A y = g for the symmetric periodic operator assembled from face
// conductances kf (row i: kf[i-1](y_i - y_{i-1}) + kf[i](y_i - y_{i+1}) = g_i)
// under the constraint of zero weighted mean. The operator annihilates
// constants, so the multiplier of the mean constraint is eliminated first:
// lambda = sum(g)/sum(V), after which the shifted right-hand side lies in the
// range of A and the system is solved with node 0 pinned (the reduced matrix
// is tridiagonal and positive definite) followed by a mean shift.
std::vector<double> solve_periodic_zero_mean(std::span<const double> kf,
                                             std::span<const double> g_in,
                                             std::span<const double> V,
                                             double* residual_out,
                                             double* lambda_out) {
  const std::size_t n = kf.size();
  double gsum = 0.0, vsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    gsum += g_in[i];
    vsum += V[i];
  }
  const double lambda = gsum / vsum;
  if (lambda_out) *lambda_out = lambda;
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = g_in[i] - lambda * V[i];

  // Thomas on nodes 1..n-1 with y_0 = 0. The wrap entries live in row/column
  // 0, so the reduced system is strictly tridiagonal; it is a principal
  // submatrix of a positive semidefinite matrix with kernel {constants} and
  // therefore positive definite.
  const std::size_t m = n - 1;
  std::vector<double> cp(m), dp(m);
  {
    const double diag0 = kf[0] + kf[1 % n];
    cp[0] = -kf[1 % n] / diag0;
    dp[0] = g[1] / diag0;
  }
  for (std::size_t jj = 1; jj < m; ++jj) {
    const std::size_t i = jj + 1;
    const double a = -kf[i - 1];
    const double diag = kf[i - 1] + kf[i % n];
    const double denom = diag - a * cp[jj - 1];
    cp[jj] = -kf[i % n] / denom;
    dp[jj] = (g[i] - a * dp[jj - 1]) / denom;
  }
  std::vector<double> y(n, 0.0);
  y[n - 1] = dp[m - 1];
  for (std::size_t jj = m - 1; jj-- > 0;) y[jj + 1] = dp[jj] - cp[jj] * y[jj + 2];

  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += V[i] * y[i];
  mean /= vsum;
  for (double& v : y) v -= mean;

  double res = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    const double row = kf[prev] * (y[i] - y[prev]) + kf[i] * (y[i] - y[next]) - g[i];
    res = std::max(res, std::abs(row));
    scale = std::max(scale, std::abs(g[i]));
  }
  if (residual_out) *residual_out = res / std::max(scale, 1e-300);
  return y;
}

}  // namespace

MicroSolution solve_heterogeneous(const Laminate& lam, const HarmonicLoad& load,
                                  const MicroGrid& grid) {
  load.validate();
  if (load.direction != 2)
    throw std::invalid_argument(
        "heterogeneous solve supports direction-2 (stacking normal) loads only");
  if (std::abs(grid.domain_length() - load.L) > 1e-12 * load.L)
    throw std::invalid_argument("grid span must equal the load period");

  const std::size_t n = grid.node_count();
  const double L = grid.domain_length();
  auto resolved = [&](double amp, int k) {
    return amp == 0.0 || static_cast<double>(n) / std::abs(k) >= 8.0;
  };
  if (!resolved(load.B, load.m) || !resolved(load.R, load.n) || !resolved(load.S, load.p))
    throw std::invalid_argument("grid must resolve every loaded wavelength with >= 8 nodes");

  const std::vector<double>& x = grid.nodes();
  const std::vector<double>& h = grid.spacings();
  const std::vector<double>& V = grid.weights();
  const std::vector<int>& lay = grid.interval_layer();

  auto coef = [&](auto member) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = lam.layers()[lay[i]].phase.*member;
    return c;
  };
  const std::vector<double> Kc = coef(&PhaseProperties::K22);
  const std::vector<double> Dc = coef(&PhaseProperties::D22);
  const std::vector<double> Cc = coef(&PhaseProperties::C2222);
  const std::vector<double> ac = coef(&PhaseProperties::alpha22);
  const std::vector<double> bc = coef(&PhaseProperties::beta22);

  auto source = [&](double amp, int k) {
    std::vector<double> s(n, 0.0);
    if (amp != 0.0)
      for (std::size_t i = 0; i < n; ++i) s[i] = amp * std::cos(kTwoPi * k * x[i] / L);
    return s;
  };
  const std::vector<double> r = source(load.R, load.n);
  const std::vector<double> s = source(load.S, load.p);
  const std::vector<double> bf = source(load.B, load.m);

  MicroSolution out{grid, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                    std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                    std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};

  auto check = [](double res) {
    if (res > 1e-8)
      throw std::runtime_error("heterogeneous linear solve did not converge");
  };

  std::vector<double> kf(n);
  double res = 0.0;
  // Compatibility multipliers: the uniform source offsets the zero-mean
  // constraint introduces to absorb the quadrature defect of each source.
  double lambda_theta = 0.0, lambda_eta = 0.0, lambda_u = 0.0;

  if (load.R != 0.0) {
    for (std::size_t i = 0; i < n; ++i) kf[i] = Kc[i] / h[i];
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = V[i] * r[i];
    out.theta = solve_periodic_zero_mean(kf, g, V, &res, &lambda_theta);
    check(res);
  }
  if (load.S != 0.0) {
    for (std::size_t i = 0; i < n; ++i) kf[i] = Dc[i] / h[i];
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = V[i] * s[i];
    out.eta = solve_periodic_zero_mean(kf, g, V, &res, &lambda_eta);
    check(res);
  }

  // Mechanical solve: the coupling terms enter as a known face flux
  // G = a*t + b*e interpolated linearly to the faces.
  std::vector<double> G(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    const double tf = 0.5 * (out.theta[i] + out.theta[next]);
    const double ef = 0.5 * (out.eta[i] + out.eta[next]);
    G[i] = ac[i] * tf + bc[i] * ef;
  }
  if (load.B != 0.0 || load.R != 0.0 || load.S != 0.0) {
    for (std::size_t i = 0; i < n; ++i) kf[i] = Cc[i] / h[i];
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      g[i] = V[i] * bf[i] - (G[i] - G[prev]);
    }
    out.u = solve_periodic_zero_mean(kf, g, V, &res, &lambda_u);
    check(res);
  }

  // Nodal flux reconstruction from the right face plus the half-interval
  // effective source (source minus its compatibility offset); the discrete
  // balance then makes the left-face reconstruction bitwise consistent, so
  // the stored fluxes are single-valued at interfaces.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    const double qf = -Kc[i] * (out.theta[next] - out.theta[i]) / h[i];
    const double jf = -Dc[i] * (out.eta[next] - out.eta[i]) / h[i];
    const double sf = Cc[i] * (out.u[next] - out.u[i]) / h[i] - G[i];
    out.q[i] = qf - 0.5 * h[i] * (r[i] - lambda_theta);
    out.j[i] = jf - 0.5 * h[i] * (s[i] - lambda_eta);
    out.sigma22[i] = sf + 0.5 * h[i] * (bf[i] - lambda_u);
  }
  return out;
}

std::vector<double> cell_average(std::span<const double> nodal, const MicroGrid& grid,
                                 double epsilon) {
  const std::size_t n = grid.node_count();
  const double L = grid.domain_length();
  require(epsilon > 0.0 && epsilon <= L, "averaging window must fit the domain");

  const std::vector<double>& x = grid.nodes();
  const std::vector<double>& h = grid.spacings();

  // Prefix integrals of the piecewise-linear interpolant at the nodes; the
  // antiderivative inside interval i is quadratic and evaluated exactly.
  std::vector<double> P(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double y0 = nodal[i];
    const double y1 = nodal[(i + 1) % n];
    P[i + 1] = P[i] + 0.5 * h[i] * (y0 + y1);
  }
  auto P_at = [&](double t) {
    // t in [0, L]
    if (t >= L) return P[n];
    std::size_t i = std::upper_bound(x.begin(), x.end(), t) - x.begin();
    i = (i == 0) ? 0 : i - 1;
    const double dt = t - x[i];
    const double y0 = nodal[i];
    const double y1 = nodal[(i + 1) % n];
    return P[i] + dt * y0 + 0.5 * dt * dt * (y1 - y0) / h[i];
  };

  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = x[k] - 0.5 * epsilon;
    a -= L * std::floor(a / L);
    const double b = a + epsilon;
    const double I = (b <= L) ? P_at(b) - P_at(a) : (P[n] - P_at(a)) + P_at(b - L);
    out[k] = I / epsilon;
  }
  return out;
}

UpscaledFields upscale(const MicroSolution& micro, const Laminate& lam) {
  require(micro.grid.cells() >= 2, "up-scaling needs at least two cells");
  UpscaledFields f;
  f.U = cell_average(micro.u, micro.grid, lam.epsilon());
  f.Theta = cell_average(micro.theta, micro.grid, lam.epsilon());
  f.Upsilon = cell_average(micro.eta, micro.grid, lam.epsilon());
  return f;
}

MicroSolution downscale_first_order(const MacroSolution& macro,
                                    std::span<const PerturbationProfile> profiles,
                                    const Laminate& lam, const MicroGrid& grid) {
  auto profile = [&](CellProblemKind kind) -> const PerturbationProfile& {
    for (const PerturbationProfile& p : profiles)
      if (p.kind == kind) return p;
    throw std::invalid_argument("missing perturbation profile for down-scaling");
  };
  const PerturbationProfile& n22 = profile(CellProblemKind::Extension22);
  const PerturbationProfile& nt = profile(CellProblemKind::ThermalCoupling);
  const PerturbationProfile& nh = profile(CellProblemKind::DiffusiveCoupling);
  const PerturbationProfile& mp = profile(CellProblemKind::Conduction);
  const PerturbationProfile& wp = profile(CellProblemKind::Diffusion);

  const double eps = lam.epsilon();
  require(std::abs(grid.domain_length() - grid.cells() * eps) <= 1e-12 * eps,
          "grid does not match the laminate period");
  const std::size_t n = grid.node_count();
  MicroSolution out{grid, std::vector<double>(n), std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.nodes()[i];
    const double xi = x / eps;
    const double U = macro.U(x), dU = macro.dU(x);
    const double T = macro.Theta(x), dT = macro.dTheta(x);
    const double Y = macro.Upsilon(x), dY = macro.dUpsilon(x);
    out.u[i] = U + eps * (n22.value(xi) * dU + nt.value(xi) * T + nh.value(xi) * Y);
    out.theta[i] = T + eps * mp.value(xi) * dT;
    out.eta[i] = Y + eps * wp.value(xi) * dY;
    // Leading-order fluxes are cell-constant: the corrected coefficients
    // collapse to the effective ones through the conserved flux of each cell
    // problem.
    out.sigma22[i] = macro.C * dU - macro.alpha * T - macro.beta * Y;
    out.q[i] = -macro.K * dT;
    out.j[i] = -macro.D * dY;
  }
  return out;
}

namespace {

FieldError field_error(std::span<const double> test, std::span<const double> ref,
                       std::span<const double> V) {
  double num2 = 0.0, den2 = 0.0, numi = 0.0, deni = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = test[i] - ref[i];
    num2 += V[i] * d * d;
    den2 += V[i] * ref[i] * ref[i];
    numi = std::max(numi, std::abs(d));
    deni = std::max(deni, std::abs(ref[i]));
  }
  FieldError e;
  if (den2 > 0.0) {
    e.l2 = std::sqrt(num2 / den2);
    e.linf = numi / deni;
    e.defined = true;
  }
  return e;
}

}  // namespace

ComparisonReport compare(const MacroSolution& macro, const MicroSolution& micro,
                         const Laminate& lam) {
  const MicroGrid& grid = micro.grid;
  require(std::abs(grid.domain_length() - grid.cells() * lam.epsilon()) <=
              1e-12 * lam.epsilon(),
          "grid does not match the laminate period");
  const std::size_t n = grid.node_count();
  std::vector<double> U(n), T(n), Y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.nodes()[i];
    U[i] = macro.U(x);
    T[i] = macro.Theta(x);
    Y[i] = macro.Upsilon(x);
  }

  const double eps = lam.epsilon();
  const UpscaledFields up = upscale(micro, lam);
  const std::vector<double> Us = cell_average(U, grid, eps);
  const std::vector<double> Ts = cell_average(T, grid, eps);
  const std::vector<double> Ys = cell_average(Y, grid, eps);

  ComparisonReport rep;
  rep.U = field_error(up.U, Us, grid.weights());
  rep.Theta = field_error(up.Theta, Ts, grid.weights());
  rep.Upsilon = field_error(up.Upsilon, Ys, grid.weights());
  rep.cells = grid.cells();
  rep.nodes_per_layer = grid.nodes_per_layer();
  rep.L_over_epsilon = grid.domain_length() / eps;
  return rep;
}

}  // namespace lamhom
