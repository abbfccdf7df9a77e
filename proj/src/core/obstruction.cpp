#include "alegeo/core/obstruction.hpp"

#include "alegeo/core/error.hpp"
#include "alegeo/core/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alegeo {

QuadraticTensorH::QuadraticTensorH(const OrbifoldPointData& data) : data_(data), c_(data.dim) {
  const int m = data.dim;
  require(m >= 3 && data.curvature.dim() == m, ErrorCode::InvalidDimension,
          "orbifold data dimension");
  const double c = 2.0 * data.mu / (3.0 * (m + 2));
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  const Tensor4& r = data.curvature;
  // Symmetrized in (i, j) and (k, l); the quadratic form is unchanged.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double rs = 0.25 * (r(i, k, j, l) + r(i, l, j, k) + r(j, k, i, l) + r(j, l, i, k));
          c_(i, j, k, l) = -rs / 3.0 - c * (d(i, j) * d(k, l) + d(i, k) * d(j, l) + d(i, l) * d(j, k));
        }
}

Matrix QuadraticTensorH::value(const Vector& x) const {
  const int m = dim();
  Matrix h = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) s += c_(i, j, k, l) * x(k) * x(l);
      h(i, j) = s;
    }
  return h;
}

SymJet QuadraticTensorH::jet(const Vector& x, int order) const {
  const int m = dim();
  SymJet j;
  j.h = value(x);
  if (order >= 1) {
    j.dh.assign(m, Matrix::Zero(m, m));
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < m; ++jj) {
          double s = 0.0;
          for (int l = 0; l < m; ++l) s += 2.0 * c_(i, jj, k, l) * x(l);
          j.dh[k](i, jj) = s;
        }
  }
  if (order >= 2) {
    j.ddh.assign(static_cast<std::size_t>(m * m), Matrix::Zero(m, m));
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        for (int i = 0; i < m; ++i)
          for (int jj = 0; jj < m; ++jj) j.ddh[k * m + l](i, jj) = 2.0 * c_(i, jj, k, l);
  }
  return j;
}

QuadraticTensorH build_H(const OrbifoldPointData& data) { return QuadraticTensorH(data); }

double HResiduals::max() const { return std::max({homogeneity, bianchi, laplacian, trace}); }

HResiduals h_residuals(const QuadraticTensorH& h, const Vector& x) {
  const int m = h.dim();
  const OrbifoldPointData& d = h.data();
  const EuclideanChart flat(m);
  const double scale = std::max({1.0, std::abs(d.mu), d.curvature.max_abs()});
  const double r2 = x.squaredNorm();
  HResiduals out;
  out.homogeneity = (h.value(2.0 * x) - 4.0 * h.value(x)).cwiseAbs().maxCoeff() / (scale * r2);
  out.bianchi = bianchi_op(flat, h, x).cwiseAbs().maxCoeff() / (scale * std::sqrt(r2));
  const Matrix lap = 0.5 * rough_laplacian(flat, h, x) - d.mu * Matrix::Identity(m, m);
  out.laplacian = lap.cwiseAbs().maxCoeff() / scale;
  out.trace = std::abs(trace(flat, h, x) + d.mu * r2) / (scale * r2);
  return out;
}

PairingResult lambda_pairing(const RadialAleModel& model, const QuadraticTensorH& h,
                             const Sym2Field& o, const std::vector<double>& radii) {
  const int m = model.dim();
  require(h.dim() == m && o.dim() == m, ErrorCode::DimensionMismatch, "pairing dimensions");
  check_schedule(radii, 3);
  require(radii.back() >= 4.0 * radii.front(), ErrorCode::ScheduleTooShort,
          "pairing radii must span at least two octaves");
  const SphereGrid grid = default_sphere_grid(m);
  const double pre = -0.5 * (m + 2) / model.group_order();
  std::vector<double> values, amplitude;
  double scale = 0.0;
  for (double r : radii) {
    double sum = 0.0, abs_sum = 0.0, amp = 0.0;
    for (std::size_t p = 0; p < grid.size(); ++p) {
      const Vector x = r * grid.points[p];
      const Matrix ov = o.value(x);
      const double ip = h.value(x).cwiseProduct(ov).sum();
      sum += grid.weights[p] * ip;
      abs_sum += grid.weights[p] * std::abs(ip);
      amp += grid.weights[p] * ov.squaredNorm();
    }
    const double w = std::pow(r, m - 2);
    values.push_back(pre * w * sum);
    scale = std::max(scale, std::abs(pre) * w * abs_sum);
    amplitude.push_back(std::sqrt(amp) * std::pow(r, m));
  }
  const std::size_t n = radii.size();
  if (amplitude[n - 2] > 0.0)
    require(amplitude[n - 1] <= 2.0 * amplitude[n - 2], ErrorCode::NonDecayingInput,
            "deformation field does not decay like r^-m");
  PairingResult out;
  out.table = richardson_table("lambda_pairing", radii, values, 1.0);
  out.value = out.table.limit();
  out.error = out.table.error();
  const double floor = 1e-10 * scale;
  require(out.error <= kPairingTolerance * std::max(std::abs(out.value), floor),
          ErrorCode::NoConvergence,
          "lambda_pairing: error estimate " + std::to_string(out.error) + " for limit " +
              std::to_string(out.value));
  return out;
}

namespace {

void check_compatible(const OrbifoldPointData& data, const AleInvariants& inv) {
  require(data.dim == inv.dim, ErrorCode::DimensionMismatch,
          "orbifold dimension " + std::to_string(data.dim) + " vs ALE dimension " +
              std::to_string(inv.dim));
  require(data.group_order == inv.group_order, ErrorCode::GroupMismatch,
          "orbifold group order " + std::to_string(data.group_order) + " vs ALE group order " +
              std::to_string(inv.group_order));
}

double weyl_contraction(const OrbifoldPointData& data, const AleInvariants& inv) {
  const Tensor4& w0 = data.weyl.tensor();
  const Tensor4& wi = inv.asymptotic_weyl.tensor();
  return contract(w0, wi) + contract_swapped(w0, wi);
}

}  // namespace

double lambda0_closed_form(const OrbifoldPointData& data, const AleInvariants& inv) {
  check_compatible(data, inv);
  const int m = data.dim;
  const double omega = sphere_area(m);
  return -(2.0 * m * (m - 2) * data.mu * inv.renormalized_volume +
           omega / (3.0 * data.group_order) * weyl_contraction(data, inv));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Unobstructed: return "unobstructed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ObstructionReport obstruction_value(const OrbifoldPointData& data, const AleInvariants& inv) {
  require(data.mu < 0.0, ErrorCode::PositiveEinsteinConstant,
          "the obstruction is only defined for negative Einstein constant (mu = " +
              std::to_string(data.mu) + ")");
  check_compatible(data, inv);
  const int m = data.dim;
  const double kappa = sphere_area(m) / (6.0 * m * (m - 2) * data.group_order);
  ObstructionReport rep;
  rep.dim = m;
  rep.group_order = data.group_order;
  rep.mu = data.mu;
  rep.renormalized_volume = inv.renormalized_volume;
  rep.contraction = weyl_contraction(data, inv);
  rep.lambda0_closed = lambda0_closed_form(data, inv);
  rep.value = data.mu * inv.renormalized_volume + kappa * rep.contraction;

  const double vol_term = data.mu * inv.volume_error;
  const double extrap_term = kappa * rep.contraction * inv.extrapolation_error;
  const double gauge_term =
      2.0 * kappa * data.weyl.norm() * inv.asymptotic_weyl.norm() * inv.gauge_residual;
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() *
                          (std::abs(data.mu * inv.renormalized_volume) + kappa * std::abs(rep.contraction));
  rep.value_error = std::sqrt(vol_term * vol_term + extrap_term * extrap_term +
                              gauge_term * gauge_term) + roundoff;
  const double a = std::abs(rep.value);
  if (a > 10.0 * rep.value_error)
    rep.verdict = Verdict::Obstructed;
  else if (a <= rep.value_error)
    rep.verdict = Verdict::Unobstructed;
  else
    rep.verdict = Verdict::Inconclusive;
  return rep;
}

ObstructionPipeline evaluate_obstruction(std::shared_ptr<const RadialAleModel> model,
                                         const OrbifoldPointData& data,
                                         const std::vector<double>& schedule,
                                         double route_tolerance) {
  require(route_tolerance > 0.0, ErrorCode::InvalidParameter, "route tolerance must be positive");
  require(data.mu < 0.0, ErrorCode::PositiveEinsteinConstant,
          "the obstruction is only defined for negative Einstein constant (mu = " +
              std::to_string(data.mu) + ")");
  ObstructionPipeline out;
  out.invariants = compute_invariants(*model, schedule);
  out.report = obstruction_value(data, out.invariants);
  out.poisson = std::make_shared<RadialPoissonSolution>(solve_poisson_radial(model));
  out.deformation = explicit_deformation(out.poisson, schedule);
  const QuadraticTensorH h = build_H(data);
  const PairingResult p = lambda_pairing(*model, h, *out.deformation.field, schedule);
  ObstructionReport& rep = out.report;
  rep.has_pairing = true;
  rep.lambda0_pairing = p.value;
  rep.pairing_error = p.error;
  rep.pairing_table = p.table;
  rep.l2_norm = out.deformation.l2_norm;
  const int m = data.dim;
  const double floor = std::max({2.0 * m * (m - 2) * rep.value_error, p.error,
                                 std::numeric_limits<double>::min()});
  rep.route_discrepancy =
      std::abs(rep.lambda0_pairing - rep.lambda0_closed) / std::max(std::abs(rep.lambda0_closed), floor);
  if (rep.route_discrepancy > route_tolerance) rep.verdict = Verdict::Inconclusive;
  return out;
}

}  // namespace alegeo
