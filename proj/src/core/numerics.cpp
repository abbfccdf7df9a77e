#include "alegeo/core/numerics.hpp"

#include "alegeo/core/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace alegeo {

double ConvergenceTable::limit() const {
  return rows.empty() ? std::numeric_limits<double>::quiet_NaN() : rows.back().extrapolated;
}

double ConvergenceTable::error() const {
  return rows.empty() ? std::numeric_limits<double>::infinity() : rows.back().err_estimate;
}

std::string ConvergenceTable::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "radius,value,extrapolated,err_estimate\n";
  for (const auto& r : rows)
    os << r.radius << ',' << r.value << ',' << r.extrapolated << ',' << r.err_estimate << '\n';
  return os.str();
}

ConvergenceTable richardson_table(const std::string& name, const std::vector<double>& radii,
                                  const std::vector<double>& values, double order) {
  require(radii.size() == values.size() && radii.size() >= 2, ErrorCode::InvalidArgument,
          "richardson_table needs at least two matching radii and values");
  ConvergenceTable t;
  t.name = name;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    ConvergenceRow row;
    row.radius = radii[k];
    row.value = values[k];
    if (k == 0) {
      row.extrapolated = values[0];
      row.err_estimate = std::abs(values[1] - values[0]);
    } else {
      const double w1 = std::pow(radii[k], order);
      const double w0 = std::pow(radii[k - 1], order);
      row.extrapolated = (w1 * values[k] - w0 * values[k - 1]) / (w1 - w0);
      const double prev = (k == 1) ? values[1] : t.rows[k - 1].extrapolated;
      row.err_estimate = std::abs(row.extrapolated - prev);
    }
    t.rows.push_back(row);
  }
  return t;
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_tol, double* error) {
  if (a == b) {
    if (error) *error = 0.0;
    return 0.0;
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0, l1 = 0.0;
  // The adaptive rule only understands relative tolerances; express abs_tol as one.
  double tol = rel_tol;
  if (abs_tol > 0.0) {
    GK::integrate(f, a, b, 0, 0.0, &err, &l1);
    if (l1 > 0.0) tol = std::max(tol, abs_tol / l1);
  }
  const double value = GK::integrate(f, a, b, 25, tol, &err, &l1);
  require(std::isfinite(value), ErrorCode::QuadratureFailure, "non-finite integral");
  require(err <= std::max(rel_tol * std::max(std::abs(value), 1e-300) * 10.0, abs_tol),
          ErrorCode::QuadratureFailure,
          "error estimate " + std::to_string(err) + " for integral " + std::to_string(value));
  if (error) *error = err;
  return value;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, ErrorCode::InvalidArgument, "loglog_slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> log_space(double a, double b, int n) {
  std::vector<double> out;
  if (n == 1) return {a};
  for (int i = 0; i < n; ++i) out.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
  out.back() = b;
  return out;
}

void check_schedule(const std::vector<double>& radii, std::size_t min_size) {
  require(radii.size() >= min_size, ErrorCode::InvalidArgument,
          "schedule needs at least " + std::to_string(min_size) + " radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(std::isfinite(radii[i]) && radii[i] > 0, ErrorCode::InvalidArgument,
            "schedule radii must be positive");
    if (i > 0)
      require(radii[i] > radii[i - 1], ErrorCode::InvalidArgument,
              "schedule must be strictly increasing");
  }
}

}  // namespace alegeo
