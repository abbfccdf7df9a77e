#pragma once

#include <functional>
#include <string>
#include <vector>

namespace alegeo {

struct ConvergenceRow {
  double radius = 0.0;
  double value = 0.0;
  double extrapolated = 0.0;
  double err_estimate = 0.0;
};

/// Finite-radius values with Richardson extrapolants.
struct ConvergenceTable {
  std::string name;
  std::vector<ConvergenceRow> rows;

  double limit() const;
  double error() const;
  /// Columns: radius, value, extrapolated, err_estimate.
  std::string to_csv() const;
};

/// Richardson extrapolation under the model value(r) = L + c r^{-order}.
/// Row k > 0 extrapolates from rows k-1 and k. The error of row 0 is the
/// raw change to row 1; later rows use the change between successive extrapolants
/// (row 1 compares with the raw value).
ConvergenceTable richardson_table(const std::string& name, const std::vector<double>& radii,
                                  const std::vector<double>& values, double order);

/// Adaptive Gauss-Kronrod quadrature on [a, b]. Throws QuadratureFailure when the
/// error estimate exceeds max(rel_tol * |I|, abs_tol).
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_tol = 0.0, double* error = nullptr);

/// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Logarithmically spaced points from a to b inclusive.
std::vector<double> log_space(double a, double b, int n);

/// Validates a radius schedule: positive and strictly increasing. Throws InvalidArgument.
void check_schedule(const std::vector<double>& radii, std::size_t min_size);

}  // namespace alegeo
