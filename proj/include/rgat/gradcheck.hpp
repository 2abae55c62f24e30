#pragma once

#include <functional>
#include <vector>

namespace rgat {

/// Central-difference gradient verification.
///
/// For each coordinate k: numeric_k = (f(theta + eps*e_k) - f(theta - eps*e_k)) / (2*eps),
/// compared against analytic_grad[k] with relative error
///   |a - b| / max(|a|, |b|, 1e-8).
/// Returns the maximum relative error over all coordinates.
/// Throws std::runtime_error if any f evaluation is non-finite.
double finite_diff_check(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> theta, const std::vector<double>& analytic_grad,
                         double eps);

} // namespace rgat
