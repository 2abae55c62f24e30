#include "rgat/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rgat {

double finite_diff_check(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double> theta, const std::vector<double>& analytic_grad,
                         double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("finite_diff_check: eps must be positive");
    if (analytic_grad.size() != theta.size()) {
        throw std::invalid_argument("finite_diff_check: gradient length does not match theta");
    }
    double max_rel = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const double saved = theta[k];
        theta[k] = saved + eps;
        const double fp = f(theta);
        theta[k] = saved - eps;
        const double fm = f(theta);
        theta[k] = saved;
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw std::runtime_error("finite_diff_check: non-finite objective at coordinate " +
                                     std::to_string(k));
        }
        const double numeric = (fp - fm) / (2.0 * eps);
        const double analytic = analytic_grad[k];
        const double denom = std::max({std::fabs(numeric), std::fabs(analytic), 1e-8});
        max_rel = std::max(max_rel, std::fabs(numeric - analytic) / denom);
    }
    return max_rel;
}

} // namespace rgat
