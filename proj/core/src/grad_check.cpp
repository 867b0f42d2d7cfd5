#include "socio/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace socio::models {

GradCheckResult gradient_check(const std::function<double(const std::vector<double>&)>& loss,
                               const std::vector<double>& analytic_grad,
                               std::vector<double> theta,
                               double epsilon) {
    if (analytic_grad.size() != theta.size()) {
        throw std::invalid_argument("gradient_check: gradient/parameter size mismatch");
    }
    GradCheckResult result;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double saved = theta[i];
        theta[i] = saved + epsilon;
        const double f_plus = loss(theta);
        theta[i] = saved - epsilon;
        const double f_minus = loss(theta);
        theta[i] = saved;

        const double numeric = (f_plus - f_minus) / (2.0 * epsilon);
        const double analytic = analytic_grad[i];
        const double rel = std::abs(analytic - numeric) /
                           std::max({std::abs(analytic), std::abs(numeric), 1e-8});
        if (rel > result.max_rel_error) {
            result.max_rel_error = rel;
            result.worst_index = i;
            result.analytic_at_worst = analytic;
            result.numeric_at_worst = numeric;
        }
    }
    return result;
}

}  // namespace socio::models
