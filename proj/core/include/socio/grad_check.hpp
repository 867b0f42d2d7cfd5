#pragma once

// Central-finite-difference verification harness for any flat-parameter
// model. Run with dropout disabled; near a ReLU boundary the caller should
// re-sample the instance.

#include <cstddef>
#include <functional>
#include <vector>

namespace socio::models {

struct GradCheckResult {
    double max_rel_error = 0.0;
    std::size_t worst_index = 0;
    double analytic_at_worst = 0.0;
    double numeric_at_worst = 0.0;
};

// loss(theta) is evaluated at theta +/- epsilon per coordinate; relative
// error is |a - n| / max(|a|, |n|, 1e-8).
GradCheckResult gradient_check(const std::function<double(const std::vector<double>&)>& loss,
                               const std::vector<double>& analytic_grad,
                               std::vector<double> theta,
                               double epsilon);

}  // namespace socio::models
