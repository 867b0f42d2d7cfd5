#pragma once

// Bias-corrected Adam over a flat parameter vector.

#include <cstdint>
#include <vector>

namespace socio::models {

class AdamOptimizer {
public:
    AdamOptimizer(std::size_t n_params, double learning_rate,
                  double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8)
        : lr_(learning_rate),
          beta1_(beta1),
          beta2_(beta2),
          epsilon_(epsilon),
          m_(n_params, 0.0),
          v_(n_params, 0.0) {}

    void step(std::vector<double>& params, const std::vector<double>& grad);

    std::uint64_t timestep() const { return t_; }

private:
    double lr_, beta1_, beta2_, epsilon_;
    std::uint64_t t_ = 0;
    std::vector<double> m_, v_;
};

}  // namespace socio::models
