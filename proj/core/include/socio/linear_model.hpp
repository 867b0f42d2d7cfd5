#pragma once

// Multinomial logistic regression on sparse count vectors, trained by
// mini-batch Adam so the same optimizer stack and gradient-check harness
// serve both classifiers.

#include <array>
#include <string>
#include <vector>

#include "socio/dataset.hpp"
#include "socio/train_config.hpp"

namespace socio::models {

struct LRParams {
    int vocab_size = 0;
    // Flat layout: W[kNumClasses x vocab_size] row-major, then b[kNumClasses].
    std::vector<double> theta;

    static LRParams zeros(int vocab_size);

    double weight(int cls, int feature) const {
        return theta[static_cast<std::size_t>(cls) * vocab_size + feature];
    }
    double& weight(int cls, int feature) {
        return theta[static_cast<std::size_t>(cls) * vocab_size + feature];
    }
    double bias(int cls) const {
        return theta[static_cast<std::size_t>(kNumClasses) * vocab_size + cls];
    }
};

std::array<double, kNumClasses> softmax(const std::array<double, kNumClasses>& logits);

std::array<double, kNumClasses> lr_predict(const LRParams& params, const SparseExample& doc);

// Mean cross-entropy over the batch plus (l2/2)*||W||^2 (biases unpenalized).
// Gradient is written into grad (resized to theta's size).
double lr_loss_grad(const LRParams& params,
                    const std::vector<SparseExample>& batch,
                    double l2,
                    std::vector<double>& grad);

// Deterministic for a fixed config.seed. Throws std::invalid_argument on an
// empty train set or one spanning a single class. vocab_size < 0 infers the
// width from the largest feature id in the train set.
LRParams lr_train(const std::vector<SparseExample>& train, const TrainConfig& config,
                  int vocab_size = -1, std::vector<double>* loss_curve = nullptr);

int argmax_class(const std::array<double, kNumClasses>& probs);

}  // namespace socio::models
