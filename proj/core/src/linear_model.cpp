#include "socio/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "socio/adam.hpp"
#include "socio/rng.hpp"

namespace socio::models {

LRParams LRParams::zeros(int vocab_size) {
    LRParams p;
    p.vocab_size = vocab_size;
    p.theta.assign(static_cast<std::size_t>(kNumClasses) * vocab_size + kNumClasses, 0.0);
    return p;
}

std::array<double, kNumClasses> softmax(const std::array<double, kNumClasses>& logits) {
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    std::array<double, kNumClasses> probs{};
    double sum = 0.0;
    for (int c = 0; c < kNumClasses; ++c) {
        probs[c] = std::exp(logits[c] - max_logit);
        sum += probs[c];
    }
    for (int c = 0; c < kNumClasses; ++c) probs[c] /= sum;
    return probs;
}

int argmax_class(const std::array<double, kNumClasses>& probs) {
    int best = 0;
    for (int c = 1; c < kNumClasses; ++c) {
        if (probs[c] > probs[best]) best = c;
    }
    return best;
}

std::array<double, kNumClasses> lr_predict(const LRParams& params, const SparseExample& doc) {
    std::array<double, kNumClasses> logits{};
    for (int c = 0; c < kNumClasses; ++c) {
        double z = params.bias(c);
        for (const auto& [id, value] : doc.features) {
            z += params.weight(c, id) * value;
        }
        logits[c] = z;
    }
    return softmax(logits);
}

double lr_loss_grad(const LRParams& params,
                    const std::vector<SparseExample>& batch,
                    double l2,
                    std::vector<double>& grad) {
    grad.assign(params.theta.size(), 0.0);
    const std::size_t bias_offset = static_cast<std::size_t>(kNumClasses) * params.vocab_size;
    const double inv_batch = 1.0 / static_cast<double>(batch.size());

    double loss = 0.0;
    for (const auto& ex : batch) {
        const auto probs = lr_predict(params, ex);
        loss -= std::log(std::max(probs[ex.label], 1e-300)) * inv_batch;
        for (int c = 0; c < kNumClasses; ++c) {
            const double delta = (probs[c] - (c == ex.label ? 1.0 : 0.0)) * inv_batch;
            for (const auto& [id, value] : ex.features) {
                grad[static_cast<std::size_t>(c) * params.vocab_size + id] += delta * value;
            }
            grad[bias_offset + c] += delta;
        }
    }
    if (l2 > 0.0) {
        for (std::size_t i = 0; i < bias_offset; ++i) {  // weights only
            loss += 0.5 * l2 * params.theta[i] * params.theta[i];
            grad[i] += l2 * params.theta[i];
        }
    }
    return loss;
}

LRParams lr_train(const std::vector<SparseExample>& train, const TrainConfig& config,
                  int vocab_size, std::vector<double>* loss_curve) {
    if (train.empty()) throw std::invalid_argument("lr_train: empty train set");
    std::set<int> classes;
    int max_feature = -1;
    for (const auto& ex : train) {
        classes.insert(ex.label);
        for (const auto& [id, _] : ex.features) max_feature = std::max(max_feature, id);
    }
    if (classes.size() < 2) {
        throw std::invalid_argument("lr_train: train set spans a single class");
    }
    if (vocab_size >= 0 && max_feature >= vocab_size) {
        throw std::invalid_argument("lr_train: feature id exceeds vocab_size");
    }

    LRParams params = LRParams::zeros(vocab_size >= 0 ? vocab_size : max_feature + 1);
    AdamOptimizer adam(params.theta.size(), config.learning_rate);
    Rng rng(derive_seed(config.seed, "lr_train"));

    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> grad;
    std::vector<SparseExample> batch;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t batches = 0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(config.batch_size)) {
            batch.clear();
            const std::size_t end =
                std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
            for (std::size_t i = start; i < end; ++i) batch.push_back(train[order[i]]);
            epoch_loss += lr_loss_grad(params, batch, config.l2, grad);
            adam.step(params.theta, grad);
            ++batches;
        }
        if (loss_curve) loss_curve->push_back(epoch_loss / static_cast<double>(batches));
    }
    return params;
}

}  // namespace socio::models
