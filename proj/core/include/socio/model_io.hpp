#pragma once

// Versioned JSON checkpoints carrying config, vocabulary hash and tensors.
// Loading refuses a checkpoint whose vocabulary hash differs from the one in
// force.

#include <cstdint>
#include <string>
#include <vector>

#include "socio/cnn.hpp"
#include "socio/linear_model.hpp"

namespace socio::models {

struct CheckpointMeta {
    std::string model;           // "lr" or "cnn"
    std::string representation;  // lexical/bleach/pos/deptriple
    std::string vocab_hash;
    std::uint64_t seed = 0;
    int run = 0;  // 1-based run index for multi-run models
    std::vector<double> loss_curve;
};

void save_lr(const std::string& path, const LRParams& params, const TrainConfig& config,
             const CheckpointMeta& meta);
LRParams load_lr(const std::string& path, const std::string& expected_vocab_hash,
                 CheckpointMeta* meta = nullptr);

void save_cnn(const std::string& path, const CNNParams& params, const TrainConfig& config,
              const CheckpointMeta& meta);
CNNParams load_cnn(const std::string& path, const std::string& expected_vocab_hash,
                   CheckpointMeta* meta = nullptr);

}  // namespace socio::models
