#pragma once

#include <cstdint>

namespace socio::models {

inline constexpr int kNumClasses = 4;

struct TrainConfig {
    double learning_rate = 0.001;
    double l2 = 1e-4;
    double dropout = 0.2;  // in [0, 1)
    int epochs = 20;
    int batch_size = 16;
    std::uint64_t seed = 42;
    int d_emb = 64;
    int n_filters = 128;
    int window = 3;
    int d_hidden = 64;
    int max_seq_len = 5000;

    void validate() const;  // throws ConfigError on out-of-range fields
};

}  // namespace socio::models
