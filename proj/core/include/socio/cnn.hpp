#pragma once

// Sequence classifier: embedding -> single 1-D convolution (valid positions,
// ReLU) -> sum pooling -> inverted dropout -> hidden ReLU -> softmax over 4
// classes. Written from scratch so the whole gradient is checkable against
// finite differences.

#include <array>
#include <cstdint>
#include <vector>

#include "socio/dataset.hpp"
#include "socio/rng.hpp"
#include "socio/train_config.hpp"

namespace socio::models {

struct CNNParams {
    int vocab_size = 0;
    int d_emb = 0;
    int n_filters = 0;
    int window = 0;
    int d_hidden = 0;

    // Flat layout, in order: E[V x d_emb], Wc[F x window*d_emb], bc[F],
    // Wh[d_hidden x F], bh[d_hidden], Wo[4 x d_hidden], bo[4].
    std::vector<double> theta;

    std::size_t offset_emb() const { return 0; }
    std::size_t offset_conv_w() const;
    std::size_t offset_conv_b() const;
    std::size_t offset_hidden_w() const;
    std::size_t offset_hidden_b() const;
    std::size_t offset_out_w() const;
    std::size_t offset_out_b() const;
    std::size_t n_params() const;

    static CNNParams zeros(int vocab_size, const TrainConfig& config);
    // Glorot-uniform weights, zero biases, zero UNK embedding row.
    static CNNParams glorot(int vocab_size, const TrainConfig& config, Rng& rng);
};

struct CnnCache {
    std::vector<int> ids;              // padded input
    std::vector<double> conv_pre;      // [positions x F], pre-ReLU
    std::vector<double> pooled;        // [F]
    std::vector<double> dropout_mask;  // [F], 1/keep or 0; empty in eval mode
    std::vector<double> pooled_dropped;
    std::vector<double> hidden_pre;    // [d_hidden]
    std::vector<double> hidden;        // [d_hidden]
    std::array<double, kNumClasses> probs{};
};

// Eval mode is deterministic; train mode draws one inverted-dropout mask from
// rng. Sequences shorter than the window are padded with UNK; empty input
// throws std::invalid_argument.
std::array<double, kNumClasses> cnn_forward(const CNNParams& params,
                                            const std::vector<int>& seq,
                                            bool train_mode,
                                            double dropout,
                                            Rng* rng,
                                            CnnCache* cache = nullptr);

inline std::array<double, kNumClasses> cnn_predict(const CNNParams& params,
                                                   const std::vector<int>& seq) {
    return cnn_forward(params, seq, /*train_mode=*/false, 0.0, nullptr);
}

// Mean cross-entropy over the batch plus (l2/2) * ||weights||^2; the L2 term
// covers conv/hidden/output weights and embedding rows except UNK, never
// biases. dropout > 0 draws one inverted mask per example from rng (train
// mode). Gradient is written into grad.
double cnn_loss_grad(const CNNParams& params,
                     const std::vector<SeqExample>& batch,
                     double l2,
                     std::vector<double>& grad,
                     double dropout = 0.0,
                     Rng* rng = nullptr);

// Mini-batch Adam, Glorot init, seeded shuffling and dropout; bitwise
// deterministic for fixed (data, config). Aborts with diagnostics on a
// non-finite loss. Throws std::invalid_argument as lr_train does.
CNNParams cnn_train(const std::vector<SeqExample>& train, int vocab_size,
                    const TrainConfig& config,
                    std::vector<double>* loss_curve = nullptr);

}  // namespace socio::models
