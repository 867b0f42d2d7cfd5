#include "socio/cnn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "socio/adam.hpp"
#include "socio/linear_model.hpp"  // softmax

namespace socio::models {

std::size_t CNNParams::offset_conv_w() const {
    return static_cast<std::size_t>(vocab_size) * d_emb;
}
std::size_t CNNParams::offset_conv_b() const {
    return offset_conv_w() + static_cast<std::size_t>(n_filters) * window * d_emb;
}
std::size_t CNNParams::offset_hidden_w() const {
    return offset_conv_b() + static_cast<std::size_t>(n_filters);
}
std::size_t CNNParams::offset_hidden_b() const {
    return offset_hidden_w() + static_cast<std::size_t>(d_hidden) * n_filters;
}
std::size_t CNNParams::offset_out_w() const {
    return offset_hidden_b() + static_cast<std::size_t>(d_hidden);
}
std::size_t CNNParams::offset_out_b() const {
    return offset_out_w() + static_cast<std::size_t>(kNumClasses) * d_hidden;
}
std::size_t CNNParams::n_params() const {
    return offset_out_b() + static_cast<std::size_t>(kNumClasses);
}

CNNParams CNNParams::zeros(int vocab_size, const TrainConfig& config) {
    CNNParams p;
    p.vocab_size = vocab_size;
    p.d_emb = config.d_emb;
    p.n_filters = config.n_filters;
    p.window = config.window;
    p.d_hidden = config.d_hidden;
    p.theta.assign(p.n_params(), 0.0);
    return p;
}

namespace {

void fill_glorot(std::vector<double>& theta, std::size_t offset, std::size_t count,
                 int fan_in, int fan_out, Rng& rng) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (std::size_t i = 0; i < count; ++i) {
        theta[offset + i] = rng.uniform(-limit, limit);
    }
}

}  // namespace

CNNParams CNNParams::glorot(int vocab_size, const TrainConfig& config, Rng& rng) {
    CNNParams p = zeros(vocab_size, config);
    fill_glorot(p.theta, p.offset_emb(), static_cast<std::size_t>(vocab_size) * p.d_emb,
                vocab_size, p.d_emb, rng);
    fill_glorot(p.theta, p.offset_conv_w(),
                static_cast<std::size_t>(p.n_filters) * p.window * p.d_emb,
                p.window * p.d_emb, p.n_filters, rng);
    fill_glorot(p.theta, p.offset_hidden_w(),
                static_cast<std::size_t>(p.d_hidden) * p.n_filters, p.n_filters, p.d_hidden,
                rng);
    fill_glorot(p.theta, p.offset_out_w(), static_cast<std::size_t>(kNumClasses) * p.d_hidden,
                p.d_hidden, kNumClasses, rng);
    // UNK doubles as padding; a zero row keeps pad positions inert.
    for (int j = 0; j < p.d_emb; ++j) p.theta[static_cast<std::size_t>(j)] = 0.0;
    return p;
}

std::array<double, kNumClasses> cnn_forward(const CNNParams& params,
                                            const std::vector<int>& seq,
                                            bool train_mode,
                                            double dropout,
                                            Rng* rng,
                                            CnnCache* cache) {
    if (seq.empty()) throw std::invalid_argument("cnn_forward: empty sequence");

    CnnCache local;
    CnnCache& c = cache ? *cache : local;
    c.ids = seq;
    while (c.ids.size() < static_cast<std::size_t>(params.window)) {
        c.ids.push_back(features::kUnkId);
    }

    const int d = params.d_emb;
    const int F = params.n_filters;
    const int w = params.window;
    const std::size_t positions = c.ids.size() - static_cast<std::size_t>(w) + 1;
    const double* emb = params.theta.data() + params.offset_emb();
    const double* conv_w = params.theta.data() + params.offset_conv_w();
    const double* conv_b = params.theta.data() + params.offset_conv_b();

    c.conv_pre.assign(positions * static_cast<std::size_t>(F), 0.0);
    c.pooled.assign(static_cast<std::size_t>(F), 0.0);
    for (std::size_t p = 0; p < positions; ++p) {
        double* z = c.conv_pre.data() + p * static_cast<std::size_t>(F);
        for (int f = 0; f < F; ++f) z[f] = conv_b[f];
        for (int k = 0; k < w; ++k) {
            const double* e = emb + static_cast<std::size_t>(c.ids[p + k]) * d;
            for (int f = 0; f < F; ++f) {
                const double* wrow = conv_w + (static_cast<std::size_t>(f) * w + k) * d;
                double acc = 0.0;
                for (int j = 0; j < d; ++j) acc += wrow[j] * e[j];
                z[f] += acc;
            }
        }
        for (int f = 0; f < F; ++f) {
            if (z[f] > 0.0) c.pooled[f] += z[f];
        }
    }

    c.pooled_dropped = c.pooled;
    c.dropout_mask.clear();
    if (train_mode && dropout > 0.0) {
        if (!rng) throw std::invalid_argument("cnn_forward: train mode needs an rng");
        const double keep = 1.0 - dropout;
        c.dropout_mask.resize(static_cast<std::size_t>(F));
        for (int f = 0; f < F; ++f) {
            c.dropout_mask[f] = (rng->uniform() < keep) ? 1.0 / keep : 0.0;
            c.pooled_dropped[f] = c.pooled[f] * c.dropout_mask[f];
        }
    }

    const double* hidden_w = params.theta.data() + params.offset_hidden_w();
    const double* hidden_b = params.theta.data() + params.offset_hidden_b();
    const int dh = params.d_hidden;
    c.hidden_pre.assign(static_cast<std::size_t>(dh), 0.0);
    c.hidden.assign(static_cast<std::size_t>(dh), 0.0);
    for (int j = 0; j < dh; ++j) {
        double z = hidden_b[j];
        const double* row = hidden_w + static_cast<std::size_t>(j) * F;
        for (int f = 0; f < F; ++f) z += row[f] * c.pooled_dropped[f];
        c.hidden_pre[j] = z;
        c.hidden[j] = z > 0.0 ? z : 0.0;
    }

    const double* out_w = params.theta.data() + params.offset_out_w();
    const double* out_b = params.theta.data() + params.offset_out_b();
    std::array<double, kNumClasses> logits{};
    for (int cidx = 0; cidx < kNumClasses; ++cidx) {
        double z = out_b[cidx];
        const double* row = out_w + static_cast<std::size_t>(cidx) * dh;
        for (int j = 0; j < dh; ++j) z += row[j] * c.hidden[j];
        logits[cidx] = z;
    }
    c.probs = softmax(logits);
    return c.probs;
}

namespace {

// Backprop of one example's cross-entropy into grad; cache holds the forward
// intermediates for exactly this example.
void cnn_backward(const CNNParams& params, const CnnCache& c, int label,
                  double scale, std::vector<double>& grad) {
    const int d = params.d_emb;
    const int F = params.n_filters;
    const int w = params.window;
    const int dh = params.d_hidden;
    const std::size_t positions = c.ids.size() - static_cast<std::size_t>(w) + 1;

    std::array<double, kNumClasses> dlogits{};
    for (int cidx = 0; cidx < kNumClasses; ++cidx) {
        dlogits[cidx] = (c.probs[cidx] - (cidx == label ? 1.0 : 0.0)) * scale;
    }

    const double* out_w = params.theta.data() + params.offset_out_w();
    double* g_out_w = grad.data() + params.offset_out_w();
    double* g_out_b = grad.data() + params.offset_out_b();
    std::vector<double> dhidden(static_cast<std::size_t>(dh), 0.0);
    for (int cidx = 0; cidx < kNumClasses; ++cidx) {
        const double dl = dlogits[cidx];
        g_out_b[cidx] += dl;
        double* grow = g_out_w + static_cast<std::size_t>(cidx) * dh;
        const double* row = out_w + static_cast<std::size_t>(cidx) * dh;
        for (int j = 0; j < dh; ++j) {
            grow[j] += dl * c.hidden[j];
            dhidden[j] += dl * row[j];
        }
    }

    const double* hidden_w = params.theta.data() + params.offset_hidden_w();
    double* g_hidden_w = grad.data() + params.offset_hidden_w();
    double* g_hidden_b = grad.data() + params.offset_hidden_b();
    std::vector<double> dpooled_dropped(static_cast<std::size_t>(F), 0.0);
    for (int j = 0; j < dh; ++j) {
        if (c.hidden_pre[j] <= 0.0) continue;
        const double dz = dhidden[j];
        g_hidden_b[j] += dz;
        double* grow = g_hidden_w + static_cast<std::size_t>(j) * F;
        const double* row = hidden_w + static_cast<std::size_t>(j) * F;
        for (int f = 0; f < F; ++f) {
            grow[f] += dz * c.pooled_dropped[f];
            dpooled_dropped[f] += dz * row[f];
        }
    }

    std::vector<double> dpooled(static_cast<std::size_t>(F), 0.0);
    for (int f = 0; f < F; ++f) {
        dpooled[f] = c.dropout_mask.empty() ? dpooled_dropped[f]
                                            : dpooled_dropped[f] * c.dropout_mask[f];
    }

    const double* emb = params.theta.data() + params.offset_emb();
    const double* conv_w = params.theta.data() + params.offset_conv_w();
    double* g_emb = grad.data() + params.offset_emb();
    double* g_conv_w = grad.data() + params.offset_conv_w();
    double* g_conv_b = grad.data() + params.offset_conv_b();
    for (std::size_t p = 0; p < positions; ++p) {
        const double* z = c.conv_pre.data() + p * static_cast<std::size_t>(F);
        for (int f = 0; f < F; ++f) {
            if (z[f] <= 0.0) continue;
            const double dz = dpooled[f];  // sum pooling broadcasts
            if (dz == 0.0) continue;
            g_conv_b[f] += dz;
            for (int k = 0; k < w; ++k) {
                const std::size_t row_off = (static_cast<std::size_t>(f) * w + k) * d;
                const double* e = emb + static_cast<std::size_t>(c.ids[p + k]) * d;
                double* ge = g_emb + static_cast<std::size_t>(c.ids[p + k]) * d;
                const double* wrow = conv_w + row_off;
                double* gwrow = g_conv_w + row_off;
                for (int j = 0; j < d; ++j) {
                    gwrow[j] += dz * e[j];
                    ge[j] += dz * wrow[j];
                }
            }
        }
    }
}

}  // namespace

double cnn_loss_grad(const CNNParams& params,
                     const std::vector<SeqExample>& batch,
                     double l2,
                     std::vector<double>& grad,
                     double dropout,
                     Rng* rng) {
    if (batch.empty()) throw std::invalid_argument("cnn_loss_grad: empty batch");
    grad.assign(params.theta.size(), 0.0);
    const double inv_batch = 1.0 / static_cast<double>(batch.size());

    double loss = 0.0;
    CnnCache cache;
    for (const SeqExample& ex : batch) {
        cnn_forward(params, ex.ids, dropout > 0.0, dropout, rng, &cache);
        loss -= std::log(std::max(cache.probs[ex.label], 1e-300)) * inv_batch;
        cnn_backward(params, cache, ex.label, inv_batch, grad);
    }

    if (l2 > 0.0) {
        // Embedding rows except UNK.
        const std::size_t emb_begin = static_cast<std::size_t>(params.d_emb);  // skip row 0
        const std::size_t emb_end = params.offset_conv_w();
        for (std::size_t i = emb_begin; i < emb_end; ++i) {
            loss += 0.5 * l2 * params.theta[i] * params.theta[i];
            grad[i] += l2 * params.theta[i];
        }
        // Conv, hidden and output weight matrices; biases stay unpenalized.
        const std::pair<std::size_t, std::size_t> ranges[] = {
            {params.offset_conv_w(), params.offset_conv_b()},
            {params.offset_hidden_w(), params.offset_hidden_b()},
            {params.offset_out_w(), params.offset_out_b()},
        };
        for (const auto& [begin, end] : ranges) {
            for (std::size_t i = begin; i < end; ++i) {
                loss += 0.5 * l2 * params.theta[i] * params.theta[i];
                grad[i] += l2 * params.theta[i];
            }
        }
    }
    return loss;
}

CNNParams cnn_train(const std::vector<SeqExample>& train, int vocab_size,
                    const TrainConfig& config,
                    std::vector<double>* loss_curve) {
    if (train.empty()) throw std::invalid_argument("cnn_train: empty train set");
    std::set<int> classes;
    for (const auto& ex : train) {
        classes.insert(ex.label);
        if (ex.ids.empty()) throw std::invalid_argument("cnn_train: empty sequence");
        for (int id : ex.ids) {
            if (id < 0 || id >= vocab_size) {
                throw std::invalid_argument("cnn_train: id out of vocabulary range");
            }
        }
    }
    if (classes.size() < 2) {
        throw std::invalid_argument("cnn_train: train set spans a single class");
    }

    Rng rng(derive_seed(config.seed, "cnn_train"));
    CNNParams params = CNNParams::glorot(vocab_size, config, rng);
    AdamOptimizer adam(params.theta.size(), config.learning_rate);

    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> grad;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t batches = 0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t end =
                std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
            std::vector<SeqExample> batch(end - start);
            for (std::size_t i = start; i < end; ++i) batch[i - start] = train[order[i]];

            const double loss =
                cnn_loss_grad(params, batch, config.l2, grad, config.dropout, &rng);
            if (!std::isfinite(loss)) {
                throw std::runtime_error("cnn_train: non-finite loss at epoch " +
                                         std::to_string(epoch) + ", batch " +
                                         std::to_string(batches));
            }
            adam.step(params.theta, grad);
            epoch_loss += loss;
            ++batches;
        }
        if (loss_curve) loss_curve->push_back(epoch_loss / static_cast<double>(batches));
    }
    return params;
}

}  // namespace socio::models
