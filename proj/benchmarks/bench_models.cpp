#include <benchmark/benchmark.h>

#include "socio/cnn.hpp"
#include "socio/linear_model.hpp"
#include "socio/rng.hpp"

namespace {

using namespace socio::models;

std::vector<SeqExample> random_sequences(int n, int len, int vocab, std::uint64_t seed) {
    socio::Rng rng(seed);
    std::vector<SeqExample> docs;
    for (int i = 0; i < n; ++i) {
        SeqExample ex;
        ex.label = static_cast<int>(rng.bounded(4));
        for (int t = 0; t < len; ++t) ex.ids.push_back(1 + static_cast<int>(rng.bounded(vocab - 1)));
        docs.push_back(std::move(ex));
    }
    return docs;
}

std::vector<SparseExample> random_sparse(int n, int nnz, int vocab, std::uint64_t seed) {
    socio::Rng rng(seed);
    std::vector<SparseExample> docs;
    for (int i = 0; i < n; ++i) {
        SparseExample ex;
        ex.label = static_cast<int>(rng.bounded(4));
        for (int f = 0; f < nnz; ++f) {
            ex.features.emplace_back(static_cast<int>(rng.bounded(vocab)),
                                     1.0 + static_cast<double>(rng.bounded(4)));
        }
        docs.push_back(std::move(ex));
    }
    return docs;
}

}  // namespace

static void BM_CnnForward(benchmark::State& state) {
    TrainConfig config;  // paper-shaped defaults: 64 emb, 128 filters, window 3
    socio::Rng rng(7);
    const auto params = CNNParams::glorot(2000, config, rng);
    const auto docs = random_sequences(1, static_cast<int>(state.range(0)), 2000, 8);
    for (auto _ : state) {
        auto probs = cnn_predict(params, docs[0].ids);
        benchmark::DoNotOptimize(probs);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CnnForward)->Range(64, 4096);

static void BM_CnnTrainBatch(benchmark::State& state) {
    TrainConfig config;
    socio::Rng rng(9);
    const auto params = CNNParams::glorot(500, config, rng);
    const auto batch = random_sequences(16, static_cast<int>(state.range(0)), 500, 10);
    std::vector<double> grad;
    for (auto _ : state) {
        const double loss = cnn_loss_grad(params, batch, config.l2, grad);
        benchmark::DoNotOptimize(loss);
        benchmark::DoNotOptimize(grad);
    }
}
BENCHMARK(BM_CnnTrainBatch)->Range(32, 512);

static void BM_LrEpoch(benchmark::State& state) {
    const int vocab = static_cast<int>(state.range(0));
    const auto docs = random_sparse(128, 200, vocab, 11);
    TrainConfig config;
    config.epochs = 1;
    for (auto _ : state) {
        auto params = lr_train(docs, config, vocab);
        benchmark::DoNotOptimize(params);
    }
}
BENCHMARK(BM_LrEpoch)->Range(1024, 16384);

static void BM_LrPredict(benchmark::State& state) {
    const int vocab = 16384;
    const auto docs = random_sparse(1, static_cast<int>(state.range(0)), vocab, 12);
    const auto params = LRParams::zeros(vocab);
    for (auto _ : state) {
        auto probs = lr_predict(params, docs[0]);
        benchmark::DoNotOptimize(probs);
    }
}
BENCHMARK(BM_LrPredict)->Range(16, 2048);
