#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "socio/bleach.hpp"
#include "socio/rng.hpp"
#include "socio/tokenize.hpp"
#include "socio/vocab.hpp"

namespace {

// A review-like document of roughly `words` tokens.
std::string synthetic_text(std::size_t words, std::uint64_t seed) {
    static const std::vector<std::string> pool = {
        "the",    "food",   "was",   "amazing", "and",     "really", "tasty!",
        "Came",   "back",   "for",   "more,",   "totally", "worth",  "it.",
        "Staff",  "were",   "kind",  "but",     "parking", "sucks.", "dee-lish",
        "(so",    "good)",  "don't", "miss",    "the",     "cheesy", "focaccia",
    };
    socio::Rng rng(seed);
    std::string text;
    for (std::size_t i = 0; i < words; ++i) {
        text += pool[rng.bounded(pool.size())];
        text.push_back(' ');
    }
    return text;
}

}  // namespace

static void BM_Tokenize(benchmark::State& state) {
    const std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto tokens = socio::features::tokenize(text);
        benchmark::DoNotOptimize(tokens);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * text.size());
}
BENCHMARK(BM_Tokenize)->Range(64, 8192);

static void BM_ExtractNgrams(benchmark::State& state) {
    const std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)), 2);
    const auto tokens = socio::features::tokenize(text);
    for (auto _ : state) {
        auto grams = socio::features::extract_ngrams(tokens, {1, 3, 4, 5, 6}, text, {3, 4, 5, 6});
        benchmark::DoNotOptimize(grams);
    }
}
BENCHMARK(BM_ExtractNgrams)->Range(64, 4096);

static void BM_BleachToken(benchmark::State& state) {
    const auto tokens = socio::features::tokenize(synthetic_text(512, 3));
    std::size_t i = 0;
    for (auto _ : state) {
        auto sym = socio::features::bleach_token(tokens[i % tokens.size()], 617);
        benchmark::DoNotOptimize(sym);
        ++i;
    }
}
BENCHMARK(BM_BleachToken);

static void BM_BuildVocabulary(benchmark::State& state) {
    std::vector<std::vector<std::string>> docs;
    for (int d = 0; d < 64; ++d) {
        docs.push_back(socio::features::tokenize(
            synthetic_text(static_cast<std::size_t>(state.range(0)), 100 + d)));
    }
    for (auto _ : state) {
        socio::features::VocabBuilder builder;
        for (const auto& doc : docs) builder.add_document(doc);
        auto vocab = builder.build();
        benchmark::DoNotOptimize(vocab);
    }
}
BENCHMARK(BM_BuildVocabulary)->Range(64, 1024);
