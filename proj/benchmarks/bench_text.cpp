#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "socio/kruskal.hpp"
#include "socio/langid.hpp"
#include "socio/readability.hpp"
#include "socio/rng.hpp"

namespace {

std::string english_paragraph(std::size_t sentences) {
    std::string text;
    for (std::size_t i = 0; i < sentences; ++i) {
        text += "The waiter explained everything patiently and we ordered the grilled "
                "chicken with a wonderful chocolate cake. ";
    }
    return text;
}

}  // namespace

static void BM_TextStats(benchmark::State& state) {
    const std::string text = english_paragraph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto stats = socio::readability::text_stats(text);
        benchmark::DoNotOptimize(stats);
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * text.size());
}
BENCHMARK(BM_TextStats)->Range(1, 256);

static void BM_DetectLanguage(benchmark::State& state) {
    const auto& id = socio::langid::LanguageIdentifier::bundled();
    const std::string text = english_paragraph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto det = id.detect(text);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_DetectLanguage)->Range(1, 64);

static void BM_KruskalWallis(benchmark::State& state) {
    socio::Rng rng(3);
    std::vector<std::vector<double>> groups(4);
    for (int g = 0; g < 4; ++g) {
        for (int i = 0; i < state.range(0); ++i) {
            groups[g].push_back(10.0 * g + rng.uniform(0.0, 8.0));
        }
    }
    for (auto _ : state) {
        auto result = socio::readability::kruskal_wallis(groups);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_KruskalWallis)->Range(32, 4096);
