#pragma once

// Splitting, scoring, run averaging and linear-model inspection.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "socio/labeling.hpp"
#include "socio/linear_model.hpp"
#include "socio/vocab.hpp"

namespace socio::eval {

struct ConfusionMatrix {
    // rows = gold class index (0..3), columns = predicted.
    std::array<std::array<std::int64_t, 4>, 4> m{};

    std::int64_t total() const;
    std::int64_t row_sum(int gold) const;
    std::int64_t col_sum(int pred) const;
};

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::int64_t support = 0;
};

struct EvalReport {
    std::string model_tag;
    std::string repr_tag;
    std::array<ClassScores, 4> per_class;
    double weighted_f1 = 0.0;  // headline, support-weighted
    double macro_f1 = 0.0;
    double accuracy = 0.0;
    ConfusionMatrix confusion;
    std::vector<std::uint64_t> run_seeds;
};

// Per class: seeded shuffle, floor(fraction*n) to train, rest to test.
// Throws std::invalid_argument when a class has < 2 docs or the fraction is
// outside (0, 1). The same (docs, fraction, seed) always yields the same
// split.
std::pair<std::vector<labeling::LabeledDocument>, std::vector<labeling::LabeledDocument>>
stratified_split(const std::vector<labeling::LabeledDocument>& docs,
                 double train_fraction, std::uint64_t seed);

// Order-insensitive fingerprint of a split, for cross-checking that every
// model/representation cell used the same one.
std::string split_hash(const std::vector<std::string>& train_ids,
                       const std::vector<std::string>& test_ids);
std::string split_hash(const std::vector<labeling::LabeledDocument>& train,
                       const std::vector<labeling::LabeledDocument>& test);

// preds and gold carry class ids 1..4. Zero denominators score 0.
EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& gold);

// Mean of scalar scores, summed confusion matrices, union of run seeds.
// Reports must agree on model/repr tags.
EvalReport average_runs(const std::vector<EvalReport>& reports);

struct RankedFeature {
    std::string symbol;
    double weight = 0.0;
};

// Per class, the k symbols with the largest positive weight (ties broken by
// symbol order). word_unigrams_only keeps only "w:" symbols without spaces;
// by_magnitude ranks on |weight| instead.
std::array<std::vector<RankedFeature>, 4> top_features(const models::LRParams& params,
                                                       const features::Vocabulary& vocab,
                                                       int k,
                                                       bool word_unigrams_only = false,
                                                       bool by_magnitude = false);

// Grid-heatmap SVG with annotated counts.
std::string confusion_svg(const ConfusionMatrix& cm, const std::string& title);

}  // namespace socio::eval
