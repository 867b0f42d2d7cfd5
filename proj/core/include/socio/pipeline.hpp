#pragma once

// Full pipeline orchestration: ingest -> label -> readability -> featurize ->
// train -> evaluate -> report, each stage writing its artifact plus a
// manifest entry so runs are resumable and reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "socio/represent.hpp"
#include "socio/train_config.hpp"

namespace socio::pipeline {

enum class LangFilter { trigram, trust_field, off };

struct PipelineConfig {
    std::string reviews_path;
    std::string businesses_path;
    std::string conllu_path;      // required by pos/deptriple
    std::string workdir = "work";
    std::string easy_words_path;  // empty = builtin list

    std::uint64_t seed = 42;
    int min_reviews = 9;
    double train_fraction = 0.8;
    int min_df = 1;
    int runs = 2;   // CNN runs per representation
    int top_k = 10; // feature-inspection depth

    std::vector<features::Repr> representations{features::Repr::lexical,
                                                features::Repr::bleach};
    std::vector<std::string> models{"lr", "cnn"};
    LangFilter lang_filter = LangFilter::trigram;

    models::TrainConfig train;
    features::ReprConfig repr;

    // Throws ConfigError on contradictions (e.g. pos requested without a
    // conllu path). Checked before any stage does work.
    void validate() const;
};

void run_ingest(const PipelineConfig& config);
void run_label(const PipelineConfig& config);
void run_readability(const PipelineConfig& config);
void run_featurize(const PipelineConfig& config);
void run_train(const PipelineConfig& config);
void run_evaluate(const PipelineConfig& config);
void run_report(const PipelineConfig& config);

// Stage names in execution order.
const std::vector<std::string>& stage_names();

// Runs one named stage; on failure the manifest records the failed stage
// before the exception propagates.
void run_stage(const std::string& stage, const PipelineConfig& config);

// All stages in order; returns 0 on success.
int run_pipeline(const PipelineConfig& config);

}  // namespace socio::pipeline
