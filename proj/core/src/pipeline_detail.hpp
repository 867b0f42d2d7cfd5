#pragma once

// Internal helpers shared by the pipeline stage implementations. Not part of
// the installed API.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "socio/corpus.hpp"
#include "socio/labeling.hpp"
#include "socio/pipeline.hpp"
#include "socio/vocab.hpp"

namespace socio::pipeline::detail {

namespace fs = std::filesystem;

inline constexpr const char* kProfiles = "profiles.jsonl";
inline constexpr const char* kIngestReport = "ingest_report.json";
inline constexpr const char* kLabeledAuthors = "labeled_authors.jsonl";
inline constexpr const char* kDocuments = "documents.jsonl";
inline constexpr const char* kLabelReport = "label_report.json";
inline constexpr const char* kReadabilityReport = "readability_report.json";
inline constexpr const char* kSplit = "split.json";
inline constexpr const char* kEvalReport = "eval_report.json";
inline constexpr const char* kReport = "report.json";
inline constexpr const char* kTopFeatures = "top_features.tsv";

std::string features_artifact(features::Repr repr);
std::string vocab_artifact(features::Repr repr);
std::string lr_checkpoint(features::Repr repr);
std::string cnn_checkpoint(features::Repr repr, int run);
std::string confusion_artifact(const std::string& model, features::Repr repr);

fs::path artifact_path(const PipelineConfig& config, const std::string& name);

// Echo of every determinism-relevant knob; paths and timestamps excluded so
// hashed artifacts stay comparable across checkouts.
nlohmann::json config_echo(const PipelineConfig& config);

void write_json_file(const fs::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const fs::path& path);

void write_profiles(const fs::path& path, const std::vector<corpus::AuthorProfile>& profiles);
std::map<std::string, corpus::AuthorProfile> read_profiles(const fs::path& path);

void write_labeled_authors(const fs::path& path,
                           const std::vector<labeling::LabeledAuthor>& authors);
std::vector<labeling::LabeledAuthor> read_labeled_authors(const fs::path& path);

void write_documents(const fs::path& path,
                     const std::vector<labeling::LabeledDocument>& docs);
std::vector<labeling::LabeledDocument> read_documents(const fs::path& path);

struct SplitInfo {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
    std::string hash;
};

void write_split(const fs::path& path, const SplitInfo& split, std::uint64_t seed,
                 double train_fraction);
SplitInfo read_split(const fs::path& path);

void write_feature_docs(const fs::path& path, const std::vector<features::FeatureDoc>& docs);
std::vector<features::FeatureDoc> read_feature_docs(const fs::path& path);

// Stage helper: record outputs (with hashes) into the manifest and save it.
void finish_stage(const PipelineConfig& config, const std::string& stage,
                  const std::map<std::string, std::string>& external_inputs,
                  const std::vector<std::string>& outputs,
                  const nlohmann::json& stage_config);

}  // namespace socio::pipeline::detail
