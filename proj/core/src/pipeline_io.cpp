#include <fstream>

#include "pipeline_detail.hpp"
#include "socio/errors.hpp"
#include "socio/hash.hpp"
#include "socio/manifest.hpp"

namespace socio::pipeline::detail {

using nlohmann::json;

std::string features_artifact(features::Repr repr) {
    return "features_" + features::to_string(repr) + ".jsonl";
}
std::string vocab_artifact(features::Repr repr) {
    return "vocab_" + features::to_string(repr) + ".tsv";
}
std::string lr_checkpoint(features::Repr repr) {
    return "model_lr_" + features::to_string(repr) + ".json";
}
std::string cnn_checkpoint(features::Repr repr, int run) {
    return "model_cnn_" + features::to_string(repr) + "_run" + std::to_string(run) + ".json";
}
std::string confusion_artifact(const std::string& model, features::Repr repr) {
    return "confusion_" + model + "_" + features::to_string(repr) + ".svg";
}

fs::path artifact_path(const PipelineConfig& config, const std::string& name) {
    return fs::path(config.workdir) / name;
}

json config_echo(const PipelineConfig& config) {
    json j;
    j["seed"] = config.seed;
    j["min_reviews"] = config.min_reviews;
    j["train_fraction"] = config.train_fraction;
    j["min_df"] = config.min_df;
    j["runs"] = config.runs;
    j["top_k"] = config.top_k;
    std::vector<std::string> reprs;
    for (auto r : config.representations) reprs.push_back(features::to_string(r));
    j["representations"] = reprs;
    j["models"] = config.models;
    switch (config.lang_filter) {
        case LangFilter::trigram: j["lang_filter"] = "trigram"; break;
        case LangFilter::trust_field: j["lang_filter"] = "trust-field"; break;
        case LangFilter::off: j["lang_filter"] = "off"; break;
    }
    j["train"] = {
        {"learning_rate", config.train.learning_rate},
        {"l2", config.train.l2},
        {"dropout", config.train.dropout},
        {"epochs", config.train.epochs},
        {"batch_size", config.train.batch_size},
        {"d_emb", config.train.d_emb},
        {"n_filters", config.train.n_filters},
        {"window", config.train.window},
        {"d_hidden", config.train.d_hidden},
        {"max_seq_len", config.train.max_seq_len},
    };
    j["features"] = {
        {"word_ngrams", std::vector<int>(config.repr.word_ns.begin(), config.repr.word_ns.end())},
        {"char_ngrams", std::vector<int>(config.repr.char_ns.begin(), config.repr.char_ns.end())},
        {"freq_buckets", config.repr.bucket_freq},
    };
    return j;
}

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw IoError("corrupt JSON in " + path.string());
    return j;
}

namespace {

void write_jsonl(const fs::path& path, const std::vector<json>& lines) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& j : lines) out << j.dump() << '\n';
}

std::vector<json> read_jsonl(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<json> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw IoError("corrupt JSONL line " + std::to_string(line_no) + " in " +
                          path.string());
        }
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

void write_profiles(const fs::path& path, const std::vector<corpus::AuthorProfile>& profiles) {
    std::vector<json> lines;
    lines.reserve(profiles.size());
    for (const auto& p : profiles) {
        json counts = json::object();
        for (const auto& [cls, count] : p.label_counts) counts[std::to_string(cls)] = count;
        json reviews = json::array();
        for (const auto& r : p.reviews) {
            reviews.push_back({{"review_id", r.review_id},
                               {"order_key", r.order_key},
                               {"text", r.text}});
        }
        lines.push_back(
            {{"user_id", p.user_id}, {"label_counts", counts}, {"reviews", reviews}});
    }
    write_jsonl(path, lines);
}

std::map<std::string, corpus::AuthorProfile> read_profiles(const fs::path& path) {
    std::map<std::string, corpus::AuthorProfile> out;
    for (const auto& j : read_jsonl(path)) {
        corpus::AuthorProfile p;
        p.user_id = j.at("user_id").get<std::string>();
        for (const auto& [cls, count] : j.at("label_counts").items()) {
            p.label_counts[std::stoi(cls)] = count.get<int>();
        }
        for (const auto& r : j.at("reviews")) {
            corpus::Review review;
            review.review_id = r.at("review_id").get<std::string>();
            review.order_key = r.at("order_key").get<std::string>();
            review.text = r.at("text").get<std::string>();
            review.user_id = p.user_id;
            p.reviews.push_back(std::move(review));
        }
        out.emplace(p.user_id, std::move(p));
    }
    return out;
}

void write_labeled_authors(const fs::path& path,
                           const std::vector<labeling::LabeledAuthor>& authors) {
    std::vector<json> lines;
    lines.reserve(authors.size());
    for (const auto& a : authors) {
        lines.push_back({{"user_id", a.user_id},
                         {"class_id", a.label.class_id},
                         {"entropy", a.entropy_nats},
                         {"review_count", a.review_count}});
    }
    write_jsonl(path, lines);
}

std::vector<labeling::LabeledAuthor> read_labeled_authors(const fs::path& path) {
    std::vector<labeling::LabeledAuthor> out;
    for (const auto& j : read_jsonl(path)) {
        labeling::LabeledAuthor a;
        a.user_id = j.at("user_id").get<std::string>();
        a.label.class_id = j.at("class_id").get<int>();
        a.entropy_nats = j.at("entropy").get<double>();
        a.review_count = j.at("review_count").get<int>();
        out.push_back(std::move(a));
    }
    return out;
}

void write_documents(const fs::path& path,
                     const std::vector<labeling::LabeledDocument>& docs) {
    std::vector<json> lines;
    lines.reserve(docs.size());
    for (const auto& d : docs) {
        lines.push_back(
            {{"user_id", d.user_id}, {"class_id", d.label.class_id}, {"text", d.text}});
    }
    write_jsonl(path, lines);
}

std::vector<labeling::LabeledDocument> read_documents(const fs::path& path) {
    std::vector<labeling::LabeledDocument> out;
    for (const auto& j : read_jsonl(path)) {
        labeling::LabeledDocument d;
        d.user_id = j.at("user_id").get<std::string>();
        d.label.class_id = j.at("class_id").get<int>();
        d.text = j.at("text").get<std::string>();
        out.push_back(std::move(d));
    }
    return out;
}

void write_split(const fs::path& path, const SplitInfo& split, std::uint64_t seed,
                 double train_fraction) {
    json j;
    j["seed"] = seed;
    j["train_fraction"] = train_fraction;
    j["train_ids"] = split.train_ids;
    j["test_ids"] = split.test_ids;
    j["hash"] = split.hash;
    write_json_file(path, j);
}

SplitInfo read_split(const fs::path& path) {
    const json j = read_json_file(path);
    SplitInfo s;
    s.train_ids = j.at("train_ids").get<std::vector<std::string>>();
    s.test_ids = j.at("test_ids").get<std::vector<std::string>>();
    s.hash = j.at("hash").get<std::string>();
    return s;
}

void write_feature_docs(const fs::path& path, const std::vector<features::FeatureDoc>& docs) {
    std::vector<json> lines;
    lines.reserve(docs.size());
    for (const auto& d : docs) {
        json counts = json::object();
        for (const auto& [id, count] : d.counts) counts[std::to_string(id)] = count;
        lines.push_back({{"doc_id", d.doc_id},
                         {"class_id", d.class_id},
                         {"counts", counts},
                         {"seq", d.seq}});
    }
    write_jsonl(path, lines);
}

std::vector<features::FeatureDoc> read_feature_docs(const fs::path& path) {
    std::vector<features::FeatureDoc> out;
    for (const auto& j : read_jsonl(path)) {
        features::FeatureDoc d;
        d.doc_id = j.at("doc_id").get<std::string>();
        d.class_id = j.at("class_id").get<int>();
        for (const auto& [id, count] : j.at("counts").items()) {
            d.counts[std::stoi(id)] = count.get<int>();
        }
        d.seq = j.at("seq").get<std::vector<int>>();
        out.push_back(std::move(d));
    }
    return out;
}

void finish_stage(const PipelineConfig& config, const std::string& stage,
                  const std::map<std::string, std::string>& external_inputs,
                  const std::vector<std::string>& outputs,
                  const json& stage_config) {
    Manifest manifest = Manifest::load(config.workdir);
    StageRecord record;
    record.stage = stage;
    record.config = stage_config;
    record.inputs = external_inputs;
    for (const auto& name : outputs) {
        record.outputs[name] = hash_file(artifact_path(config, name).string());
    }
    manifest.record(std::move(record));
    manifest.save(config.workdir);
}

}  // namespace socio::pipeline::detail
