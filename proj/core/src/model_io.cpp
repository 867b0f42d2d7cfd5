#include "socio/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "socio/errors.hpp"

namespace socio::models {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json meta_json(const CheckpointMeta& meta, const TrainConfig& config) {
    json j;
    j["format_version"] = kFormatVersion;
    j["model"] = meta.model;
    j["representation"] = meta.representation;
    j["vocab_hash"] = meta.vocab_hash;
    j["seed"] = meta.seed;
    j["run"] = meta.run;
    j["loss_curve"] = meta.loss_curve;
    j["config"] = {
        {"learning_rate", config.learning_rate}, {"l2", config.l2},
        {"dropout", config.dropout},             {"epochs", config.epochs},
        {"batch_size", config.batch_size},       {"seed", config.seed},
        {"d_emb", config.d_emb},                 {"n_filters", config.n_filters},
        {"window", config.window},               {"d_hidden", config.d_hidden},
        {"max_seq_len", config.max_seq_len},
    };
    return j;
}

json read_checkpoint(const std::string& path, const std::string& expected_model,
                     const std::string& expected_vocab_hash, CheckpointMeta* meta) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open checkpoint: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw IoError("corrupt checkpoint: " + path);
    if (j.value("format_version", -1) != kFormatVersion) {
        throw IoError("unsupported checkpoint version in " + path);
    }
    if (j.value("model", "") != expected_model) {
        throw IoError("checkpoint " + path + " holds a '" + j.value("model", "?") +
                      "' model, expected '" + expected_model + "'");
    }
    const std::string vocab_hash = j.value("vocab_hash", "");
    if (!expected_vocab_hash.empty() && vocab_hash != expected_vocab_hash) {
        throw IoError("checkpoint " + path + " was trained against vocabulary " + vocab_hash +
                      ", current vocabulary is " + expected_vocab_hash);
    }
    if (meta) {
        meta->model = j.value("model", "");
        meta->representation = j.value("representation", "");
        meta->vocab_hash = vocab_hash;
        meta->seed = j.value("seed", std::uint64_t{0});
        meta->run = j.value("run", 0);
        meta->loss_curve = j.value("loss_curve", std::vector<double>{});
    }
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write checkpoint: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

void save_lr(const std::string& path, const LRParams& params, const TrainConfig& config,
             const CheckpointMeta& meta) {
    json j = meta_json(meta, config);
    j["vocab_size"] = params.vocab_size;
    j["theta"] = params.theta;
    write_json(path, j);
}

LRParams load_lr(const std::string& path, const std::string& expected_vocab_hash,
                 CheckpointMeta* meta) {
    json j = read_checkpoint(path, "lr", expected_vocab_hash, meta);
    LRParams params;
    params.vocab_size = j.at("vocab_size").get<int>();
    params.theta = j.at("theta").get<std::vector<double>>();
    const std::size_t expected =
        static_cast<std::size_t>(kNumClasses) * params.vocab_size + kNumClasses;
    if (params.theta.size() != expected) throw IoError("checkpoint tensor shape mismatch");
    return params;
}

void save_cnn(const std::string& path, const CNNParams& params, const TrainConfig& config,
              const CheckpointMeta& meta) {
    json j = meta_json(meta, config);
    j["vocab_size"] = params.vocab_size;
    j["d_emb"] = params.d_emb;
    j["n_filters"] = params.n_filters;
    j["window"] = params.window;
    j["d_hidden"] = params.d_hidden;
    j["theta"] = params.theta;
    write_json(path, j);
}

CNNParams load_cnn(const std::string& path, const std::string& expected_vocab_hash,
                   CheckpointMeta* meta) {
    json j = read_checkpoint(path, "cnn", expected_vocab_hash, meta);
    CNNParams params;
    params.vocab_size = j.at("vocab_size").get<int>();
    params.d_emb = j.at("d_emb").get<int>();
    params.n_filters = j.at("n_filters").get<int>();
    params.window = j.at("window").get<int>();
    params.d_hidden = j.at("d_hidden").get<int>();
    params.theta = j.at("theta").get<std::vector<double>>();
    if (params.theta.size() != params.n_params()) {
        throw IoError("checkpoint tensor shape mismatch");
    }
    return params;
}

}  // namespace socio::models
