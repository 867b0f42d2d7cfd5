// Subcommand front-end over the pipeline library. Configuration comes from
// flags plus an optional JSON config file; flags win.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "socio/errors.hpp"
#include "socio/pipeline.hpp"

namespace {

using socio::pipeline::LangFilter;
using socio::pipeline::PipelineConfig;

struct CliState {
    PipelineConfig config;
    std::string config_path;
    std::vector<std::string> representations{"lexical", "bleach"};
    std::vector<int> word_ngrams{1, 3, 4, 5, 6};
    std::vector<int> char_ngrams{3, 4, 5, 6};
    std::string lang_filter = "trigram";
};

void apply_config_file(CLI::App& app, CliState& state) {
    if (state.config_path.empty()) return;
    std::ifstream in(state.config_path);
    if (!in) throw socio::ConfigError("cannot open config file: " + state.config_path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw socio::ConfigError("config file is not valid JSON");

    auto unset = [&](const char* flag) { return app.count(flag) == 0; };
    PipelineConfig& c = state.config;

    if (j.contains("reviews") && unset("--reviews")) c.reviews_path = j["reviews"];
    if (j.contains("businesses") && unset("--businesses")) c.businesses_path = j["businesses"];
    if (j.contains("conllu") && unset("--conllu")) c.conllu_path = j["conllu"];
    if (j.contains("workdir") && unset("--workdir")) c.workdir = j["workdir"];
    if (j.contains("dale_chall_list") && unset("--dale-chall-list")) {
        c.easy_words_path = j["dale_chall_list"];
    }
    if (j.contains("seed") && unset("--seed")) c.seed = j["seed"];
    if (j.contains("min_reviews") && unset("--min-reviews")) c.min_reviews = j["min_reviews"];
    if (j.contains("train_fraction") && unset("--train-fraction")) {
        c.train_fraction = j["train_fraction"];
    }
    if (j.contains("min_df") && unset("--min-df")) c.min_df = j["min_df"];
    if (j.contains("runs") && unset("--runs")) c.runs = j["runs"];
    if (j.contains("top_k") && unset("--top-k")) c.top_k = j["top_k"];
    if (j.contains("representations") && unset("--representations")) {
        state.representations = j["representations"].get<std::vector<std::string>>();
    }
    if (j.contains("models") && unset("--models")) {
        c.models = j["models"].get<std::vector<std::string>>();
    }
    if (j.contains("lang_filter") && unset("--lang-filter")) state.lang_filter = j["lang_filter"];
    if (j.contains("word_ngrams") && unset("--word-ngrams")) {
        state.word_ngrams = j["word_ngrams"].get<std::vector<int>>();
    }
    if (j.contains("char_ngrams") && unset("--char-ngrams")) {
        state.char_ngrams = j["char_ngrams"].get<std::vector<int>>();
    }
    if (j.contains("freq_buckets") && unset("--freq-buckets")) {
        c.repr.bucket_freq = j["freq_buckets"].get<bool>();
    }
    if (j.contains("train")) {
        const auto& t = j["train"];
        auto& tc = c.train;
        if (t.contains("learning_rate") && unset("--learning-rate")) {
            tc.learning_rate = t["learning_rate"];
        }
        if (t.contains("l2") && unset("--l2")) tc.l2 = t["l2"];
        if (t.contains("dropout") && unset("--dropout")) tc.dropout = t["dropout"];
        if (t.contains("epochs") && unset("--epochs")) tc.epochs = t["epochs"];
        if (t.contains("batch_size") && unset("--batch-size")) tc.batch_size = t["batch_size"];
        if (t.contains("d_emb") && unset("--d-emb")) tc.d_emb = t["d_emb"];
        if (t.contains("n_filters") && unset("--n-filters")) tc.n_filters = t["n_filters"];
        if (t.contains("window") && unset("--window")) tc.window = t["window"];
        if (t.contains("d_hidden") && unset("--d-hidden")) tc.d_hidden = t["d_hidden"];
        if (t.contains("max_seq_len") && unset("--max-seq-len")) {
            tc.max_seq_len = t["max_seq_len"];
        }
    }
}

void finalize(CliState& state) {
    PipelineConfig& c = state.config;
    c.representations.clear();
    for (const auto& name : state.representations) {
        const auto repr = socio::features::repr_from_string(name);
        if (!repr) throw socio::ConfigError("unknown representation '" + name + "'");
        c.representations.push_back(*repr);
    }
    c.repr.word_ns = std::set<int>(state.word_ngrams.begin(), state.word_ngrams.end());
    c.repr.char_ns = std::set<int>(state.char_ngrams.begin(), state.char_ngrams.end());
    if (state.lang_filter == "trigram") {
        c.lang_filter = LangFilter::trigram;
    } else if (state.lang_filter == "trust-field") {
        c.lang_filter = LangFilter::trust_field;
    } else if (state.lang_filter == "off") {
        c.lang_filter = LangFilter::off;
    } else {
        throw socio::ConfigError("unknown language filter '" + state.lang_filter + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distant-supervision pipeline: silver socio-economic labels from "
                 "restaurant price ranges, readability validation, and classifiers over "
                 "lexical and style-abstraction representations"};
    app.require_subcommand(1);

    CliState state;
    PipelineConfig& c = state.config;

    app.add_option("--config", state.config_path, "JSON config file; flags win");
    app.add_option("--reviews", c.reviews_path, "review JSONL file");
    app.add_option("--businesses", c.businesses_path, "business JSONL file");
    app.add_option("--conllu", c.conllu_path, "CoNLL-U parses (pos/deptriple)");
    app.add_option("--workdir", c.workdir, "artifact directory")
        ->envname("SOCIOSTYLE_WORKDIR");
    app.add_option("--dale-chall-list", c.easy_words_path,
                   "easy-word list file (default: bundled)");
    app.add_option("--seed", c.seed, "master seed");
    app.add_option("--min-reviews", c.min_reviews, "review floor per author (default 9)");
    app.add_option("--train-fraction", c.train_fraction, "train share of the split");
    app.add_option("--min-df", c.min_df, "min document frequency for vocabulary symbols");
    app.add_option("--runs", c.runs, "CNN runs to average");
    app.add_option("--top-k", c.top_k, "features per class in top_features.tsv");
    app.add_option("--representations", state.representations,
                   "subset of lexical,bleach,pos,deptriple")
        ->delimiter(',');
    app.add_option("--models", c.models, "subset of lr,cnn")->delimiter(',');
    app.add_option("--lang-filter", state.lang_filter, "trigram|trust-field|off");
    app.add_option("--word-ngrams", state.word_ngrams, "word n-gram sizes")->delimiter(',');
    app.add_option("--char-ngrams", state.char_ngrams, "char n-gram sizes")->delimiter(',');
    app.add_flag("--freq-buckets", c.repr.bucket_freq,
                 "log10-bucket the bleaching frequency field");
    app.add_option("--learning-rate", c.train.learning_rate, "optimizer step size");
    app.add_option("--l2", c.train.l2, "L2 strength");
    app.add_option("--dropout", c.train.dropout, "dropout rate after pooling");
    app.add_option("--epochs", c.train.epochs, "training epochs");
    app.add_option("--batch-size", c.train.batch_size, "mini-batch size");
    app.add_option("--d-emb", c.train.d_emb, "embedding width");
    app.add_option("--n-filters", c.train.n_filters, "convolution filters");
    app.add_option("--window", c.train.window, "convolution window");
    app.add_option("--d-hidden", c.train.d_hidden, "hidden layer width");
    app.add_option("--max-seq-len", c.train.max_seq_len, "sequence truncation length");

    CLI::App* cmd_run = app.add_subcommand("run", "full pipeline, all stages in order");
    std::vector<std::pair<CLI::App*, std::string>> stage_cmds;
    stage_cmds.reserve(7);
    stage_cmds.emplace_back(
        app.add_subcommand("ingest", "read reviews + businesses, group per author"), "ingest");
    stage_cmds.emplace_back(
        app.add_subcommand("label", "mode labels, entropy filter, downsample, documents"),
        "label");
    stage_cmds.emplace_back(
        app.add_subcommand("readability", "per-class readability means + rank test"),
        "readability");
    stage_cmds.emplace_back(
        app.add_subcommand("featurize", "split, vocabularies, feature files"), "featurize");
    stage_cmds.emplace_back(app.add_subcommand("train", "train requested models"), "train");
    stage_cmds.emplace_back(
        app.add_subcommand("evaluate", "score test split, per-cell reports"), "evaluate");
    stage_cmds.emplace_back(
        app.add_subcommand("report", "consolidated report, heatmaps, top features"), "report");
    for (auto& [sub, _] : stage_cmds) sub->fallthrough();
    cmd_run->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config_file(app, state);
        finalize(state);
        if (cmd_run->parsed()) {
            return socio::pipeline::run_pipeline(state.config);
        }
        for (const auto& [sub, name] : stage_cmds) {
            if (sub->parsed()) {
                socio::pipeline::run_stage(name, state.config);
                return 0;
            }
        }
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
