#include <algorithm>
#include <fstream>
#include <set>

#include "pipeline_detail.hpp"
#include "socio/cnn.hpp"
#include "socio/errors.hpp"
#include "socio/eval.hpp"
#include "socio/manifest.hpp"
#include "socio/model_io.hpp"
#include "socio/pipeline.hpp"
#include "socio/rng.hpp"

namespace socio::pipeline {

using detail::artifact_path;
using nlohmann::json;

namespace {

struct ReprData {
    features::Vocabulary vocab;
    std::vector<features::FeatureDoc> train;
    std::vector<features::FeatureDoc> test;
};

ReprData load_repr_data(const PipelineConfig& config, features::Repr repr) {
    ReprData data;
    data.vocab =
        features::Vocabulary::load_tsv(artifact_path(config, detail::vocab_artifact(repr)).string());
    const auto split = detail::read_split(artifact_path(config, detail::kSplit));
    const std::set<std::string> train_ids(split.train_ids.begin(), split.train_ids.end());
    const std::set<std::string> test_ids(split.test_ids.begin(), split.test_ids.end());
    for (auto& doc :
         detail::read_feature_docs(artifact_path(config, detail::features_artifact(repr)))) {
        if (train_ids.count(doc.doc_id)) {
            data.train.push_back(std::move(doc));
        } else if (test_ids.count(doc.doc_id)) {
            data.test.push_back(std::move(doc));
        } else {
            throw ManifestError("document " + doc.doc_id +
                                " is in the feature file but not in the split; rerun the "
                                "`featurize` subcommand");
        }
    }
    return data;
}

std::string cell_key(const std::string& model, features::Repr repr) {
    return model + "_" + features::to_string(repr);
}

json report_to_json(const eval::EvalReport& report) {
    json per_class = json::object();
    for (int c = 0; c < 4; ++c) {
        per_class[std::to_string(c + 1)] = {{"precision", report.per_class[c].precision},
                                            {"recall", report.per_class[c].recall},
                                            {"f1", report.per_class[c].f1},
                                            {"support", report.per_class[c].support}};
    }
    json confusion = json::array();
    for (int g = 0; g < 4; ++g) {
        json row = json::array();
        for (int p = 0; p < 4; ++p) row.push_back(report.confusion.m[g][p]);
        confusion.push_back(row);
    }
    return json{{"model", report.model_tag},
                {"representation", report.repr_tag},
                {"weighted_f1", report.weighted_f1},
                {"macro_f1", report.macro_f1},
                {"accuracy", report.accuracy},
                {"per_class", per_class},
                {"confusion", confusion},
                {"run_seeds", report.run_seeds}};
}

eval::ConfusionMatrix confusion_from_json(const json& cell) {
    eval::ConfusionMatrix cm;
    const auto& rows = cell.at("confusion");
    for (int g = 0; g < 4; ++g) {
        for (int p = 0; p < 4; ++p) cm.m[g][p] = rows.at(g).at(p).get<std::int64_t>();
    }
    return cm;
}

}  // namespace

void run_train(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "train", {"featurize"});

    std::vector<std::string> outputs;
    for (auto repr : config.representations) {
        const ReprData data = load_repr_data(config, repr);
        if (data.train.empty()) throw ConfigError("empty train split");
        const std::string vocab_hash = data.vocab.hash();

        for (const auto& model : config.models) {
            if (model == "lr") {
                std::vector<models::SparseExample> train;
                train.reserve(data.train.size());
                for (const auto& doc : data.train) train.push_back(models::to_sparse_example(doc));

                models::TrainConfig tc = config.train;
                tc.seed = derive_seed(config.seed, "train/lr/" + features::to_string(repr));
                std::vector<double> losses;
                const auto params =
                    models::lr_train(train, tc, static_cast<int>(data.vocab.size()), &losses);

                models::CheckpointMeta meta;
                meta.model = "lr";
                meta.representation = features::to_string(repr);
                meta.vocab_hash = vocab_hash;
                meta.seed = tc.seed;
                meta.run = 1;
                meta.loss_curve = losses;
                const std::string name = detail::lr_checkpoint(repr);
                models::save_lr(artifact_path(config, name).string(), params, tc, meta);
                outputs.push_back(name);
            } else {  // cnn
                std::vector<models::SeqExample> train;
                train.reserve(data.train.size());
                for (const auto& doc : data.train) {
                    train.push_back(models::to_seq_example(doc, config.train.max_seq_len));
                }
                for (int run = 1; run <= config.runs; ++run) {
                    models::TrainConfig tc = config.train;
                    tc.seed = derive_seed(config.seed, "train/cnn/" + features::to_string(repr) +
                                                           "/run" + std::to_string(run));
                    std::vector<double> losses;
                    const auto params = models::cnn_train(
                        train, static_cast<int>(data.vocab.size()), tc, &losses);

                    models::CheckpointMeta meta;
                    meta.model = "cnn";
                    meta.representation = features::to_string(repr);
                    meta.vocab_hash = vocab_hash;
                    meta.seed = tc.seed;
                    meta.run = run;
                    meta.loss_curve = losses;
                    const std::string name = detail::cnn_checkpoint(repr, run);
                    models::save_cnn(artifact_path(config, name).string(), params, tc, meta);
                    outputs.push_back(name);
                }
            }
        }
    }
    detail::finish_stage(config, "train", {}, outputs, detail::config_echo(config));
}

void run_evaluate(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "evaluate", {"featurize", "train"});

    const auto split = detail::read_split(artifact_path(config, detail::kSplit));
    if (eval::split_hash(split.train_ids, split.test_ids) != split.hash) {
        throw ManifestError("split.json hash does not match its id lists; rerun the "
                            "`featurize` subcommand");
    }
    json cells = json::object();

    for (auto repr : config.representations) {
        const ReprData data = load_repr_data(config, repr);
        if (data.test.empty()) throw ConfigError("empty test split");
        const std::string vocab_hash = data.vocab.hash();

        std::vector<int> gold;
        gold.reserve(data.test.size());
        for (const auto& doc : data.test) gold.push_back(doc.class_id);

        for (const auto& model : config.models) {
            if (model == "lr") {
                models::CheckpointMeta meta;
                const auto params = models::load_lr(
                    artifact_path(config, detail::lr_checkpoint(repr)).string(), vocab_hash,
                    &meta);
                std::vector<int> preds;
                preds.reserve(data.test.size());
                for (const auto& doc : data.test) {
                    const auto probs = models::lr_predict(params, models::to_sparse_example(doc));
                    preds.push_back(models::argmax_class(probs) + 1);
                }
                eval::EvalReport report = eval::evaluate(preds, gold);
                report.model_tag = "lr";
                report.repr_tag = features::to_string(repr);
                report.run_seeds = {meta.seed};
                cells[cell_key(model, repr)] = report_to_json(report);
            } else {
                std::vector<eval::EvalReport> runs;
                for (int run = 1; run <= config.runs; ++run) {
                    models::CheckpointMeta meta;
                    const auto params = models::load_cnn(
                        artifact_path(config, detail::cnn_checkpoint(repr, run)).string(),
                        vocab_hash, &meta);
                    std::vector<int> preds;
                    preds.reserve(data.test.size());
                    for (const auto& doc : data.test) {
                        const auto ex = models::to_seq_example(doc, config.train.max_seq_len);
                        // Padding in cnn_forward needs a non-empty sequence.
                        const auto probs = models::cnn_predict(
                            params, ex.ids.empty() ? std::vector<int>{features::kUnkId}
                                                   : ex.ids);
                        preds.push_back(models::argmax_class(probs) + 1);
                    }
                    eval::EvalReport report = eval::evaluate(preds, gold);
                    report.model_tag = "cnn";
                    report.repr_tag = features::to_string(repr);
                    report.run_seeds = {meta.seed};
                    runs.push_back(std::move(report));
                }
                cells[cell_key(model, repr)] = report_to_json(eval::average_runs(runs));
            }
        }
    }

    json out;
    out["split_hash"] = split.hash;
    out["config"] = detail::config_echo(config);
    out["cells"] = cells;
    detail::write_json_file(artifact_path(config, detail::kEvalReport), out);
    detail::finish_stage(config, "evaluate", {}, {detail::kEvalReport},
                         detail::config_echo(config));
}

void run_report(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "report", {"evaluate"});

    const json eval_report = detail::read_json_file(artifact_path(config, detail::kEvalReport));
    json out;
    out["config"] = eval_report.value("config", json::object());
    out["split_hash"] = eval_report.value("split_hash", "");
    out["cells"] = eval_report.value("cells", json::object());

    // Optional upstream summaries, folded in when their stages have run.
    for (const auto& [key, name] :
         std::vector<std::pair<std::string, std::string>>{
             {"readability", detail::kReadabilityReport},
             {"ingest", detail::kIngestReport},
             {"label", detail::kLabelReport}}) {
        const auto path = artifact_path(config, name);
        if (std::filesystem::exists(path)) out[key] = detail::read_json_file(path);
    }

    std::vector<std::string> outputs{detail::kReport};

    // Confusion heatmaps per evaluated cell.
    for (const auto& [key, cell] : out["cells"].items()) {
        const auto cm = confusion_from_json(cell);
        const std::string name = "confusion_" + key + ".svg";
        std::ofstream svg(artifact_path(config, name));
        if (!svg) throw IoError("cannot write " + name);
        svg << eval::confusion_svg(cm, key);
        svg.close();
        outputs.push_back(name);
    }

    // Most indicative features per class for every trained sparse model.
    if (std::find(config.models.begin(), config.models.end(), "lr") != config.models.end()) {
        std::ofstream tsv(artifact_path(config, detail::kTopFeatures));
        if (!tsv) throw IoError("cannot write top_features.tsv");
        tsv << "representation\tclass\trank\tsymbol\tweight\n";
        for (auto repr : config.representations) {
            const auto vocab = features::Vocabulary::load_tsv(
                artifact_path(config, detail::vocab_artifact(repr)).string());
            const auto params = models::load_lr(
                artifact_path(config, detail::lr_checkpoint(repr)).string(), vocab.hash());
            // Character n-grams drown the word lists; restrict the lexical
            // table to word unigrams.
            const bool unigrams_only = repr == features::Repr::lexical;
            const auto ranked = eval::top_features(params, vocab, config.top_k, unigrams_only);
            for (int c = 0; c < 4; ++c) {
                for (std::size_t rank = 0; rank < ranked[c].size(); ++rank) {
                    tsv << features::to_string(repr) << '\t' << (c + 1) << '\t' << (rank + 1)
                        << '\t' << ranked[c][rank].symbol << '\t' << ranked[c][rank].weight
                        << '\n';
                }
            }
        }
        tsv.close();
        outputs.push_back(detail::kTopFeatures);
    }

    detail::write_json_file(artifact_path(config, detail::kReport), out);
    detail::finish_stage(config, "report", {}, outputs, detail::config_echo(config));
}

const std::vector<std::string>& stage_names() {
    static const std::vector<std::string> names = {
        "ingest", "label", "readability", "featurize", "train", "evaluate", "report"};
    return names;
}

void run_stage(const std::string& stage, const PipelineConfig& config) {
    using StageFn = void (*)(const PipelineConfig&);
    static const std::map<std::string, StageFn> stages = {
        {"ingest", run_ingest},       {"label", run_label},
        {"readability", run_readability}, {"featurize", run_featurize},
        {"train", run_train},         {"evaluate", run_evaluate},
        {"report", run_report},
    };
    const auto it = stages.find(stage);
    if (it == stages.end()) throw ConfigError("unknown stage '" + stage + "'");
    try {
        it->second(config);
    } catch (const std::exception& e) {
        try {
            Manifest::record_failure(config.workdir, stage, e.what());
        } catch (...) {
            // The original error matters more than a manifest write failure.
        }
        throw;
    }
}

int run_pipeline(const PipelineConfig& config) {
    config.validate();
    for (const auto& stage : stage_names()) run_stage(stage, config);
    return 0;
}

}  // namespace socio::pipeline
