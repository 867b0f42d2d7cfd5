#include "socio/pipeline.hpp"

#include <algorithm>
#include <filesystem>

#include "pipeline_detail.hpp"
#include "socio/errors.hpp"
#include "socio/eval.hpp"
#include "socio/hash.hpp"
#include "socio/kruskal.hpp"
#include "socio/langid.hpp"
#include "socio/manifest.hpp"
#include "socio/readability.hpp"
#include "socio/tokenize.hpp"

namespace socio::pipeline {

using detail::artifact_path;
using nlohmann::json;
namespace fs = std::filesystem;

void PipelineConfig::validate() const {
    if (train_fraction <= 0.0 || train_fraction >= 1.0) {
        throw ConfigError("train fraction must be in (0, 1)");
    }
    if (min_reviews < 2) throw ConfigError("min-reviews must be >= 2");
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (min_df < 1) throw ConfigError("min-df must be >= 1");
    if (top_k < 1) throw ConfigError("top-k must be >= 1");
    if (workdir.empty()) throw ConfigError("workdir must not be empty");
    if (representations.empty()) throw ConfigError("no representations requested");
    if (models.empty()) throw ConfigError("no models requested");
    for (const auto& m : models) {
        if (m != "lr" && m != "cnn") throw ConfigError("unknown model '" + m + "'");
    }
    for (auto repr : representations) {
        if (features::needs_parses(repr) && conllu_path.empty()) {
            throw ConfigError("representation '" + features::to_string(repr) +
                              "' requires --conllu");
        }
    }
    train.validate();
}

namespace {

void ensure_workdir(const PipelineConfig& config) {
    fs::create_directories(config.workdir);
}

}  // namespace

void run_ingest(const PipelineConfig& config) {
    config.validate();
    if (config.reviews_path.empty() || config.businesses_path.empty()) {
        throw ConfigError("ingest needs --reviews and --businesses");
    }
    ensure_workdir(config);

    corpus::IngestCounters counters;
    const auto prices = corpus::load_businesses(config.businesses_path, counters);

    const auto& identifier = langid::LanguageIdentifier::bundled();
    std::vector<corpus::Review> kept;
    corpus::for_each_review(
        config.reviews_path,
        [&](corpus::Review&& r) {
            switch (config.lang_filter) {
                case LangFilter::off:
                    break;
                case LangFilter::trust_field:
                    if (!r.lang.empty() && r.lang != "en") {
                        ++counters.non_english;
                        return;
                    }
                    break;
                case LangFilter::trigram: {
                    const auto det = identifier.detect(r.text);
                    // "und" = too short to judge; short reviews are
                    // legitimate, keep them.
                    if (det.lang != "en" && det.lang != "und") {
                        ++counters.non_english;
                        return;
                    }
                    break;
                }
            }
            kept.push_back(std::move(r));
        },
        counters);

    const auto profiles = corpus::group_by_author(std::move(kept), prices, counters);
    detail::write_profiles(artifact_path(config, detail::kProfiles), profiles);

    json report;
    report["reviews_total"] = counters.reviews_total;
    report["reviews_skipped"] = counters.reviews_skipped;
    report["businesses_total"] = counters.businesses_total;
    report["businesses_excluded"] = counters.businesses_excluded;
    report["price_conflicts"] = counters.price_conflicts;
    report["non_english"] = counters.non_english;
    report["unpriced_reviews"] = counters.unpriced_reviews;
    report["single_review_authors"] = counters.single_review_authors;
    report["profiles"] = profiles.size();
    detail::write_json_file(artifact_path(config, detail::kIngestReport), report);

    detail::finish_stage(config, "ingest",
                         {{config.reviews_path, hash_file(config.reviews_path)},
                          {config.businesses_path, hash_file(config.businesses_path)}},
                         {detail::kProfiles, detail::kIngestReport},
                         detail::config_echo(config));
}

void run_label(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "label", {"ingest"});

    const auto profiles = detail::read_profiles(artifact_path(config, detail::kProfiles));
    std::vector<corpus::AuthorProfile> profile_list;
    profile_list.reserve(profiles.size());
    for (const auto& [_, p] : profiles) profile_list.push_back(p);

    std::uint64_t ties_excluded = 0;
    const auto labeled = labeling::label_profiles(profile_list, &ties_excluded);

    double entropy_mean = 0.0;
    for (const auto& a : labeled) entropy_mean += a.entropy_nats;
    if (!labeled.empty()) entropy_mean /= static_cast<double>(labeled.size());

    const auto filtered = labeling::filter_authors(labeled, config.min_reviews);
    const auto balanced = labeling::balance_downsample(filtered, config.seed);
    const auto documents = labeling::build_documents(balanced, profiles);

    detail::write_labeled_authors(artifact_path(config, detail::kLabeledAuthors), balanced);
    detail::write_documents(artifact_path(config, detail::kDocuments), documents);

    auto class_histogram = [](const std::vector<labeling::LabeledAuthor>& authors) {
        json h = json::object();
        for (int cls = 1; cls <= 4; ++cls) h[std::to_string(cls)] = 0;
        for (const auto& a : authors) {
            h[std::to_string(a.label.class_id)] = h[std::to_string(a.label.class_id)].get<int>() + 1;
        }
        return h;
    };
    json report;
    report["authors_labeled"] = labeled.size();
    report["ties_excluded"] = ties_excluded;
    report["entropy_mean"] = entropy_mean;
    report["after_filter"] = filtered.size();
    report["after_balance"] = balanced.size();
    report["pre_balance_per_class"] = class_histogram(filtered);
    report["per_class"] = class_histogram(balanced);
    detail::write_json_file(artifact_path(config, detail::kLabelReport), report);

    detail::finish_stage(config, "label", {},
                         {detail::kLabeledAuthors, detail::kDocuments, detail::kLabelReport},
                         detail::config_echo(config));
}

void run_readability(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "readability", {"label"});

    const auto docs = detail::read_documents(artifact_path(config, detail::kDocuments));
    const readability::EasyWordList easy =
        config.easy_words_path.empty() ? readability::EasyWordList::builtin()
                                       : readability::EasyWordList::load(config.easy_words_path);

    // Per-document scores grouped by class feed both the means table and the
    // per-metric rank tests.
    std::map<int, std::vector<readability::ReadabilityScores>> per_class;
    std::vector<int> missing;
    for (const auto& doc : docs) {
        const auto stats = readability::text_stats(doc.text, easy);
        if (stats.words == 0 || stats.sentences == 0) continue;
        per_class[doc.label.class_id].push_back(readability::compute_readability(stats));
    }
    for (int cls = 1; cls <= 4; ++cls) {
        if (per_class.find(cls) == per_class.end()) missing.push_back(cls);
    }

    using Getter = double (*)(const readability::ReadabilityScores&);
    const std::pair<const char*, Getter> metrics[] = {
        {"ari", [](const readability::ReadabilityScores& s) { return s.ari; }},
        {"coleman_liau", [](const readability::ReadabilityScores& s) { return s.coleman_liau; }},
        {"dale_chall", [](const readability::ReadabilityScores& s) { return s.dale_chall; }},
        {"flesch_kincaid",
         [](const readability::ReadabilityScores& s) { return s.flesch_kincaid; }},
        {"flesch_reading",
         [](const readability::ReadabilityScores& s) { return s.flesch_reading; }},
        {"gunning_fog", [](const readability::ReadabilityScores& s) { return s.gunning_fog; }},
        {"linsear", [](const readability::ReadabilityScores& s) { return s.linsear; }},
        {"lix", [](const readability::ReadabilityScores& s) { return s.lix; }},
    };

    json means = json::object();
    json kruskal = json::object();
    json docs_per_class = json::object();
    for (const auto& [cls, scores] : per_class) {
        docs_per_class[std::to_string(cls)] = scores.size();
    }
    for (const auto& [name, get] : metrics) {
        json metric_means = json::object();
        std::vector<std::vector<double>> groups;
        for (const auto& [cls, scores] : per_class) {
            double mean = 0.0;
            std::vector<double> values;
            values.reserve(scores.size());
            for (const auto& s : scores) {
                values.push_back(get(s));
                mean += get(s);
            }
            mean /= static_cast<double>(scores.size());
            metric_means[std::to_string(cls)] = mean;
            groups.push_back(std::move(values));
        }
        means[name] = metric_means;
        if (groups.size() >= 2) {
            const auto kw = readability::kruskal_wallis(groups);
            kruskal[name] = {{"H", kw.H},
                            {"df", kw.df},
                            {"significant_at", readability::to_string(kw.significant_at)}};
        }
    }

    json report;
    report["means"] = means;
    report["kruskal"] = kruskal;
    report["docs_per_class"] = docs_per_class;
    report["missing_classes"] = missing;
    detail::write_json_file(artifact_path(config, detail::kReadabilityReport), report);

    detail::finish_stage(config, "readability", {}, {detail::kReadabilityReport},
                         detail::config_echo(config));
}

void run_featurize(const PipelineConfig& config) {
    config.validate();
    Manifest::load(config.workdir).require(config.workdir, "featurize", {"label"});

    const auto docs = detail::read_documents(artifact_path(config, detail::kDocuments));
    auto [train_docs, test_docs] = eval::stratified_split(docs, config.train_fraction, config.seed);

    detail::SplitInfo split;
    for (const auto& d : train_docs) split.train_ids.push_back(d.user_id);
    for (const auto& d : test_docs) split.test_ids.push_back(d.user_id);
    split.hash = eval::split_hash(train_docs, test_docs);
    detail::write_split(artifact_path(config, detail::kSplit), split, config.seed,
                        config.train_fraction);

    // Parses, when any requested representation needs them.
    std::map<std::string, std::vector<features::ParsedSentence>> parses;
    const bool want_parses =
        std::any_of(config.representations.begin(), config.representations.end(),
                    features::needs_parses);
    if (want_parses) {
        parses = features::read_conllu(config.conllu_path);
        std::size_t missing = 0;
        std::string first_missing;
        for (const auto& d : docs) {
            if (parses.find(d.user_id) == parses.end()) {
                if (missing == 0) first_missing = d.user_id;
                ++missing;
            }
        }
        if (missing > 0) {
            throw ConfigError(std::to_string(missing) +
                              " documents have no parses in the CoNLL-U input (first: " +
                              first_missing + ")");
        }
    }

    std::vector<std::string> outputs{detail::kSplit};
    std::map<std::string, std::string> external_inputs;
    if (want_parses) external_inputs[config.conllu_path] = hash_file(config.conllu_path);

    for (auto repr : config.representations) {
        // Token frequencies for bleaching come from the train split only;
        // test-time unseen tokens fall back to frequency 0.
        features::TokenFrequencies freqs;
        if (repr == features::Repr::bleach) {
            for (const auto& d : train_docs) freqs.add(features::tokenize(d.text));
        }

        auto symbols_of = [&](const labeling::LabeledDocument& d) {
            const std::vector<features::ParsedSentence>* doc_parses = nullptr;
            if (features::needs_parses(repr)) doc_parses = &parses.at(d.user_id);
            return features::doc_symbols(repr, d, doc_parses, freqs, config.repr);
        };

        features::VocabBuilder builder;
        std::map<std::string, features::DocSymbols> train_symbols;
        for (const auto& d : train_docs) {
            auto syms = symbols_of(d);
            builder.add_document(syms.vocab_counts());
            train_symbols.emplace(d.user_id, std::move(syms));
        }
        const features::Vocabulary vocab = builder.build(config.min_df);
        vocab.save_tsv(artifact_path(config, detail::vocab_artifact(repr)).string());

        std::vector<features::FeatureDoc> feature_docs;
        feature_docs.reserve(docs.size());
        for (const auto& d : docs) {
            const auto it = train_symbols.find(d.user_id);
            const features::DocSymbols syms = it != train_symbols.end() ? it->second
                                                                        : symbols_of(d);
            features::FeatureDoc fd;
            fd.doc_id = d.user_id;
            fd.class_id = d.label.class_id;
            fd.counts = features::vectorize_counts(syms.counts, vocab);
            fd.seq = features::vectorize_sequence(syms.sequence, vocab);
            feature_docs.push_back(std::move(fd));
        }
        detail::write_feature_docs(artifact_path(config, detail::features_artifact(repr)),
                                   feature_docs);
        outputs.push_back(detail::features_artifact(repr));
        outputs.push_back(detail::vocab_artifact(repr));
    }

    detail::finish_stage(config, "featurize", external_inputs, outputs,
                         detail::config_echo(config));
}

}  // namespace socio::pipeline
