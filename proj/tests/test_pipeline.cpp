#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "socio/errors.hpp"
#include "socio/pipeline.hpp"

using namespace socio;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

pipeline::PipelineConfig small_config(const fs::path& dir, const fixtures::CorpusPaths& paths) {
    pipeline::PipelineConfig config;
    config.reviews_path = paths.reviews.string();
    config.businesses_path = paths.businesses.string();
    config.conllu_path = paths.conllu.string();
    config.workdir = (dir / "work").string();
    config.seed = 11;
    config.min_reviews = 9;
    config.runs = 2;
    config.representations = {features::Repr::lexical, features::Repr::bleach,
                              features::Repr::pos, features::Repr::deptriple};
    config.models = {"lr", "cnn"};
    // Small model so the full pipeline runs in seconds.
    config.train.epochs = 3;
    config.train.d_emb = 8;
    config.train.n_filters = 8;
    config.train.d_hidden = 8;
    config.train.batch_size = 8;
    // Word n-grams only up to 3 to keep vocabularies small.
    config.repr.word_ns = {1, 3};
    config.repr.char_ns = {3};
    return config;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("full pipeline on the 40-author synthetic fixture") {
    const auto dir = fixtures::fresh_dir("pipeline_full");
    fixtures::CorpusSpec spec;
    spec.authors_per_class = 10;
    const auto paths = fixtures::write_corpus(dir, spec);
    auto config = small_config(dir, paths);

    REQUIRE(pipeline::run_pipeline(config) == 0);
    const fs::path work = config.workdir;

    SUBCASE("report has one cell per model x representation") {
        const json report = json::parse(slurp(work / "report.json"));
        const auto& cells = report.at("cells");
        CHECK(cells.size() == 8);  // 2 models x 4 representations
        for (const char* key :
             {"lr_lexical", "lr_bleach", "lr_pos", "lr_deptriple", "cnn_lexical",
              "cnn_bleach", "cnn_pos", "cnn_deptriple"}) {
            REQUIRE(cells.contains(key));
            CHECK(cells.at(key).at("weighted_f1").get<double>() >= 0.0);
            CHECK(cells.at(key).at("weighted_f1").get<double>() <= 1.0);
        }
        CHECK(report.contains("readability"));
        CHECK(report.at("split_hash").get<std::string>().size() == 16);
        // No paths and no timestamps in the hashed artifact.
        CHECK(report.at("config").contains("seed"));
        CHECK_FALSE(report.at("config").contains("workdir"));
    }

    SUBCASE("per-stage artifacts exist") {
        for (const char* name :
             {"profiles.jsonl", "ingest_report.json", "labeled_authors.jsonl",
              "documents.jsonl", "label_report.json", "readability_report.json",
              "split.json", "features_lexical.jsonl", "vocab_lexical.tsv",
              "model_lr_lexical.json", "model_cnn_lexical_run1.json",
              "model_cnn_lexical_run2.json", "eval_report.json", "report.json",
              "confusion_lr_lexical.svg", "top_features.tsv", "manifest.json"}) {
            CHECK(fs::exists(work / name));
        }
    }

    SUBCASE("rerun with identical config is byte-identical") {
        const std::string first = slurp(work / "report.json");
        const std::string first_eval = slurp(work / "eval_report.json");
        REQUIRE(pipeline::run_pipeline(config) == 0);
        CHECK(slurp(work / "report.json") == first);
        CHECK(slurp(work / "eval_report.json") == first_eval);
    }

    SUBCASE("labeled classes are balanced") {
        const json label_report = json::parse(slurp(work / "label_report.json"));
        const auto& per_class = label_report.at("per_class");
        const int first = per_class.at("1").get<int>();
        CHECK(first > 0);
        for (const char* cls : {"2", "3", "4"}) CHECK(per_class.at(cls).get<int>() == first);
    }

    SUBCASE("no feature leakage from the test split") {
        // With min_df=1 every train symbol is in the vocabulary, so UNK ids
        // in a train sequence would mean the vocabulary saw the wrong split.
        const json split = json::parse(slurp(work / "split.json"));
        std::set<std::string> train_ids;
        for (const auto& id : split.at("train_ids")) train_ids.insert(id.get<std::string>());
        std::ifstream in(work / "features_lexical.jsonl");
        std::string line;
        std::size_t train_docs = 0;
        while (std::getline(in, line)) {
            const json doc = json::parse(line);
            if (!train_ids.count(doc.at("doc_id").get<std::string>())) continue;
            ++train_docs;
            for (const auto& id : doc.at("seq")) CHECK(id.get<int>() != 0);
        }
        CHECK(train_docs == train_ids.size());
    }
}

TEST_CASE("stage isolation and manifest chain") {
    const auto dir = fixtures::fresh_dir("pipeline_stages");
    const auto paths = fixtures::write_corpus(dir, fixtures::CorpusSpec{});
    auto config = small_config(dir, paths);
    config.representations = {features::Repr::lexical};
    config.models = {"lr"};

    SUBCASE("label before ingest names the missing stage") {
        try {
            pipeline::run_label(config);
            FAIL("expected ManifestError");
        } catch (const ManifestError& e) {
            CHECK(std::string(e.what()).find("ingest") != std::string::npos);
        }
    }

    SUBCASE("stagewise run works and rejects stale upstream artifacts") {
        pipeline::run_ingest(config);
        pipeline::run_label(config);
        pipeline::run_readability(config);
        CHECK(fs::exists(fs::path(config.workdir) / "readability_report.json"));
        pipeline::run_featurize(config);
        pipeline::run_train(config);
        pipeline::run_evaluate(config);
        pipeline::run_report(config);

        // Downstream reruns never mutate upstream artifacts.
        const std::string docs_before = slurp(fs::path(config.workdir) / "documents.jsonl");
        pipeline::run_evaluate(config);
        CHECK(slurp(fs::path(config.workdir) / "documents.jsonl") == docs_before);

        // Tamper with an upstream artifact; the chain must refuse.
        std::ofstream tamper(fs::path(config.workdir) / "documents.jsonl", std::ios::app);
        tamper << "\n";
        tamper.close();
        CHECK_THROWS_AS(pipeline::run_featurize(config), ManifestError);
    }
}

TEST_CASE("config validation happens before any work") {
    pipeline::PipelineConfig config;
    config.representations = {features::Repr::pos};
    config.conllu_path = "";
    CHECK_THROWS_AS(config.validate(), ConfigError);
    CHECK_THROWS_AS(pipeline::run_pipeline(config), ConfigError);

    pipeline::PipelineConfig bad_fraction;
    bad_fraction.train_fraction = 1.2;
    CHECK_THROWS_AS(bad_fraction.validate(), ConfigError);

    pipeline::PipelineConfig bad_model;
    bad_model.models = {"svm"};
    CHECK_THROWS_AS(bad_model.validate(), ConfigError);
}

TEST_CASE("entropy-noisy authors are filtered out") {
    const auto dir = fixtures::fresh_dir("pipeline_noisy");
    fixtures::CorpusSpec spec;
    spec.authors_per_class = 6;
    spec.noisy_entropy_tail = true;
    const auto paths = fixtures::write_corpus(dir, spec);
    auto config = small_config(dir, paths);
    config.representations = {features::Repr::lexical};
    config.models = {"lr"};

    pipeline::run_ingest(config);
    pipeline::run_label(config);

    const json label_report =
        json::parse(slurp(fs::path(config.workdir) / "label_report.json"));
    // 24 clean + 6 noisy authors labeled; the noisy tail never survives.
    CHECK(label_report.at("authors_labeled").get<int>() == 30);
    CHECK(label_report.at("after_filter").get<int>() == 24);

    std::ifstream authors(fs::path(config.workdir) / "labeled_authors.jsonl");
    std::string line;
    while (std::getline(authors, line)) {
        const json a = json::parse(line);
        CHECK(a.at("user_id").get<std::string>().rfind("noisy", 0) != 0);
        CHECK(a.at("review_count").get<int>() >= config.min_reviews);
    }
}

TEST_CASE("trust-field language filter consumes the lang key") {
    const auto dir = fixtures::fresh_dir("pipeline_lang");
    const auto work = dir / "work";
    std::ofstream reviews(dir / "reviews.jsonl");
    for (int i = 0; i < 4; ++i) {
        json r;
        r["review_id"] = "r" + std::to_string(i);
        r["user_id"] = "u1";
        r["business_id"] = "b1";
        r["text"] = "Un texte assez long pour ne pas être ambigu du tout.";
        r["lang"] = (i % 2 == 0) ? "fr" : "en";
        reviews << r.dump() << '\n';
    }
    reviews.close();
    std::ofstream businesses(dir / "businesses.jsonl");
    businesses
        << R"({"business_id":"b1","attributes":{"RestaurantsPriceRange2":"1"}})" << '\n';
    businesses.close();

    pipeline::PipelineConfig config;
    config.reviews_path = (dir / "reviews.jsonl").string();
    config.businesses_path = (dir / "businesses.jsonl").string();
    config.workdir = work.string();
    config.lang_filter = pipeline::LangFilter::trust_field;
    pipeline::run_ingest(config);

    const json report = json::parse(slurp(work / "ingest_report.json"));
    CHECK(report.at("non_english").get<int>() == 2);
}
