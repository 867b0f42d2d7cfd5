#pragma once

// Synthetic corpus generation shared by the pipeline tests and the
// acceptance suite. Everything is seeded and deterministic.

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "socio/rng.hpp"

namespace fixtures {

namespace fs = std::filesystem;

inline fs::path fresh_dir(const std::string& tag) {
    static std::uint64_t counter = 0;
    const fs::path dir = fs::temp_directory_path() /
                         ("socio_" + tag + "_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct CorpusSpec {
    int authors_per_class = 10;
    int reviews_per_author = 10;  // >= default min_reviews of 9
    std::uint64_t seed = 7;
    bool noisy_entropy_tail = false;  // extra high-entropy authors to filter out
};

struct CorpusPaths {
    fs::path reviews;
    fs::path businesses;
    fs::path conllu;
};

// Class-flavoured word pools: plain English filler plus one marker word
// unique to each class so classifiers have signal.
inline const std::vector<std::string>& filler_words() {
    static const std::vector<std::string> words = {
        "the", "food",  "was",   "really", "nice", "and",  "we",    "came", "back",
        "for", "more",  "every", "time",   "they", "serve", "fresh", "warm", "meals",
        "with", "great", "care",  "staff",  "is",   "kind", "place", "feels", "cozy"};
    return words;
}

inline std::string marker_word(int class_id) {
    switch (class_id) {
        case 1: return "pizzeria";
        case 2: return "bistro";
        case 3: return "brasserie";
        default: return "sommelier";
    }
}

// One review text: a few short English sentences, marker word included.
inline std::string review_text(int class_id, socio::Rng& rng) {
    const auto& pool = filler_words();
    std::string text;
    const int sentences = 2 + static_cast<int>(rng.bounded(2));
    for (int s = 0; s < sentences; ++s) {
        const int len = 6 + static_cast<int>(rng.bounded(5));
        for (int w = 0; w < len; ++w) {
            std::string word = pool[rng.bounded(pool.size())];
            if (w == 0) word[0] = static_cast<char>(::toupper(word[0]));
            text += word;
            text.push_back(' ');
        }
        text += marker_word(class_id);
        text += ". ";
    }
    if (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

// Writes reviews.jsonl / businesses.jsonl / parses.conllu. Businesses b<k>
// carry price k; author u<class><idx> mostly reviews business of their class
// with one off-class visit, so entropy is low but nonzero.
inline CorpusPaths write_corpus(const fs::path& dir, const CorpusSpec& spec) {
    using nlohmann::json;
    socio::Rng rng(spec.seed);

    CorpusPaths paths{dir / "reviews.jsonl", dir / "businesses.jsonl", dir / "parses.conllu"};

    std::ofstream businesses(paths.businesses);
    for (int price = 1; price <= 4; ++price) {
        json b;
        b["business_id"] = "b" + std::to_string(price);
        b["attributes"]["RestaurantsPriceRange2"] = std::to_string(price);
        businesses << b.dump() << '\n';
    }
    businesses.close();

    std::ofstream reviews(paths.reviews);
    std::ofstream conllu(paths.conllu);
    int review_no = 0;
    for (int cls = 1; cls <= 4; ++cls) {
        for (int a = 0; a < spec.authors_per_class; ++a) {
            char user[32];
            std::snprintf(user, sizeof(user), "u%d_%03d", cls, a);
            for (int r = 0; r < spec.reviews_per_author; ++r) {
                // One off-class review keeps entropy nonzero but below any
                // noisy author's.
                int visited = cls;
                if (r == 0) visited = cls == 1 ? 2 : cls - 1;
                json line;
                line["review_id"] = "r" + std::to_string(review_no++);
                line["user_id"] = user;
                line["business_id"] = "b" + std::to_string(visited);
                line["text"] = review_text(cls, rng);
                reviews << line.dump() << '\n';
            }
            // A parsed pseudo-document per author, class-flavoured length.
            conllu << "# doc_id = " << user << '\n';
            for (int s = 0; s < 1 + cls; ++s) {
                conllu << "1\tI\tI\tPRON\t_\t_\t2\tnsubj\t_\t_\n";
                conllu << "2\tlove\tlove\tVERB\t_\t_\t0\troot\t_\t_\n";
                conllu << "3\tfood\tfood\tNOUN\t_\t_\t2\tobj\t_\t_\n";
                if (s % 2 == cls % 2) {
                    conllu << "4\tgood\tgood\tADJ\t_\t_\t3\tamod\t_\t_\n";
                }
                conllu << '\n';
            }
        }
    }
    if (spec.noisy_entropy_tail) {
        // Authors spread almost evenly over all four prices: entropy near
        // ln 4 (well above the mean, so the filter must drop them) with a
        // single-class edge that keeps the mode unique.
        for (int a = 0; a < spec.authors_per_class; ++a) {
            char user[32];
            std::snprintf(user, sizeof(user), "noisy_%03d", a);
            for (int r = 0; r < 12; ++r) {
                const int visited = (r == 11) ? 1 : (r % 4) + 1;
                json line;
                line["review_id"] = "r" + std::to_string(review_no++);
                line["user_id"] = user;
                line["business_id"] = "b" + std::to_string(visited);
                line["text"] = review_text(1 + r % 4, rng);
                reviews << line.dump() << '\n';
            }
            conllu << "# doc_id = " << user << '\n';
            conllu << "1\tI\tI\tPRON\t_\t_\t2\tnsubj\t_\t_\n";
            conllu << "2\tleft\tleave\tVERB\t_\t_\t0\troot\t_\t_\n";
            conllu << '\n';
        }
    }
    return paths;
}

}  // namespace fixtures
