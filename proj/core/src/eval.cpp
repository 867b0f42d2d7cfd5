#include "socio/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>

#include "socio/hash.hpp"
#include "socio/rng.hpp"

namespace socio::eval {

std::int64_t ConfusionMatrix::total() const {
    std::int64_t t = 0;
    for (const auto& row : m) {
        for (std::int64_t v : row) t += v;
    }
    return t;
}

std::int64_t ConfusionMatrix::row_sum(int gold) const {
    std::int64_t t = 0;
    for (std::int64_t v : m[gold]) t += v;
    return t;
}

std::int64_t ConfusionMatrix::col_sum(int pred) const {
    std::int64_t t = 0;
    for (const auto& row : m) t += row[pred];
    return t;
}

std::pair<std::vector<labeling::LabeledDocument>, std::vector<labeling::LabeledDocument>>
stratified_split(const std::vector<labeling::LabeledDocument>& docs,
                 double train_fraction, std::uint64_t seed) {
    if (train_fraction <= 0.0 || train_fraction >= 1.0) {
        throw std::invalid_argument("stratified_split: fraction must be in (0, 1)");
    }
    std::map<int, std::vector<labeling::LabeledDocument>> by_class;
    for (const auto& doc : docs) by_class[doc.label.class_id].push_back(doc);

    std::pair<std::vector<labeling::LabeledDocument>, std::vector<labeling::LabeledDocument>> out;
    for (auto& [cls, group] : by_class) {
        if (group.size() < 2) {
            throw std::invalid_argument("stratified_split: class " + std::to_string(cls) +
                                        " has fewer than 2 documents");
        }
        std::sort(group.begin(), group.end(),
                  [](const auto& a, const auto& b) { return a.user_id < b.user_id; });
        Rng rng(derive_seed(seed, "split/" + std::to_string(cls)));
        rng.shuffle(group);
        const std::size_t n_train =
            static_cast<std::size_t>(train_fraction * static_cast<double>(group.size()));
        for (std::size_t i = 0; i < group.size(); ++i) {
            (i < n_train ? out.first : out.second).push_back(std::move(group[i]));
        }
    }
    return out;
}

std::string split_hash(const std::vector<std::string>& train_ids,
                       const std::vector<std::string>& test_ids) {
    std::vector<std::string> ids;
    for (const auto& id : train_ids) ids.push_back("T:" + id);
    for (const auto& id : test_ids) ids.push_back("E:" + id);
    std::sort(ids.begin(), ids.end());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& id : ids) h = fnv1a64(id + "\n", h);
    return hash_hex(h);
}

std::string split_hash(const std::vector<labeling::LabeledDocument>& train,
                       const std::vector<labeling::LabeledDocument>& test) {
    std::vector<std::string> train_ids, test_ids;
    for (const auto& d : train) train_ids.push_back(d.user_id);
    for (const auto& d : test) test_ids.push_back(d.user_id);
    return split_hash(train_ids, test_ids);
}

EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& gold) {
    if (preds.size() != gold.size()) {
        throw std::invalid_argument("evaluate: preds/gold length mismatch");
    }
    if (preds.empty()) throw std::invalid_argument("evaluate: empty input");

    EvalReport r;
    std::int64_t correct = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const int g = gold[i], p = preds[i];
        if (g < 1 || g > 4 || p < 1 || p > 4) {
            throw std::invalid_argument("evaluate: class ids must be in 1..4");
        }
        r.confusion.m[g - 1][p - 1] += 1;
        if (g == p) ++correct;
    }

    double weighted = 0.0, macro = 0.0;
    for (int c = 0; c < 4; ++c) {
        ClassScores& s = r.per_class[c];
        const std::int64_t tp = r.confusion.m[c][c];
        const std::int64_t pred_total = r.confusion.col_sum(c);
        const std::int64_t gold_total = r.confusion.row_sum(c);
        s.support = gold_total;
        s.precision = pred_total > 0 ? static_cast<double>(tp) / pred_total : 0.0;
        s.recall = gold_total > 0 ? static_cast<double>(tp) / gold_total : 0.0;
        s.f1 = (s.precision + s.recall) > 0.0
                   ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                   : 0.0;
        weighted += s.f1 * static_cast<double>(gold_total);
        macro += s.f1 / 4.0;
    }
    r.weighted_f1 = weighted / static_cast<double>(preds.size());
    r.macro_f1 = macro;
    r.accuracy = static_cast<double>(correct) / static_cast<double>(preds.size());
    return r;
}

EvalReport average_runs(const std::vector<EvalReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("average_runs: empty report list");
    for (const auto& rep : reports) {
        if (rep.model_tag != reports[0].model_tag || rep.repr_tag != reports[0].repr_tag) {
            throw std::invalid_argument("average_runs: mismatched model/representation tags");
        }
    }
    EvalReport out;
    out.model_tag = reports[0].model_tag;
    out.repr_tag = reports[0].repr_tag;
    const double n = static_cast<double>(reports.size());
    for (const auto& rep : reports) {
        for (int c = 0; c < 4; ++c) {
            out.per_class[c].precision += rep.per_class[c].precision / n;
            out.per_class[c].recall += rep.per_class[c].recall / n;
            out.per_class[c].f1 += rep.per_class[c].f1 / n;
            out.per_class[c].support += rep.per_class[c].support;
        }
        out.weighted_f1 += rep.weighted_f1 / n;
        out.macro_f1 += rep.macro_f1 / n;
        out.accuracy += rep.accuracy / n;
        for (int g = 0; g < 4; ++g) {
            for (int p = 0; p < 4; ++p) out.confusion.m[g][p] += rep.confusion.m[g][p];
        }
        for (std::uint64_t s : rep.run_seeds) out.run_seeds.push_back(s);
    }
    // Support is a property of the (shared) test set, not of the run count.
    for (int c = 0; c < 4; ++c) {
        out.per_class[c].support /= static_cast<std::int64_t>(reports.size());
    }
    return out;
}

std::array<std::vector<RankedFeature>, 4> top_features(const models::LRParams& params,
                                                       const features::Vocabulary& vocab,
                                                       int k,
                                                       bool word_unigrams_only,
                                                       bool by_magnitude) {
    if (k < 1) throw std::invalid_argument("top_features: k must be >= 1");

    std::vector<int> candidate_ids;
    for (int id = 0; id < static_cast<int>(vocab.size()); ++id) {
        if (word_unigrams_only) {
            const std::string& sym = vocab.symbol(id);
            if (sym.rfind("w:", 0) != 0 || sym.find(' ') != std::string::npos) continue;
        }
        candidate_ids.push_back(id);
    }
    if (static_cast<std::size_t>(k) > candidate_ids.size()) {
        std::cerr << "top_features: asked for " << k << " features but only "
                  << candidate_ids.size() << " qualify; returning all\n";
    }

    std::array<std::vector<RankedFeature>, 4> out;
    for (int c = 0; c < 4; ++c) {
        std::vector<RankedFeature> ranked;
        ranked.reserve(candidate_ids.size());
        for (int id : candidate_ids) {
            if (id >= params.vocab_size) continue;
            ranked.push_back({vocab.symbol(id), params.weight(c, id)});
        }
        std::sort(ranked.begin(), ranked.end(), [&](const RankedFeature& a, const RankedFeature& b) {
            const double wa = by_magnitude ? std::abs(a.weight) : a.weight;
            const double wb = by_magnitude ? std::abs(b.weight) : b.weight;
            if (wa != wb) return wa > wb;
            return a.symbol < b.symbol;
        });
        if (ranked.size() > static_cast<std::size_t>(k)) {
            ranked.resize(static_cast<std::size_t>(k));
        }
        out[c] = std::move(ranked);
    }
    return out;
}

std::string confusion_svg(const ConfusionMatrix& cm, const std::string& title) {
    const int cell = 64, margin = 60;
    const int size = margin + 4 * cell + 20;
    std::int64_t max_count = 1;
    for (const auto& row : cm.m) {
        for (std::int64_t v : row) max_count = std::max(max_count, v);
    }

    std::string svg;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\">\n",
                  size, size);
    svg += buf;
    svg += "<text x=\"8\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">" + title +
           "</text>\n";

    const char* labels[4] = {"$", "$$", "$$$", "$$$$"};
    for (int i = 0; i < 4; ++i) {
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" "
                      "text-anchor=\"middle\">%s</text>\n",
                      margin + i * cell + cell / 2, margin - 8, labels[i]);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"11\" "
                      "text-anchor=\"end\">%s</text>\n",
                      margin - 8, margin + i * cell + cell / 2 + 4, labels[i]);
        svg += buf;
    }

    for (int g = 0; g < 4; ++g) {
        for (int p = 0; p < 4; ++p) {
            const std::int64_t v = cm.m[g][p];
            // Darker blue for larger counts; integer arithmetic keeps the
            // output byte-stable.
            const int intensity = static_cast<int>(255 - (200 * v) / max_count);
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                          "fill=\"rgb(%d,%d,255)\" stroke=\"#444\"/>\n",
                          margin + p * cell, margin + g * cell, cell, cell, intensity,
                          intensity);
            svg += buf;
            std::snprintf(buf, sizeof(buf),
                          "<text x=\"%d\" y=\"%d\" font-family=\"sans-serif\" font-size=\"13\" "
                          "text-anchor=\"middle\" fill=\"%s\">%lld</text>\n",
                          margin + p * cell + cell / 2, margin + g * cell + cell / 2 + 5,
                          intensity < 128 ? "#fff" : "#000", static_cast<long long>(v));
            svg += buf;
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace socio::eval
