#include "socio/labeling.hpp"

#include <algorithm>
#include <cmath>

#include "socio/errors.hpp"
#include "socio/rng.hpp"

namespace socio::labeling {

SilverLabel assign_label(const std::map<int, int>& counts) {
    if (counts.empty()) throw TieError("empty label histogram");
    int best_class = 0;
    int best_count = -1;
    bool tied = false;
    for (const auto& [cls, count] : counts) {
        if (count > best_count) {
            best_count = count;
            best_class = cls;
            tied = false;
        } else if (count == best_count) {
            tied = true;
        }
    }
    if (tied) throw TieError("tied mode in label histogram");
    return SilverLabel{best_class};
}

double label_entropy(const std::map<int, int>& counts) {
    double total = 0.0;
    for (const auto& [_, count] : counts) total += count;
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (const auto& [_, count] : counts) {
        if (count <= 0) continue;
        const double p = count / total;
        h -= p * std::log(p);
    }
    // Single-class histograms must come out exactly 0, not -0 or 1e-17.
    return h < 0.0 ? 0.0 : h;
}

std::vector<LabeledAuthor> filter_authors(const std::vector<LabeledAuthor>& authors,
                                          int min_reviews) {
    if (authors.empty()) return {};
    double mean = 0.0;
    for (const auto& a : authors) mean += a.entropy_nats;
    mean /= static_cast<double>(authors.size());

    // Inclusive threshold. The slack keeps authors whose entropy equals the
    // mean up to summation rounding (an all-equal pool must survive intact).
    const double threshold = mean + 1e-12;
    std::vector<LabeledAuthor> out;
    for (const auto& a : authors) {
        if (a.entropy_nats <= threshold && a.review_count >= min_reviews) out.push_back(a);
    }
    return out;
}

std::vector<LabeledAuthor> balance_downsample(const std::vector<LabeledAuthor>& authors,
                                              std::uint64_t seed) {
    std::map<int, std::vector<LabeledAuthor>> by_class;
    for (const auto& a : authors) by_class[a.label.class_id].push_back(a);
    for (int cls = 1; cls <= 4; ++cls) {
        if (by_class.find(cls) == by_class.end() || by_class[cls].empty()) {
            throw BalanceError(cls, "class " + SilverLabel{cls}.render() +
                                        " has no authors, cannot balance");
        }
    }

    std::size_t n = authors.size();
    for (auto& [_, group] : by_class) n = std::min(n, group.size());

    Rng rng(derive_seed(seed, "balance_downsample"));
    std::vector<LabeledAuthor> out;
    for (auto& [_, group] : by_class) {
        std::sort(group.begin(), group.end(),
                  [](const LabeledAuthor& a, const LabeledAuthor& b) {
                      return a.user_id < b.user_id;
                  });
        for (auto& picked : rng.sample_without_replacement(group, n)) {
            out.push_back(std::move(picked));
        }
    }
    std::sort(out.begin(), out.end(), [](const LabeledAuthor& a, const LabeledAuthor& b) {
        return a.user_id < b.user_id;
    });
    return out;
}

std::vector<LabeledDocument> build_documents(
    const std::vector<LabeledAuthor>& authors,
    const std::map<std::string, corpus::AuthorProfile>& profiles) {
    std::vector<LabeledDocument> out;
    out.reserve(authors.size());
    for (const auto& a : authors) {
        auto it = profiles.find(a.user_id);
        if (it == profiles.end()) {
            throw IoError("no profile for labeled author " + a.user_id);
        }
        std::string text;
        for (const auto& r : it->second.reviews) {
            if (!text.empty()) text.push_back('\n');
            text += r.text;
        }
        out.push_back(LabeledDocument{a.user_id, a.label, std::move(text)});
    }
    return out;
}

std::vector<LabeledAuthor> label_profiles(const std::vector<corpus::AuthorProfile>& profiles,
                                          std::uint64_t* ties_excluded) {
    std::vector<LabeledAuthor> out;
    out.reserve(profiles.size());
    for (const auto& p : profiles) {
        try {
            LabeledAuthor a;
            a.user_id = p.user_id;
            a.label = assign_label(p.label_counts);
            a.entropy_nats = label_entropy(p.label_counts);
            a.review_count = static_cast<int>(p.reviews.size());
            out.push_back(std::move(a));
        } catch (const TieError&) {
            if (ties_excluded) ++*ties_excluded;
        }
    }
    return out;
}

}  // namespace socio::labeling
