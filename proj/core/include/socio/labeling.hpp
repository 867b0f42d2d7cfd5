#pragma once

// Distant supervision over author profiles: mode of the price histogram as
// silver label, entropy-based refinement, review-count floor, downsampling to
// the smallest class, and document assembly.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "socio/corpus.hpp"

namespace socio::labeling {

struct SilverLabel {
    int class_id = 0;  // in {1,2,3,4}

    std::string render() const { return std::string(static_cast<std::size_t>(class_id), '$'); }
    friend bool operator==(SilverLabel a, SilverLabel b) { return a.class_id == b.class_id; }
};

struct LabeledAuthor {
    std::string user_id;
    SilverLabel label;
    double entropy_nats = 0.0;
    int review_count = 0;
};

struct LabeledDocument {
    std::string user_id;
    SilverLabel label;
    std::string text;  // the author's reviews joined with single newlines
};

// The unique class with maximal count. Ties throw TieError; the caller
// excludes the author.
SilverLabel assign_label(const std::map<int, int>& counts);

// Shannon entropy (nats) of the count histogram; exactly 0 for one class.
double label_entropy(const std::map<int, int>& counts);

// Threshold = arithmetic mean of entropies over the input list. Keeps authors
// with entropy <= threshold and review_count >= min_reviews, order preserved.
std::vector<LabeledAuthor> filter_authors(const std::vector<LabeledAuthor>& authors,
                                          int min_reviews);

// Downsamples each class to the smallest class size by seeded sampling
// without replacement over authors sorted by user_id. Throws BalanceError if
// any of the four classes is absent. Output sorted by user_id.
std::vector<LabeledAuthor> balance_downsample(const std::vector<LabeledAuthor>& authors,
                                              std::uint64_t seed);

// One document per author: review texts in order_key order joined with "\n".
// A missing profile is a fatal consistency error (IoError).
std::vector<LabeledDocument> build_documents(
    const std::vector<LabeledAuthor>& authors,
    const std::map<std::string, corpus::AuthorProfile>& profiles);

// Mode + entropy for every profile; authors whose mode is tied are skipped
// and counted in *ties_excluded when non-null.
std::vector<LabeledAuthor> label_profiles(const std::vector<corpus::AuthorProfile>& profiles,
                                          std::uint64_t* ties_excluded = nullptr);

}  // namespace socio::labeling
