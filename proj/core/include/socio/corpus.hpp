#pragma once

// Yelp-schema ingestion: JSONL reviews and businesses, price-range lookup,
// grouping of reviews per author with a price-label histogram.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace socio::corpus {

struct Review {
    std::string review_id;
    std::string user_id;
    std::string business_id;
    std::string text;
    // Original file position (zero-padded) or a date string; defines the
    // stable ordering of an author's reviews.
    std::string order_key;
    // Optional precomputed language code from the input file ("" if absent).
    std::string lang;
};

struct Business {
    std::string business_id;
    int price_range = 0;  // in {1,2,3,4}
};

struct AuthorProfile {
    std::string user_id;
    std::vector<Review> reviews;       // ordered by (order_key, review_id)
    std::map<int, int> label_counts;   // price range -> number of reviews
};

struct IngestCounters {
    std::uint64_t reviews_total = 0;      // lines seen in the review file
    std::uint64_t reviews_skipped = 0;    // malformed / missing keys / empty text
    std::uint64_t businesses_total = 0;
    std::uint64_t businesses_excluded = 0;  // missing or out-of-range price
    std::uint64_t price_conflicts = 0;      // duplicate id, different price
    std::uint64_t non_english = 0;          // dropped by the language filter
    std::uint64_t unpriced_reviews = 0;       // business has no known price
    std::uint64_t single_review_authors = 0;  // exactly one priced review
};

// Streams one Review per valid line of a JSONL file, preserving file order in
// order_key. Malformed lines bump counters.reviews_skipped. Unreadable file
// throws IoError.
void for_each_review(const std::string& path,
                     const std::function<void(Review&&)>& fn,
                     IngestCounters& counters);

std::vector<Review> load_reviews(const std::string& path, IngestCounters& counters);

// business_id -> price range in {1..4}. Duplicate ids keep the first price;
// conflicting duplicates are counted.
std::map<std::string, int> load_businesses(const std::string& path,
                                           IngestCounters& counters);

// One profile per author with >= 2 priced reviews, sorted by user_id.
// Reviews of businesses without a known price are dropped and counted.
std::vector<AuthorProfile> group_by_author(std::vector<Review> reviews,
                                           const std::map<std::string, int>& prices,
                                           IngestCounters& counters);

}  // namespace socio::corpus
