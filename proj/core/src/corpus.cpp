#include "socio/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "socio/errors.hpp"

namespace socio::corpus {

using nlohmann::json;

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string position_key(std::uint64_t line_no) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%012llu", static_cast<unsigned long long>(line_no));
    return std::string(buf);
}

}  // namespace

void for_each_review(const std::string& path,
                     const std::function<void(Review&&)>& fn,
                     IngestCounters& counters) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open review file: " + path);

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim_copy(line).empty()) continue;
        ++counters.reviews_total;

        json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (obj.is_discarded() || !obj.is_object()) {
            ++counters.reviews_skipped;
            continue;
        }

        Review r;
        bool ok = true;
        for (const char* key : {"review_id", "user_id", "business_id", "text"}) {
            if (!obj.contains(key) || !obj[key].is_string()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            r.review_id = obj["review_id"].get<std::string>();
            r.user_id = obj["user_id"].get<std::string>();
            r.business_id = obj["business_id"].get<std::string>();
            r.text = obj["text"].get<std::string>();
            ok = !r.review_id.empty() && !r.user_id.empty() &&
                 !r.business_id.empty() && !trim_copy(r.text).empty();
        }
        if (!ok) {
            ++counters.reviews_skipped;
            continue;
        }

        if (obj.contains("date") && obj["date"].is_string()) {
            r.order_key = obj["date"].get<std::string>();
        } else {
            r.order_key = position_key(line_no);
        }
        if (obj.contains("lang") && obj["lang"].is_string()) {
            r.lang = obj["lang"].get<std::string>();
        }
        fn(std::move(r));
    }
}

std::vector<Review> load_reviews(const std::string& path, IngestCounters& counters) {
    std::vector<Review> out;
    for_each_review(path, [&](Review&& r) { out.push_back(std::move(r)); }, counters);
    return out;
}

namespace {

// Accepts the price both as a digit string and as a JSON integer.
int parse_price(const json& obj) {
    if (!obj.contains("attributes")) return 0;
    const json& attrs = obj["attributes"];
    if (!attrs.is_object() || !attrs.contains("RestaurantsPriceRange2")) return 0;
    const json& v = attrs["RestaurantsPriceRange2"];
    int price = 0;
    if (v.is_number_integer()) {
        price = v.get<int>();
    } else if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.size() == 1 && s[0] >= '0' && s[0] <= '9') price = s[0] - '0';
    }
    return (price >= 1 && price <= 4) ? price : 0;
}

}  // namespace

std::map<std::string, int> load_businesses(const std::string& path,
                                           IngestCounters& counters) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open business file: " + path);

    std::map<std::string, int> prices;
    std::string line;
    while (std::getline(in, line)) {
        if (trim_copy(line).empty()) continue;
        ++counters.businesses_total;

        json obj = json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object() || !obj.contains("business_id") ||
            !obj["business_id"].is_string()) {
            ++counters.businesses_excluded;
            continue;
        }
        const std::string id = obj["business_id"].get<std::string>();
        const int price = parse_price(obj);
        if (id.empty() || price == 0) {
            ++counters.businesses_excluded;
            continue;
        }
        auto [it, inserted] = prices.emplace(id, price);
        if (!inserted && it->second != price) ++counters.price_conflicts;
    }
    return prices;
}

std::vector<AuthorProfile> group_by_author(std::vector<Review> reviews,
                                           const std::map<std::string, int>& prices,
                                           IngestCounters& counters) {
    std::unordered_map<std::string, AuthorProfile> by_user;
    for (auto& r : reviews) {
        auto price_it = prices.find(r.business_id);
        if (price_it == prices.end()) {
            ++counters.unpriced_reviews;
            continue;
        }
        AuthorProfile& p = by_user[r.user_id];
        p.user_id = r.user_id;
        p.label_counts[price_it->second] += 1;
        p.reviews.push_back(std::move(r));
    }

    std::vector<AuthorProfile> out;
    out.reserve(by_user.size());
    for (auto& [user, profile] : by_user) {
        if (profile.reviews.size() < 2) {
            ++counters.single_review_authors;
            continue;
        }
        std::sort(profile.reviews.begin(), profile.reviews.end(),
                  [](const Review& a, const Review& b) {
                      if (a.order_key != b.order_key) return a.order_key < b.order_key;
                      return a.review_id < b.review_id;
                  });
        out.push_back(std::move(profile));
    }
    std::sort(out.begin(), out.end(),
              [](const AuthorProfile& a, const AuthorProfile& b) { return a.user_id < b.user_id; });
    return out;
}

}  // namespace socio::corpus
