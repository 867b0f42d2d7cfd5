#pragma once

// Character-trigram language identification, rank-order out-of-place distance
// against bundled per-language profiles. Stands in for an external language
// identifier; pluggable (add_profile) and bypassable at the pipeline level.

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace socio::langid {

struct Detection {
    std::string lang;  // ISO 639-1 code, or "und" below the length floor
    double score = 0.0;  // normalized similarity in [0, 1]
};

class LanguageIdentifier {
public:
    // Registers a language from sample text; the profile is the rank list of
    // its most frequent character trigrams.
    void add_profile(const std::string& code, const std::string& sample_text);

    // Deterministic. Texts shorter than 20 codepoints return ("und", 0.0).
    Detection detect(const std::string& text) const;

    bool empty() const { return profiles_.empty(); }

    // Profiles for en, fr, es, de, it, pt, nl built from embedded samples.
    static const LanguageIdentifier& bundled();

    static constexpr std::size_t kProfileSize = 300;
    static constexpr std::size_t kMinCodepoints = 20;

private:
    // code -> trigram -> rank
    std::map<std::string, std::unordered_map<std::string, std::size_t>> profiles_;
};

// Trigrams of the normalized text ranked by descending frequency, ties broken
// lexicographically; at most `cap` entries. Exposed for tests.
std::vector<std::string> ranked_trigrams(const std::string& text, std::size_t cap);

}  // namespace socio::langid
