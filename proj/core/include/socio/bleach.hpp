#pragma once

// Lossy token abstraction: shape, length, alphanumeric flag, consonant/vowel
// pattern and corpus frequency, underscore-joined. Hides lexical content
// while keeping surface style.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace socio::features {

// Raw token counts from the training corpus; lookups of unseen tokens are 0.
class TokenFrequencies {
public:
    void add(const std::vector<std::string>& tokens) {
        for (const auto& t : tokens) counts_[t] += 1;
    }
    std::uint64_t count(const std::string& token) const {
        auto it = counts_.find(token);
        return it == counts_.end() ? 0 : it->second;
    }
    std::size_t distinct() const { return counts_.size(); }

private:
    std::unordered_map<std::string, std::uint64_t> counts_;
};

// freq is the token's training-corpus count (0 = unseen at featurization
// time). With bucket_freq the final field becomes a log10 bucket instead of
// the raw count, to curb sparsity.
std::string bleach_token(const std::string& token, std::uint64_t freq,
                         bool bucket_freq = false);

}  // namespace socio::features
