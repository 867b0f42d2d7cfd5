#include "socio/tokenize.hpp"

#include "socio/unicode.hpp"

namespace socio::features {

namespace {

bool joins_word(const std::vector<char32_t>& cps, std::size_t i) {
    const char32_t cp = cps[i];
    if (cp != '-' && cp != '\'' && cp != 0x2019) return false;
    return i > 0 && i + 1 < cps.size() && uni::is_alnum(cps[i - 1]) && uni::is_alnum(cps[i + 1]);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    const std::vector<char32_t> cps = uni::decode_utf8(text);
    std::size_t i = 0;
    const std::size_t n = cps.size();
    while (i < n) {
        if (uni::is_space(cps[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (uni::is_alnum(cps[i])) {
            while (j < n && (uni::is_alnum(cps[j]) || joins_word(cps, j))) ++j;
        } else {
            while (j < n && cps[j] == cps[i]) ++j;  // repeated punct is one token
        }
        std::string tok;
        for (std::size_t k = i; k < j; ++k) uni::append_utf8(tok, cps[k]);
        tokens.push_back(std::move(tok));
        i = j;
    }
    return tokens;
}

std::map<std::string, int> extract_ngrams(const std::vector<std::string>& tokens,
                                          const std::set<int>& word_ns,
                                          const std::string& raw_text,
                                          const std::set<int>& char_ns) {
    std::map<std::string, int> grams;
    for (int n : word_ns) {
        if (n <= 0 || static_cast<std::size_t>(n) > tokens.size()) continue;
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            std::string sym = "w:";
            for (int k = 0; k < n; ++k) {
                if (k > 0) sym.push_back(' ');
                sym += tokens[i + k];
            }
            grams[sym] += 1;
        }
    }
    if (!char_ns.empty()) {
        const std::vector<char32_t> cps = uni::decode_utf8(raw_text);
        for (int n : char_ns) {
            if (n <= 0 || static_cast<std::size_t>(n) > cps.size()) continue;
            for (std::size_t i = 0; i + n <= cps.size(); ++i) {
                std::string sym = "c:";
                for (int k = 0; k < n; ++k) uni::append_utf8(sym, cps[i + k]);
                grams[sym] += 1;
            }
        }
    }
    return grams;
}

}  // namespace socio::features
