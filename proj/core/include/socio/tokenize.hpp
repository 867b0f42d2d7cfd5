#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace socio::features {

// Whitespace split, then peripheral punctuation peeled into separate tokens.
// Hyphen and apostrophe stay word-internal between alphanumerics, so
// "dee-lish" and "don't" survive intact; a run of one repeated punctuation
// codepoint ("...", "!!!") is a single token. Case is preserved.
std::vector<std::string> tokenize(const std::string& text);

// Word n-grams (space-joined, "w:" prefix) over the token list plus character
// n-grams ("c:" prefix) over the raw text, whitespace included. Counts
// accumulate into a multiset.
std::map<std::string, int> extract_ngrams(const std::vector<std::string>& tokens,
                                          const std::set<int>& word_ns,
                                          const std::string& raw_text,
                                          const std::set<int>& char_ns);

}  // namespace socio::features
