#pragma once

// Surface text statistics and the eight readability formulas, plus per-class
// aggregation. Syllables come from a vowel-group heuristic rather than a
// pronunciation dictionary; only between-class differences matter here.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "socio/labeling.hpp"

namespace socio::readability {

struct TextStats {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t characters = 0;  // alphanumeric chars inside words
    std::size_t letters = 0;
    std::size_t syllables = 0;
    std::size_t complex_words = 0;    // >= 3 syllables
    std::size_t easy_words = 0;       // <= 2 syllables
    std::size_t long_words = 0;       // >= 7 letters
    std::size_t difficult_words = 0;  // not on the easy-word list
};

struct ReadabilityScores {
    double ari = 0.0;
    double coleman_liau = 0.0;
    double dale_chall = 0.0;
    double flesch_kincaid = 0.0;
    double flesch_reading = 0.0;
    double gunning_fog = 0.0;
    double linsear = 0.0;
    double lix = 0.0;
};

// Case-insensitive word list for the Dale-Chall difficult-word count.
class EasyWordList {
public:
    EasyWordList() = default;
    explicit EasyWordList(std::set<std::string> lowercase_words)
        : words_(std::move(lowercase_words)) {}

    static EasyWordList load(const std::string& path);  // one word per line
    static const EasyWordList& builtin();

    bool contains(const std::string& lowercase_word) const {
        return words_.count(lowercase_word) > 0;
    }
    std::size_t size() const { return words_.size(); }

private:
    std::set<std::string> words_;
};

// Heuristic syllable count for one word (letters only considered): maximal
// aeiouy groups, minus a trailing silent 'e' unless the word ends in
// consonant+"le", floored at 1.
std::size_t syllable_count(const std::string& word);

TextStats text_stats(const std::string& text,
                     const EasyWordList& easy = EasyWordList::builtin());

// Throws UndefinedScoreError when words or sentences are zero.
ReadabilityScores compute_readability(const TextStats& stats);

// Mean scores per class over scoreable documents. Classes with no scoreable
// document are reported in *missing_classes (when non-null) and absent from
// the result.
std::map<int, ReadabilityScores> readability_by_class(
    const std::vector<labeling::LabeledDocument>& docs,
    const EasyWordList& easy = EasyWordList::builtin(),
    std::vector<int>* missing_classes = nullptr);

namespace detail {
const char* builtin_easy_words();
}

}  // namespace socio::readability
