#include "socio/readability.hpp"

#include <fstream>
#include <sstream>

#include "socio/errors.hpp"
#include "socio/unicode.hpp"

namespace socio::readability {

namespace {

bool is_word_char(char32_t cp) {
    return uni::is_alnum(cp) || cp == '\'' || cp == 0x2019 || cp == '-';
}

bool is_vowel_y(char32_t cp) {
    const char32_t c = uni::to_lower(cp);
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

EasyWordList parse_word_list(std::istream& in) {
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::string lower;
        for (char32_t cp : uni::decode_utf8(line)) uni::append_utf8(lower, uni::to_lower(cp));
        words.insert(std::move(lower));
    }
    return EasyWordList(std::move(words));
}

}  // namespace

EasyWordList EasyWordList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open easy-word list: " + path);
    return parse_word_list(in);
}

const EasyWordList& EasyWordList::builtin() {
    static const EasyWordList instance = [] {
        std::istringstream in(detail::builtin_easy_words());
        return parse_word_list(in);
    }();
    return instance;
}

std::size_t syllable_count(const std::string& word) {
    std::vector<char32_t> letters;
    for (char32_t cp : uni::decode_utf8(word)) {
        if (uni::is_letter(cp)) letters.push_back(uni::to_lower(cp));
    }
    if (letters.empty()) return 1;

    std::size_t groups = 0;
    bool in_group = false;
    for (char32_t cp : letters) {
        if (is_vowel_y(cp)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }

    const std::size_t n = letters.size();
    if (letters[n - 1] == 'e') {
        const bool le_after_consonant =
            n >= 3 && letters[n - 2] == 'l' && !is_vowel_y(letters[n - 3]);
        if (!le_after_consonant && groups > 0) --groups;
    }
    return groups > 0 ? groups : 1;
}

TextStats text_stats(const std::string& text, const EasyWordList& easy) {
    TextStats stats;
    const std::vector<char32_t> cps = uni::decode_utf8(text);

    // Sentence segments: runs of [.!?] followed by whitespace or EOF close a
    // segment; a segment counts only if it contains a word.
    bool segment_has_word = false;
    std::size_t i = 0;
    const std::size_t n = cps.size();
    auto close_segment = [&] {
        if (segment_has_word) ++stats.sentences;
        segment_has_word = false;
    };

    while (i < n) {
        const char32_t cp = cps[i];
        if (cp == '.' || cp == '!' || cp == '?') {
            std::size_t j = i;
            while (j < n && (cps[j] == '.' || cps[j] == '!' || cps[j] == '?')) ++j;
            if (j >= n || uni::is_space(cps[j])) {
                close_segment();
                i = j;
                continue;
            }
            ++i;  // punctuation run glued to more text, e.g. "3.5"
            continue;
        }
        if (!is_word_char(cp)) {
            ++i;
            continue;
        }
        // A maximal word-character run.
        std::size_t j = i;
        std::size_t alnum = 0, letters = 0;
        std::string word_lower;
        std::string letters_only;
        while (j < n && is_word_char(cps[j])) {
            if (uni::is_alnum(cps[j])) ++alnum;
            if (uni::is_letter(cps[j])) {
                ++letters;
                uni::append_utf8(letters_only, uni::to_lower(cps[j]));
            }
            uni::append_utf8(word_lower, uni::to_lower(cps[j]));
            ++j;
        }
        if (alnum > 0) {
            segment_has_word = true;
            ++stats.words;
            stats.characters += alnum;
            stats.letters += letters;
            const std::size_t syl = syllable_count(letters_only);
            stats.syllables += syl;
            if (syl >= 3) {
                ++stats.complex_words;
            } else {
                ++stats.easy_words;
            }
            if (letters >= 7) ++stats.long_words;
            if (!easy.contains(word_lower)) ++stats.difficult_words;
        }
        i = j;
    }
    close_segment();

    if (stats.words >= 1 && stats.sentences == 0) stats.sentences = 1;
    return stats;
}

ReadabilityScores compute_readability(const TextStats& stats) {
    if (stats.words == 0 || stats.sentences == 0) {
        throw UndefinedScoreError("readability undefined for empty text");
    }
    const double words = static_cast<double>(stats.words);
    const double sentences = static_cast<double>(stats.sentences);
    const double wps = words / sentences;

    ReadabilityScores s;
    s.ari = 4.71 * (static_cast<double>(stats.characters) / words) + 0.5 * wps - 21.43;

    const double L = 100.0 * static_cast<double>(stats.letters) / words;
    const double S = 100.0 * sentences / words;
    s.coleman_liau = 0.0588 * L - 0.296 * S - 15.8;

    const double spw = static_cast<double>(stats.syllables) / words;
    s.flesch_reading = 206.835 - 1.015 * wps - 84.6 * spw;
    s.flesch_kincaid = 0.39 * wps + 11.8 * spw - 15.59;

    s.gunning_fog = 0.4 * (wps + 100.0 * static_cast<double>(stats.complex_words) / words);

    const double difficult_pct = 100.0 * static_cast<double>(stats.difficult_words) / words;
    s.dale_chall = 0.1579 * difficult_pct + 0.0496 * wps;
    if (difficult_pct > 5.0) s.dale_chall += 3.6365;

    // Whole-text Linsear rather than a first-100-words sample, so short
    // reviews score deterministically.
    const double r =
        (static_cast<double>(stats.easy_words) + 3.0 * static_cast<double>(stats.complex_words)) /
        sentences;
    s.linsear = (r > 20.0) ? r / 2.0 : (r - 2.0) / 2.0;

    s.lix = wps + 100.0 * static_cast<double>(stats.long_words) / words;
    return s;
}

std::map<int, ReadabilityScores> readability_by_class(
    const std::vector<labeling::LabeledDocument>& docs,
    const EasyWordList& easy,
    std::vector<int>* missing_classes) {
    std::map<int, std::vector<ReadabilityScores>> per_class;
    std::set<int> seen;
    for (const auto& doc : docs) {
        seen.insert(doc.label.class_id);
        const TextStats stats = text_stats(doc.text, easy);
        if (stats.words == 0 || stats.sentences == 0) continue;  // unscoreable
        per_class[doc.label.class_id].push_back(compute_readability(stats));
    }

    std::map<int, ReadabilityScores> means;
    for (const auto& [cls, scores] : per_class) {
        ReadabilityScores m;
        const double n = static_cast<double>(scores.size());
        for (const auto& s : scores) {
            m.ari += s.ari / n;
            m.coleman_liau += s.coleman_liau / n;
            m.dale_chall += s.dale_chall / n;
            m.flesch_kincaid += s.flesch_kincaid / n;
            m.flesch_reading += s.flesch_reading / n;
            m.gunning_fog += s.gunning_fog / n;
            m.linsear += s.linsear / n;
            m.lix += s.lix / n;
        }
        means[cls] = m;
    }
    if (missing_classes) {
        for (int cls : seen) {
            if (means.find(cls) == means.end()) missing_classes->push_back(cls);
        }
    }
    return means;
}

}  // namespace socio::readability
