#pragma once

// Glue from a labeled document to its symbol streams under the four
// representations. The sequence feeds the CNN, the multiset feeds the sparse
// model; both share one vocabulary per representation.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "socio/bleach.hpp"
#include "socio/conllu.hpp"
#include "socio/labeling.hpp"

namespace socio::features {

enum class Repr { lexical, bleach, pos, deptriple };

std::string to_string(Repr repr);
std::optional<Repr> repr_from_string(const std::string& name);
bool needs_parses(Repr repr);

struct ReprConfig {
    std::set<int> word_ns{1, 3, 4, 5, 6};
    std::set<int> char_ns{3, 4, 5, 6};
    bool bucket_freq = false;  // log10-bucket the bleaching frequency field
};

struct DocSymbols {
    std::vector<std::string> sequence;
    std::map<std::string, int> counts;

    // Counts for vocabulary building: sparse counts plus any sequence symbol
    // the sparse side does not cover (e.g. lexical unigrams when word_ns
    // omits 1), so sequence vectorization never starves the vocabulary.
    std::map<std::string, int> vocab_counts() const;
};

// `parses` may be null except for pos/deptriple; `freqs` is the train-split
// token frequency table (only bleaching reads it).
DocSymbols doc_symbols(Repr repr,
                       const labeling::LabeledDocument& doc,
                       const std::vector<ParsedSentence>* parses,
                       const TokenFrequencies& freqs,
                       const ReprConfig& config);

}  // namespace socio::features
