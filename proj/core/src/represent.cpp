#include "socio/represent.hpp"

#include "socio/errors.hpp"
#include "socio/tokenize.hpp"

namespace socio::features {

std::string to_string(Repr repr) {
    switch (repr) {
        case Repr::lexical: return "lexical";
        case Repr::bleach: return "bleach";
        case Repr::pos: return "pos";
        case Repr::deptriple: return "deptriple";
    }
    return "?";
}

std::optional<Repr> repr_from_string(const std::string& name) {
    if (name == "lexical") return Repr::lexical;
    if (name == "bleach") return Repr::bleach;
    if (name == "pos") return Repr::pos;
    if (name == "deptriple") return Repr::deptriple;
    return std::nullopt;
}

bool needs_parses(Repr repr) { return repr == Repr::pos || repr == Repr::deptriple; }

std::map<std::string, int> DocSymbols::vocab_counts() const {
    std::map<std::string, int> merged = counts;
    std::map<std::string, int> seq_counts;
    for (const auto& sym : sequence) seq_counts[sym] += 1;
    for (const auto& [sym, count] : seq_counts) {
        if (merged.find(sym) == merged.end()) merged[sym] = count;
    }
    return merged;
}

DocSymbols doc_symbols(Repr repr,
                       const labeling::LabeledDocument& doc,
                       const std::vector<ParsedSentence>* parses,
                       const TokenFrequencies& freqs,
                       const ReprConfig& config) {
    DocSymbols out;
    switch (repr) {
        case Repr::lexical: {
            const std::vector<std::string> tokens = tokenize(doc.text);
            out.sequence.reserve(tokens.size());
            for (const auto& tok : tokens) out.sequence.push_back("w:" + tok);
            out.counts = extract_ngrams(tokens, config.word_ns, doc.text, config.char_ns);
            break;
        }
        case Repr::bleach: {
            for (const auto& tok : tokenize(doc.text)) {
                out.sequence.push_back(
                    bleach_token(tok, freqs.count(tok), config.bucket_freq));
            }
            break;
        }
        case Repr::pos: {
            if (!parses) throw ConfigError("pos representation requires parses");
            out.sequence = pos_sequence(*parses);
            break;
        }
        case Repr::deptriple: {
            if (!parses) throw ConfigError("deptriple representation requires parses");
            out.sequence = dep_triplets(*parses);
            break;
        }
    }
    if (repr != Repr::lexical) {
        for (const auto& sym : out.sequence) out.counts[sym] += 1;
    }
    return out;
}

}  // namespace socio::features
