#pragma once

// Symbol <-> id bijection with id 0 reserved for UNK; ids assigned by
// descending corpus frequency, ties broken lexicographically. Built from the
// training split only.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace socio::features {

inline constexpr int kUnkId = 0;
inline constexpr const char* kUnkSymbol = "<UNK>";

class Vocabulary {
public:
    Vocabulary();

    int id(const std::string& symbol) const {
        auto it = symbol_to_id_.find(symbol);
        return it == symbol_to_id_.end() ? kUnkId : it->second;
    }
    bool contains(const std::string& symbol) const {
        return symbol_to_id_.find(symbol) != symbol_to_id_.end();
    }
    const std::string& symbol(int id) const { return id_to_symbol_.at(static_cast<std::size_t>(id)); }
    std::uint64_t frequency(int id) const { return frequencies_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return id_to_symbol_.size(); }

    // Fingerprint over (symbol, frequency) pairs; checkpoints refuse to load
    // against a different one.
    std::string hash() const;

    void save_tsv(const std::string& path) const;  // id \t symbol \t frequency
    static Vocabulary load_tsv(const std::string& path);

    // Appends a symbol with its corpus frequency; used by the builder/loader.
    int append(const std::string& symbol, std::uint64_t frequency);

private:
    std::vector<std::string> id_to_symbol_;
    std::vector<std::uint64_t> frequencies_;
    std::unordered_map<std::string, int> symbol_to_id_;
};

class VocabBuilder {
public:
    // One call per training document, with the document's symbol counts.
    void add_document(const std::map<std::string, int>& counts);
    void add_document(const std::vector<std::string>& sequence);

    // min_df = minimum number of training documents a symbol must occur in.
    Vocabulary build(int min_df = 1) const;

private:
    std::map<std::string, std::uint64_t> corpus_counts_;
    std::map<std::string, std::uint64_t> doc_counts_;
};

struct FeatureDoc {
    std::string doc_id;
    int class_id = 0;
    std::map<int, int> counts;  // sparse mode; OOV symbols dropped
    std::vector<int> seq;       // sequence mode; OOV symbols mapped to UNK
};

std::map<int, int> vectorize_counts(const std::map<std::string, int>& symbol_counts,
                                    const Vocabulary& vocab);
std::vector<int> vectorize_sequence(const std::vector<std::string>& symbols,
                                    const Vocabulary& vocab);

}  // namespace socio::features
