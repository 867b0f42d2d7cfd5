#include "socio/vocab.hpp"

#include <algorithm>
#include <fstream>

#include "socio/errors.hpp"
#include "socio/hash.hpp"

namespace socio::features {

Vocabulary::Vocabulary() {
    id_to_symbol_.push_back(kUnkSymbol);
    frequencies_.push_back(0);
    symbol_to_id_.emplace(kUnkSymbol, kUnkId);
}

int Vocabulary::append(const std::string& symbol, std::uint64_t frequency) {
    const int id = static_cast<int>(id_to_symbol_.size());
    id_to_symbol_.push_back(symbol);
    frequencies_.push_back(frequency);
    symbol_to_id_.emplace(symbol, id);
    return id;
}

std::string Vocabulary::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < id_to_symbol_.size(); ++i) {
        h = fnv1a64(id_to_symbol_[i], h);
        h = fnv1a64("\x1f" + std::to_string(frequencies_[i]) + "\x1e", h);
    }
    return hash_hex(h);
}

namespace {

std::string escape_tsv(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_tsv(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\' || i + 1 == s.size()) {
            out.push_back(s[i]);
            continue;
        }
        ++i;
        switch (s[i]) {
            case 't': out.push_back('\t'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            default: out.push_back(s[i]);
        }
    }
    return out;
}

}  // namespace

void Vocabulary::save_tsv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write vocabulary: " + path);
    for (std::size_t i = 0; i < id_to_symbol_.size(); ++i) {
        out << i << '\t' << escape_tsv(id_to_symbol_[i]) << '\t' << frequencies_[i] << '\n';
    }
}

Vocabulary Vocabulary::load_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open vocabulary: " + path);
    Vocabulary vocab;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos) {
            throw IoError("bad vocabulary line " + std::to_string(line_no) + " in " + path);
        }
        const int id = std::stoi(line.substr(0, t1));
        const std::string symbol = unescape_tsv(line.substr(t1 + 1, t2 - t1 - 1));
        const std::uint64_t freq = std::stoull(line.substr(t2 + 1));
        if (id == kUnkId) continue;  // UNK row is implicit
        if (id != static_cast<int>(vocab.size())) {
            throw IoError("non-dense vocabulary ids in " + path);
        }
        vocab.append(symbol, freq);
    }
    return vocab;
}

void VocabBuilder::add_document(const std::map<std::string, int>& counts) {
    for (const auto& [symbol, count] : counts) {
        if (count <= 0) continue;
        corpus_counts_[symbol] += static_cast<std::uint64_t>(count);
        doc_counts_[symbol] += 1;
    }
}

void VocabBuilder::add_document(const std::vector<std::string>& sequence) {
    std::map<std::string, int> counts;
    for (const auto& symbol : sequence) counts[symbol] += 1;
    add_document(counts);
}

Vocabulary VocabBuilder::build(int min_df) const {
    std::vector<std::pair<std::string, std::uint64_t>> items;
    items.reserve(corpus_counts_.size());
    for (const auto& [symbol, count] : corpus_counts_) {
        if (doc_counts_.at(symbol) >= static_cast<std::uint64_t>(min_df)) {
            items.emplace_back(symbol, count);
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    Vocabulary vocab;
    for (const auto& [symbol, count] : items) vocab.append(symbol, count);
    return vocab;
}

std::map<int, int> vectorize_counts(const std::map<std::string, int>& symbol_counts,
                                    const Vocabulary& vocab) {
    std::map<int, int> out;
    for (const auto& [symbol, count] : symbol_counts) {
        if (vocab.contains(symbol)) out[vocab.id(symbol)] += count;
    }
    return out;
}

std::vector<int> vectorize_sequence(const std::vector<std::string>& symbols,
                                    const Vocabulary& vocab) {
    std::vector<int> out;
    out.reserve(symbols.size());
    for (const auto& symbol : symbols) out.push_back(vocab.id(symbol));
    return out;
}

}  // namespace socio::features
