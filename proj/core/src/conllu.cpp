#include "socio/conllu.hpp"

#include <array>
#include <fstream>

#include "socio/errors.hpp"

namespace socio::features {

bool is_universal_tag(const std::string& upos) {
    static const std::array<const char*, 17> tags = {
        "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
        "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
    for (const char* t : tags) {
        if (upos == t) return true;
    }
    return false;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cols.push_back(line.substr(start));
            return cols;
        }
        cols.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

std::map<std::string, std::vector<ParsedSentence>> read_conllu(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CoNLL-U file: " + path);

    std::map<std::string, std::vector<ParsedSentence>> docs;
    std::string current_doc;
    ParsedSentence sentence;
    std::size_t sentence_start_line = 0;
    std::string line;
    std::size_t line_no = 0;

    auto flush_sentence = [&] {
        if (sentence.tokens.empty()) return;
        if (current_doc.empty()) {
            throw ConlluError(sentence_start_line,
                              "sentence has no preceding '# doc_id =' comment");
        }
        const int len = static_cast<int>(sentence.tokens.size());
        for (const auto& tok : sentence.tokens) {
            if (tok.head < 0 || tok.head > len) {
                throw ConlluError(sentence_start_line,
                                  "head index " + std::to_string(tok.head) +
                                      " out of range for sentence of length " +
                                      std::to_string(len));
            }
        }
        docs[current_doc].push_back(std::move(sentence));
        sentence = ParsedSentence{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_sentence();
            continue;
        }
        if (line[0] == '#') {
            const std::string prefix = "# doc_id =";
            if (line.rfind(prefix, 0) == 0) {
                flush_sentence();
                std::string id = line.substr(prefix.size());
                while (!id.empty() && id.front() == ' ') id.erase(id.begin());
                while (!id.empty() && id.back() == ' ') id.pop_back();
                if (id.empty()) throw ConlluError(line_no, "empty doc_id");
                current_doc = id;
            }
            continue;
        }

        const std::vector<std::string> cols = split_tabs(line);
        if (cols.size() != 10) {
            throw ConlluError(line_no, "expected 10 tab-separated columns, got " +
                                           std::to_string(cols.size()));
        }
        const std::string& id = cols[0];
        if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) {
            continue;  // multiword-token range or empty node
        }
        if (!all_digits(id)) throw ConlluError(line_no, "bad token id '" + id + "'");
        if (sentence.tokens.empty()) sentence_start_line = line_no;

        ParsedToken tok;
        tok.form = cols[1];
        tok.upos = cols[3];
        tok.deprel = cols[7];
        if (!is_universal_tag(tok.upos)) {
            throw ConlluError(line_no, "unknown UPOS tag '" + tok.upos + "'");
        }
        if (!all_digits(cols[6])) {
            throw ConlluError(line_no, "bad head index '" + cols[6] + "'");
        }
        tok.head = std::stoi(cols[6]);
        if (tok.deprel.empty() || tok.deprel == "_") {
            throw ConlluError(line_no, "missing dependency relation");
        }
        sentence.tokens.push_back(std::move(tok));
    }
    flush_sentence();
    return docs;
}

std::vector<std::string> pos_sequence(const std::vector<ParsedSentence>& sentences) {
    std::vector<std::string> out;
    for (const auto& s : sentences) {
        for (const auto& tok : s.tokens) out.push_back(tok.upos);
    }
    return out;
}

std::vector<std::string> dep_triplets(const std::vector<ParsedSentence>& sentences) {
    static const std::string arrow = "→";
    std::vector<std::string> out;
    for (const auto& s : sentences) {
        const int len = static_cast<int>(s.tokens.size());
        for (const auto& tok : s.tokens) {
            if (tok.head < 0 || tok.head > len) {
                throw ConlluError(0, "head index out of range in dep_triplets");
            }
            const std::string head_upos =
                tok.head == 0 ? "ROOT" : s.tokens[static_cast<std::size_t>(tok.head - 1)].upos;
            out.push_back(tok.upos + arrow + tok.deprel + arrow + head_upos);
        }
    }
    return out;
}

}  // namespace socio::features
