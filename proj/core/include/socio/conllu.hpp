#pragma once

// CoNLL-U ingestion for parses produced by any external UD parser, plus the
// POS-sequence and dependency-triplet document representations.

#include <map>
#include <string>
#include <vector>

namespace socio::features {

struct ParsedToken {
    std::string form;
    std::string upos;    // one of the 17 UD universal tags
    int head = 0;        // 0 = root
    std::string deprel;
};

struct ParsedSentence {
    std::vector<ParsedToken> tokens;
};

bool is_universal_tag(const std::string& upos);

// Sentences grouped per document via `# doc_id = ...` comments. Multiword
// ranges (3-4) and empty nodes (5.1) are skipped. Throws ConlluError with a
// line number on malformed input or a sentence with no bound doc_id.
std::map<std::string, std::vector<ParsedSentence>> read_conllu(const std::string& path);

// UPOS tags in token order across sentences; lexical forms discarded.
std::vector<std::string> pos_sequence(const std::vector<ParsedSentence>& sentences);

// Per token "UPOS<arrow>deprel<arrow>HEAD_UPOS"; the root's head renders as
// "ROOT". Throws ConlluError on a head index out of range.
std::vector<std::string> dep_triplets(const std::vector<ParsedSentence>& sentences);

}  // namespace socio::features
