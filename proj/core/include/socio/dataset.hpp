#pragma once

#include <vector>

#include "socio/vocab.hpp"

namespace socio::models {

// Model-facing views of a FeatureDoc. Labels are 0-based class indices.
struct SparseExample {
    std::vector<std::pair<int, double>> features;  // (feature id, count)
    int label = 0;
};

struct SeqExample {
    std::vector<int> ids;
    int label = 0;
};

SparseExample to_sparse_example(const features::FeatureDoc& doc);
SeqExample to_seq_example(const features::FeatureDoc& doc, int max_seq_len);

}  // namespace socio::models
