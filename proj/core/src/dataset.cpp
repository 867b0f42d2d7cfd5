#include "socio/dataset.hpp"

namespace socio::models {

SparseExample to_sparse_example(const features::FeatureDoc& doc) {
    SparseExample ex;
    ex.label = doc.class_id - 1;
    ex.features.reserve(doc.counts.size());
    for (const auto& [id, count] : doc.counts) {
        ex.features.emplace_back(id, static_cast<double>(count));
    }
    return ex;
}

SeqExample to_seq_example(const features::FeatureDoc& doc, int max_seq_len) {
    SeqExample ex;
    ex.label = doc.class_id - 1;
    ex.ids = doc.seq;
    if (max_seq_len > 0 && ex.ids.size() > static_cast<std::size_t>(max_seq_len)) {
        ex.ids.resize(static_cast<std::size_t>(max_seq_len));
    }
    return ex;
}

}  // namespace socio::models
