#include "socio/train_config.hpp"

#include "socio/errors.hpp"

namespace socio::models {

void TrainConfig::validate() const {
    if (learning_rate <= 0.0) throw ConfigError("learning_rate must be > 0");
    if (dropout < 0.0 || dropout >= 1.0) throw ConfigError("dropout must be in [0, 1)");
    if (l2 < 0.0) throw ConfigError("l2 must be >= 0");
    if (epochs <= 0) throw ConfigError("epochs must be > 0");
    if (batch_size <= 0) throw ConfigError("batch_size must be > 0");
    if (d_emb <= 0 || n_filters <= 0 || window <= 0 || d_hidden <= 0) {
        throw ConfigError("model dimensions must be positive");
    }
    if (max_seq_len < window) throw ConfigError("max_seq_len must be >= window");
}

}  // namespace socio::models
