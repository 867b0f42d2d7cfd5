#pragma once

// Kruskal-Wallis rank test with mid-rank tie correction. Significance is
// reported as a critical-value tier, not an exact p-value.

#include <string>
#include <vector>

namespace socio::readability {

enum class SignificanceTier { none, p05, p01, p001 };

std::string to_string(SignificanceTier tier);

struct KruskalResult {
    double H = 0.0;  // tie-corrected statistic
    int df = 0;      // number of groups - 1
    SignificanceTier significant_at = SignificanceTier::none;
};

// Throws std::invalid_argument for fewer than 2 groups or an empty group.
// All values identical across groups is the degenerate case, defined as H=0.
KruskalResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

// Chi-squared critical value at the tier's alpha for the given df (tabulated
// for df 1..10, Wilson-Hilferty approximation above).
double chi_squared_critical(int df, SignificanceTier tier);

}  // namespace socio::readability
