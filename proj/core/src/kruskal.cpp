#include "socio/kruskal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace socio::readability {

std::string to_string(SignificanceTier tier) {
    switch (tier) {
        case SignificanceTier::p05: return "0.05";
        case SignificanceTier::p01: return "0.01";
        case SignificanceTier::p001: return "0.001";
        default: return "none";
    }
}

double chi_squared_critical(int df, SignificanceTier tier) {
    static constexpr double table[10][3] = {
        // alpha:  0.05     0.01     0.001
        {3.841, 6.635, 10.828},   // df 1
        {5.991, 9.210, 13.816},   // df 2
        {7.815, 11.345, 16.266},  // df 3
        {9.488, 13.277, 18.467},  // df 4
        {11.070, 15.086, 20.515}, // df 5
        {12.592, 16.812, 22.458}, // df 6
        {14.067, 18.475, 24.322}, // df 7
        {15.507, 20.090, 26.125}, // df 8
        {16.919, 21.666, 27.877}, // df 9
        {18.307, 23.209, 29.588}, // df 10
    };
    if (df < 1) throw std::invalid_argument("chi_squared_critical: df must be >= 1");
    int col;
    switch (tier) {
        case SignificanceTier::p05: col = 0; break;
        case SignificanceTier::p01: col = 1; break;
        case SignificanceTier::p001: col = 2; break;
        default: throw std::invalid_argument("chi_squared_critical: tier 'none' has no value");
    }
    if (df <= 10) return table[df - 1][col];

    // Wilson-Hilferty: chi2 ~ df * (1 - 2/(9 df) + z sqrt(2/(9 df)))^3
    static constexpr double z[3] = {1.6449, 2.3263, 3.0902};
    const double d = static_cast<double>(df);
    const double t = 1.0 - 2.0 / (9.0 * d) + z[col] * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

KruskalResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) {
        throw std::invalid_argument("kruskal_wallis: need at least 2 groups");
    }
    std::size_t total = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("kruskal_wallis: empty group");
        total += g.size();
    }

    // Pool values, sort, assign mid-ranks to ties.
    std::vector<std::pair<double, std::size_t>> pooled;  // (value, group index)
    pooled.reserve(total);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        for (double v : groups[gi]) pooled.emplace_back(v, gi);
    }
    std::sort(pooled.begin(), pooled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> rank_sum(groups.size(), 0.0);
    double tie_term = 0.0;  // sum of t^3 - t over tie groups
    std::size_t i = 0;
    while (i < pooled.size()) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
        const double t = static_cast<double>(j - i);
        const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) rank_sum[pooled[k].second] += mid_rank;
        if (t > 1.0) tie_term += t * t * t - t;
        i = j;
    }

    const double n = static_cast<double>(total);
    double h = 0.0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const double ni = static_cast<double>(groups[gi].size());
        h += rank_sum[gi] * rank_sum[gi] / ni;
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);

    const double correction = 1.0 - tie_term / (n * n * n - n);
    KruskalResult result;
    result.df = static_cast<int>(groups.size()) - 1;
    if (correction <= 0.0) {
        result.H = 0.0;  // every value identical
    } else {
        result.H = std::max(0.0, h / correction);
    }

    if (result.H > chi_squared_critical(result.df, SignificanceTier::p001)) {
        result.significant_at = SignificanceTier::p001;
    } else if (result.H > chi_squared_critical(result.df, SignificanceTier::p01)) {
        result.significant_at = SignificanceTier::p01;
    } else if (result.H > chi_squared_critical(result.df, SignificanceTier::p05)) {
        result.significant_at = SignificanceTier::p05;
    }
    return result;
}

}  // namespace socio::readability
