#ifndef STYLOFLUCT_STATS_HPP
#define STYLOFLUCT_STATS_HPP

#include <cstddef>
#include <vector>

namespace stylofluct {

double mean_of(const std::vector<double>& v);

// Population standard deviation.
double stddev_of(const std::vector<double>& v);

// Throws std::invalid_argument on length mismatch, < 2 points, or zero
// variance in either variable.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

// One-sided binomial tail P[X >= correct] for X ~ Binomial(total, chance),
// evaluated in log space.
double binomial_pvalue(std::size_t correct, std::size_t total, double chance);

// Per-attribute z-score parameters fitted on one dataset and applied to
// another (train-set statistics only).
struct ZScore {
    std::vector<double> mean;
    std::vector<double> stddev;  // floored at a small epsilon

    static ZScore fit(const std::vector<std::vector<double>>& rows);
    std::vector<double> apply(const std::vector<double>& row) const;
};

}  // namespace stylofluct

#endif
