#include "stylofluct/info_gain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace stylofluct {

double class_entropy(const std::vector<std::string>& labels) {
    if (labels.empty()) return 0.0;
    std::map<std::string, std::size_t> counts;
    for (const auto& l : labels) ++counts[l];
    const double n = static_cast<double>(labels.size());
    double h = 0.0;
    for (const auto& [l, c] : counts) {
        const double p = static_cast<double>(c) / n;
        h -= p * std::log(p);
    }
    return h;
}

namespace {

// Equal-frequency bin index per row. Distinct values fewer than `bins`
// become their own bins (covers already-discrete attributes exactly).
std::vector<std::size_t> discretize(const LabeledDataset& dataset, std::size_t attribute,
                                    std::size_t bins) {
    const std::size_t n = dataset.rows.size();
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = dataset.rows[i].features[attribute];

    std::vector<double> distinct = values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::size_t> assignment(n);
    if (distinct.size() <= bins) {
        for (std::size_t i = 0; i < n; ++i) {
            assignment[i] = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), values[i]) - distinct.begin());
        }
        return assignment;
    }

    // cut points at the equal-frequency quantiles of the sorted values
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cuts;  // upper edge of each bin except the last
    cuts.reserve(bins - 1);
    for (std::size_t b = 1; b < bins; ++b) {
        cuts.push_back(sorted[b * n / bins]);
    }
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i < n; ++i) {
        assignment[i] = static_cast<std::size_t>(
            std::lower_bound(cuts.begin(), cuts.end(), values[i],
                             [](double cut, double v) { return cut <= v; }) -
            cuts.begin());
    }
    return assignment;
}

}  // namespace

double information_gain(const LabeledDataset& dataset, std::size_t attribute, std::size_t bins) {
    if (dataset.rows.empty()) throw std::invalid_argument("information_gain: empty dataset");
    if (attribute >= dataset.arity()) {
        throw std::invalid_argument("information_gain: attribute index out of range");
    }

    std::vector<std::string> labels;
    labels.reserve(dataset.rows.size());
    for (const auto& r : dataset.rows) labels.push_back(r.label);
    const double h_total = class_entropy(labels);

    const auto bin_of = discretize(dataset, attribute, bins);
    std::map<std::size_t, std::vector<std::string>> partitions;
    for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
        partitions[bin_of[i]].push_back(dataset.rows[i].label);
    }

    double h_cond = 0.0;
    const double n = static_cast<double>(dataset.rows.size());
    for (const auto& [bin, part] : partitions) {
        h_cond += static_cast<double>(part.size()) / n * class_entropy(part);
    }
    const double gain = h_total - h_cond;
    return gain < 0.0 ? 0.0 : gain;  // clamp tiny negative round-off
}

std::vector<RankedAttribute> rank_attributes(const LabeledDataset& dataset, std::size_t bins) {
    std::vector<RankedAttribute> ranked;
    ranked.reserve(dataset.arity());
    for (std::size_t k = 0; k < dataset.arity(); ++k) {
        ranked.push_back({dataset.attribute_names[k], k, information_gain(dataset, k, bins)});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedAttribute& a, const RankedAttribute& b) {
        if (a.gain != b.gain) return a.gain > b.gain;
        return a.name < b.name;
    });
    return ranked;
}

}  // namespace stylofluct
