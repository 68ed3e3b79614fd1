#ifndef STYLOFLUCT_INFO_GAIN_HPP
#define STYLOFLUCT_INFO_GAIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stylofluct/dataset.hpp"

namespace stylofluct {

// Class entropy of a label multiset, natural log (nats).
double class_entropy(const std::vector<std::string>& labels);

// Information gain of one attribute: H(S) - H(S|F). Continuous values are
// discretized into up to `bins` equal-frequency bins first. A constant
// attribute yields 0.
double information_gain(const LabeledDataset& dataset, std::size_t attribute,
                        std::size_t bins = 10);

struct RankedAttribute {
    std::string name;
    std::size_t index;
    double gain;
};

// All attributes sorted by gain descending, ties broken by name.
std::vector<RankedAttribute> rank_attributes(const LabeledDataset& dataset,
                                             std::size_t bins = 10);

}  // namespace stylofluct

#endif
