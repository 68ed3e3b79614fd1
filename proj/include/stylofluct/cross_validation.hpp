#ifndef STYLOFLUCT_CROSS_VALIDATION_HPP
#define STYLOFLUCT_CROSS_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stylofluct/classifiers.hpp"
#include "stylofluct/dataset.hpp"

namespace stylofluct {

struct CVReport {
    std::string model_kind;
    std::vector<double> fold_accuracies;
    double mean_accuracy = 0.0;
    std::vector<std::string> labels;              // sorted class labels
    std::vector<std::vector<std::size_t>> confusion;  // [actual][predicted]
    double p_value = 1.0;  // one-sided binomial tail vs chance = 1/|C|
    std::uint64_t seed = 0;

    std::string to_json() const;
    // Human-readable confusion table.
    std::string confusion_table() const;
};

// Stratified k-fold CV with a seeded shuffle. Fold assignment deals each
// class's shuffled rows round-robin, so folds stay balanced even when a
// class has fewer than k rows. Throws when k > row count or k < 2.
CVReport cross_validate(const LabeledDataset& dataset, ModelKind kind, std::size_t folds,
                        std::uint64_t seed, const TrainOptions& options = {});

}  // namespace stylofluct

#endif
