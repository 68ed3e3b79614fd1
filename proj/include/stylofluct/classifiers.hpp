#ifndef STYLOFLUCT_CLASSIFIERS_HPP
#define STYLOFLUCT_CLASSIFIERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "stylofluct/dataset.hpp"

namespace stylofluct {

enum class ModelKind { Knn, NaiveBayes, DecisionTree, Perceptron };

std::string model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

// Immutable after training; predict is deterministic and safe to call
// concurrently. Throws std::invalid_argument on arity mismatch.
class TrainedModel {
public:
    virtual ~TrainedModel() = default;
    virtual ModelKind kind() const = 0;
    virtual std::string predict(const std::vector<double>& features) const = 0;
};

struct TrainOptions {
    std::size_t knn_k = 3;
    double perceptron_learning_rate = 0.01;
    std::size_t perceptron_max_epochs = 500;
};

// Throws std::invalid_argument on a single-class dataset, or (for Naive
// Bayes) when some class has fewer than 2 rows.
std::unique_ptr<TrainedModel> train_model(ModelKind kind, const LabeledDataset& dataset,
                                          const TrainOptions& options = {});

}  // namespace stylofluct

#endif
