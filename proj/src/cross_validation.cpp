#include "stylofluct/cross_validation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "stylofluct/stats.hpp"

namespace stylofluct {

std::string CVReport::to_json() const {
    nlohmann::json j;
    j["modelKind"] = model_kind;
    j["foldAccuracies"] = fold_accuracies;
    j["meanAccuracy"] = mean_accuracy;
    j["pValue"] = p_value;
    j["confusion"]["labels"] = labels;
    j["confusion"]["counts"] = confusion;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

std::string CVReport::confusion_table() const {
    std::string out = "actual\\predicted";
    for (const auto& l : labels) out += "\t" + l;
    out += "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += labels[i];
        for (std::size_t k = 0; k < labels.size(); ++k) {
            out += "\t" + std::to_string(confusion[i][k]);
        }
        out += "\n";
    }
    return out;
}

CVReport cross_validate(const LabeledDataset& dataset, ModelKind kind, std::size_t folds,
                        std::uint64_t seed, const TrainOptions& options) {
    dataset.validate(true);
    if (folds < 2) throw std::invalid_argument("cross_validate: need >= 2 folds");
    if (folds > dataset.rows.size()) {
        throw std::invalid_argument("cross_validate: " + std::to_string(folds) +
                                    " folds exceed " + std::to_string(dataset.rows.size()) +
                                    " rows");
    }

    std::vector<std::string> classes = dataset.class_set();
    std::sort(classes.begin(), classes.end());
    std::map<std::string, std::size_t> class_index;
    for (std::size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = i;

    // stratified assignment: shuffle each class's rows, deal round-robin
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> fold_of(dataset.rows.size(), 0);
    std::size_t next_fold = 0;
    for (const auto& c : classes) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
            if (dataset.rows[i].label == c) members.push_back(i);
        }
        std::shuffle(members.begin(), members.end(), rng);
        for (std::size_t i : members) {
            fold_of[i] = next_fold;
            next_fold = (next_fold + 1) % folds;
        }
    }

    CVReport report;
    report.model_kind = model_kind_name(kind);
    report.seed = seed;
    report.labels = classes;
    report.confusion.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));

    std::size_t total_correct = 0, total_tested = 0;
    for (std::size_t fold = 0; fold < folds; ++fold) {
        LabeledDataset train;
        train.attribute_names = dataset.attribute_names;
        std::vector<std::size_t> test_rows;
        for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
            if (fold_of[i] == fold) {
                test_rows.push_back(i);
            } else {
                train.rows.push_back(dataset.rows[i]);
            }
        }
        if (test_rows.empty()) {
            report.fold_accuracies.push_back(0.0);
            continue;
        }
        const auto model = train_model(kind, train, options);
        std::size_t correct = 0;
        for (std::size_t i : test_rows) {
            const std::string predicted = model->predict(dataset.rows[i].features);
            const std::string& actual = dataset.rows[i].label;
            if (predicted == actual) ++correct;
            ++report.confusion[class_index.at(actual)][class_index.at(predicted)];
        }
        report.fold_accuracies.push_back(static_cast<double>(correct) /
                                         static_cast<double>(test_rows.size()));
        total_correct += correct;
        total_tested += test_rows.size();
    }

    report.mean_accuracy = mean_of(report.fold_accuracies);
    report.p_value =
        binomial_pvalue(total_correct, total_tested, 1.0 / static_cast<double>(classes.size()));
    return report;
}

}  // namespace stylofluct
