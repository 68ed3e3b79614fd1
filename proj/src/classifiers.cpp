#include "stylofluct/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "stylofluct/info_gain.hpp"
#include "stylofluct/stats.hpp"

namespace stylofluct {

std::string model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Knn: return "knn";
        case ModelKind::NaiveBayes: return "naiveBayes";
        case ModelKind::DecisionTree: return "decisionTree";
        case ModelKind::Perceptron: return "perceptron";
    }
    throw std::logic_error("unknown model kind");
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "knn") return ModelKind::Knn;
    if (name == "naiveBayes") return ModelKind::NaiveBayes;
    if (name == "decisionTree") return ModelKind::DecisionTree;
    if (name == "perceptron") return ModelKind::Perceptron;
    throw std::invalid_argument("unknown classifier kind: " + name);
}

namespace {

// Label order for deterministic tie breaking: lexicographic.
std::vector<std::string> sorted_classes(const LabeledDataset& ds) {
    auto classes = ds.class_set();
    std::sort(classes.begin(), classes.end());
    return classes;
}

void check_trainable(const LabeledDataset& ds) {
    ds.validate(true);
    if (ds.rows.empty()) throw std::invalid_argument("cannot train on empty dataset");
}

class KnnModel final : public TrainedModel {
public:
    KnnModel(const LabeledDataset& ds, std::size_t k) : k_(k) {
        check_trainable(ds);
        std::vector<std::vector<double>> raw;
        raw.reserve(ds.rows.size());
        for (const auto& r : ds.rows) raw.push_back(r.features);
        zscore_ = ZScore::fit(raw);
        for (std::size_t i = 0; i < ds.rows.size(); ++i) {
            instances_.push_back(zscore_.apply(raw[i]));
            labels_.push_back(ds.rows[i].label);
        }
    }

    ModelKind kind() const override { return ModelKind::Knn; }

    std::string predict(const std::vector<double>& features) const override {
        const auto q = zscore_.apply(features);
        std::vector<std::pair<double, std::size_t>> by_dist;
        by_dist.reserve(instances_.size());
        for (std::size_t i = 0; i < instances_.size(); ++i) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < q.size(); ++k) {
                const double d = q[k] - instances_[i][k];
                d2 += d * d;
            }
            by_dist.emplace_back(d2, i);
        }
        std::sort(by_dist.begin(), by_dist.end());
        const std::size_t take = std::min(k_, by_dist.size());

        // vote; ties by smallest summed distance, then label order
        std::map<std::string, std::pair<std::size_t, double>> votes;  // label -> (count, dist sum)
        for (std::size_t i = 0; i < take; ++i) {
            auto& v = votes[labels_[by_dist[i].second]];
            ++v.first;
            v.second += std::sqrt(by_dist[i].first);
        }
        std::string best;
        std::size_t best_count = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (const auto& [label, v] : votes) {
            if (v.first > best_count || (v.first == best_count && v.second < best_dist)) {
                best = label;
                best_count = v.first;
                best_dist = v.second;
            }
        }
        return best;
    }

private:
    std::size_t k_;
    ZScore zscore_;
    std::vector<std::vector<double>> instances_;
    std::vector<std::string> labels_;
};

class NaiveBayesModel final : public TrainedModel {
public:
    explicit NaiveBayesModel(const LabeledDataset& ds) {
        check_trainable(ds);
        classes_ = sorted_classes(ds);
        const std::size_t arity = ds.arity();
        const double n = static_cast<double>(ds.rows.size());

        for (const auto& c : classes_) {
            std::vector<std::vector<double>> members;
            for (const auto& r : ds.rows) {
                if (r.label == c) members.push_back(r.features);
            }
            if (members.size() < 2) {
                throw std::invalid_argument("class '" + c +
                                            "' has fewer than 2 rows; cannot estimate variance");
            }
            ClassParams p;
            p.log_prior = std::log(static_cast<double>(members.size()) / n);
            p.mean.assign(arity, 0.0);
            p.var.assign(arity, 0.0);
            for (const auto& row : members) {
                for (std::size_t k = 0; k < arity; ++k) p.mean[k] += row[k];
            }
            for (auto& m : p.mean) m /= static_cast<double>(members.size());
            for (const auto& row : members) {
                for (std::size_t k = 0; k < arity; ++k) {
                    const double d = row[k] - p.mean[k];
                    p.var[k] += d * d;
                }
            }
            constexpr double kVarianceFloor = 1e-9;
            for (auto& v : p.var) {
                v /= static_cast<double>(members.size());
                if (v < kVarianceFloor) v = kVarianceFloor;
            }
            params_.push_back(std::move(p));
        }
    }

    ModelKind kind() const override { return ModelKind::NaiveBayes; }

    std::string predict(const std::vector<double>& features) const override {
        if (features.size() != params_.front().mean.size()) {
            throw std::invalid_argument("feature arity mismatch");
        }
        std::size_t best = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
            const auto& p = params_[ci];
            double score = p.log_prior;
            for (std::size_t k = 0; k < features.size(); ++k) {
                const double d = features[k] - p.mean[k];
                score += -0.5 * std::log(2.0 * std::numbers::pi * p.var[k]) -
                         d * d / (2.0 * p.var[k]);
            }
            if (score > best_score) {  // first (lexicographically smallest) class wins ties
                best_score = score;
                best = ci;
            }
        }
        return classes_[best];
    }

private:
    struct ClassParams {
        double log_prior;
        std::vector<double> mean, var;
    };
    std::vector<std::string> classes_;
    std::vector<ClassParams> params_;
};

class DecisionTreeModel final : public TrainedModel {
public:
    explicit DecisionTreeModel(const LabeledDataset& ds) : arity_(ds.arity()) {
        check_trainable(ds);
        std::vector<std::size_t> all(ds.rows.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        root_ = build(ds, all);
    }

    ModelKind kind() const override { return ModelKind::DecisionTree; }

    std::string predict(const std::vector<double>& features) const override {
        if (features.size() != arity_) throw std::invalid_argument("feature arity mismatch");
        std::size_t node = root_;
        while (!nodes_[node].is_leaf) {
            node = features[nodes_[node].attribute] >= nodes_[node].threshold
                       ? nodes_[node].yes
                       : nodes_[node].no;
        }
        return nodes_[node].label;
    }

private:
    struct Node {
        bool is_leaf = true;
        std::string label;
        std::size_t attribute = 0;
        double threshold = 0.0;
        std::size_t yes = 0, no = 0;
    };

    static constexpr std::size_t kMinLeaf = 2;

    std::size_t build(const LabeledDataset& ds, const std::vector<std::size_t>& rows) {
        std::vector<std::string> labels;
        labels.reserve(rows.size());
        for (std::size_t i : rows) labels.push_back(ds.rows[i].label);
        const double h_node = class_entropy(labels);

        std::size_t best_attr = 0;
        double best_threshold = 0.0;
        double best_gain = 0.0;
        if (h_node > 0.0 && rows.size() >= 2 * kMinLeaf) {
            for (std::size_t attr = 0; attr < arity_; ++attr) {
                std::vector<std::pair<double, std::string>> sorted;
                sorted.reserve(rows.size());
                for (std::size_t i : rows) {
                    sorted.emplace_back(ds.rows[i].features[attr], ds.rows[i].label);
                }
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t i = 1; i < sorted.size(); ++i) {
                    if (sorted[i].first == sorted[i - 1].first) continue;
                    if (i < kMinLeaf || sorted.size() - i < kMinLeaf) continue;
                    const double theta = (sorted[i - 1].first + sorted[i].first) / 2.0;
                    std::vector<std::string> below, above;
                    for (const auto& [v, l] : sorted) {
                        (v >= theta ? above : below).push_back(l);
                    }
                    const double n = static_cast<double>(sorted.size());
                    const double h_split =
                        static_cast<double>(below.size()) / n * class_entropy(below) +
                        static_cast<double>(above.size()) / n * class_entropy(above);
                    const double gain = h_node - h_split;
                    if (gain > best_gain + 1e-12) {
                        best_gain = gain;
                        best_attr = attr;
                        best_threshold = theta;
                    }
                }
            }
        }

        if (best_gain <= 0.0) {
            Node leaf;
            leaf.label = majority(labels);
            nodes_.push_back(std::move(leaf));
            return nodes_.size() - 1;
        }

        std::vector<std::size_t> yes_rows, no_rows;
        for (std::size_t i : rows) {
            (ds.rows[i].features[best_attr] >= best_threshold ? yes_rows : no_rows).push_back(i);
        }
        const std::size_t yes = build(ds, yes_rows);
        const std::size_t no = build(ds, no_rows);
        Node inner;
        inner.is_leaf = false;
        inner.attribute = best_attr;
        inner.threshold = best_threshold;
        inner.yes = yes;
        inner.no = no;
        nodes_.push_back(std::move(inner));
        return nodes_.size() - 1;
    }

    static std::string majority(const std::vector<std::string>& labels) {
        std::map<std::string, std::size_t> counts;
        for (const auto& l : labels) ++counts[l];
        std::string best;
        std::size_t best_count = 0;
        for (const auto& [l, c] : counts) {  // map order breaks ties lexicographically
            if (c > best_count) {
                best = l;
                best_count = c;
            }
        }
        return best;
    }

    std::size_t arity_;
    std::vector<Node> nodes_;
    std::size_t root_ = 0;
};

class PerceptronModel final : public TrainedModel {
public:
    PerceptronModel(const LabeledDataset& ds, const TrainOptions& opt) {
        check_trainable(ds);
        classes_ = sorted_classes(ds);
        std::vector<std::vector<double>> raw;
        raw.reserve(ds.rows.size());
        for (const auto& r : ds.rows) raw.push_back(r.features);
        zscore_ = ZScore::fit(raw);
        std::vector<std::vector<double>> inputs;
        inputs.reserve(raw.size());
        for (const auto& r : raw) inputs.push_back(zscore_.apply(r));

        const std::size_t arity = ds.arity();
        weights_.assign(classes_.size(), std::vector<double>(arity, 0.0));
        bias_.assign(classes_.size(), 0.0);

        // one-vs-rest threshold units, w <- w + eta * err * x
        for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
            auto& w = weights_[ci];
            double& b = bias_[ci];
            for (std::size_t epoch = 0; epoch < opt.perceptron_max_epochs; ++epoch) {
                bool any_error = false;
                for (std::size_t i = 0; i < inputs.size(); ++i) {
                    const double target = ds.rows[i].label == classes_[ci] ? 1.0 : 0.0;
                    double s = b;
                    for (std::size_t k = 0; k < arity; ++k) s += w[k] * inputs[i][k];
                    const double out = s > 0.0 ? 1.0 : 0.0;
                    const double err = target - out;
                    if (err != 0.0) {
                        any_error = true;
                        for (std::size_t k = 0; k < arity; ++k) {
                            w[k] += opt.perceptron_learning_rate * err * inputs[i][k];
                        }
                        b += opt.perceptron_learning_rate * err;
                    }
                }
                if (!any_error) break;
            }
        }
    }

    ModelKind kind() const override { return ModelKind::Perceptron; }

    std::string predict(const std::vector<double>& features) const override {
        const auto x = zscore_.apply(features);
        std::size_t best = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
            double s = bias_[ci];
            for (std::size_t k = 0; k < x.size(); ++k) s += weights_[ci][k] * x[k];
            if (s > best_score) {
                best_score = s;
                best = ci;
            }
        }
        return classes_[best];
    }

private:
    std::vector<std::string> classes_;
    ZScore zscore_;
    std::vector<std::vector<double>> weights_;
    std::vector<double> bias_;
};

}  // namespace

std::unique_ptr<TrainedModel> train_model(ModelKind kind, const LabeledDataset& dataset,
                                          const TrainOptions& options) {
    switch (kind) {
        case ModelKind::Knn: return std::make_unique<KnnModel>(dataset, options.knn_k);
        case ModelKind::NaiveBayes: return std::make_unique<NaiveBayesModel>(dataset);
        case ModelKind::DecisionTree: return std::make_unique<DecisionTreeModel>(dataset);
        case ModelKind::Perceptron: return std::make_unique<PerceptronModel>(dataset, options);
    }
    throw std::logic_error("unknown model kind");
}

}  // namespace stylofluct
