#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stylofluct/classifiers.hpp"
#include "stylofluct/cross_validation.hpp"
#include "stylofluct/info_gain.hpp"
#include "stylofluct/pca.hpp"
#include "stylofluct/stats.hpp"

using namespace stylofluct;

namespace {

LabeledDataset toy_table() {
    // {(1,A),(1,A),(2,B),(2,B)}
    LabeledDataset ds;
    ds.attribute_names = {"f"};
    ds.rows = {{"r1", "A", {1.0}}, {"r2", "A", {1.0}}, {"r3", "B", {2.0}}, {"r4", "B", {2.0}}};
    return ds;
}

LabeledDataset two_blobs(std::size_t per_class, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.5);
    LabeledDataset ds;
    ds.attribute_names = {"x", "y"};
    for (std::size_t i = 0; i < per_class; ++i) {
        ds.rows.push_back({"a" + std::to_string(i), "A", {noise(rng) - 4.0, noise(rng) - 4.0}});
        ds.rows.push_back({"b" + std::to_string(i), "B", {noise(rng) + 4.0, noise(rng) + 4.0}});
    }
    return ds;
}

LabeledDataset xor_data() {
    LabeledDataset ds;
    ds.attribute_names = {"x", "y"};
    int id = 0;
    for (double jitter : {0.0, 0.05, -0.05, 0.1}) {
        ds.rows.push_back({"p" + std::to_string(id++), "A", {0.0 + jitter, 0.0 + jitter}});
        ds.rows.push_back({"p" + std::to_string(id++), "A", {1.0 + jitter, 1.0 - jitter}});
        ds.rows.push_back({"p" + std::to_string(id++), "B", {0.0 + jitter, 1.0 + jitter}});
        ds.rows.push_back({"p" + std::to_string(id++), "B", {1.0 - jitter, 0.0 + jitter}});
    }
    return ds;
}

double training_accuracy(const TrainedModel& model, const LabeledDataset& ds) {
    std::size_t correct = 0;
    for (const auto& r : ds.rows) {
        if (model.predict(r.features) == r.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(ds.rows.size());
}

}  // namespace

TEST_CASE("information gain") {
    SUBCASE("perfect separator attains the full class entropy") {
        const auto ds = toy_table();
        const double gain = information_gain(ds, 0);
        CHECK(gain == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
    SUBCASE("constant attribute has zero gain") {
        LabeledDataset ds;
        ds.attribute_names = {"c"};
        ds.rows = {{"r1", "A", {7.0}}, {"r2", "B", {7.0}}};
        CHECK(information_gain(ds, 0) == 0.0);
    }
    SUBCASE("gain is bounded by H(S) and non-negative") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        LabeledDataset ds;
        ds.attribute_names = {"noise"};
        std::vector<std::string> labels;
        for (int i = 0; i < 40; ++i) {
            const std::string label = i % 3 == 0 ? "A" : (i % 3 == 1 ? "B" : "C");
            ds.rows.push_back({"r" + std::to_string(i), label, {uni(rng)}});
            labels.push_back(label);
        }
        const double gain = information_gain(ds, 0);
        CHECK(gain >= 0.0);
        CHECK(gain <= class_entropy(labels) + 1e-12);
    }
    SUBCASE("hand-computed mixed table") {
        // values {1,1,2,2}, labels {A,B,A,B}: attribute is independent of class
        LabeledDataset ds;
        ds.attribute_names = {"f"};
        ds.rows = {{"r1", "A", {1.0}}, {"r2", "B", {1.0}}, {"r3", "A", {2.0}}, {"r4", "B", {2.0}}};
        CHECK(information_gain(ds, 0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("ranking puts the informative attribute first, constant last") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        LabeledDataset ds;
        ds.attribute_names = {"noise", "informative", "constant"};
        for (int i = 0; i < 30; ++i) {
            const std::string label = i % 2 == 0 ? "A" : "B";
            ds.rows.push_back({"r" + std::to_string(i), label,
                               {uni(rng), label == "A" ? 1.0 : 2.0, 3.0}});
        }
        const auto ranked = rank_attributes(ds);
        CHECK(ranked.front().name == "informative");
        CHECK(ranked.back().name == "constant");
        CHECK(ranked.back().gain == 0.0);
    }
}

TEST_CASE("classifiers") {
    SUBCASE("all four reach 100% training accuracy on separated blobs") {
        const auto ds = two_blobs(20, 11);
        for (ModelKind kind : {ModelKind::Knn, ModelKind::NaiveBayes, ModelKind::DecisionTree,
                               ModelKind::Perceptron}) {
            const auto model = train_model(kind, ds);
            CHECK(training_accuracy(*model, ds) == doctest::Approx(1.0));
        }
    }
    SUBCASE("XOR: linear perceptron fails, tree succeeds") {
        const auto ds = xor_data();
        const auto tree = train_model(ModelKind::DecisionTree, ds);
        CHECK(training_accuracy(*tree, ds) == doctest::Approx(1.0));
        const auto perceptron = train_model(ModelKind::Perceptron, ds);
        CHECK(training_accuracy(*perceptron, ds) <= 0.6 + 1e-9);
    }
    SUBCASE("tree splits the toy table on the informative attribute") {
        const auto ds = toy_table();
        const auto tree = train_model(ModelKind::DecisionTree, ds);
        CHECK(tree->predict({1.0}) == "A");
        CHECK(tree->predict({2.0}) == "B");
        // threshold lies in (1,2)
        CHECK(tree->predict({0.0}) == "A");
        CHECK(tree->predict({3.0}) == "B");
    }
    SUBCASE("1-NN returns its own label on a training instance") {
        const auto ds = two_blobs(10, 13);
        TrainOptions opt;
        opt.knn_k = 1;
        const auto model = train_model(ModelKind::Knn, ds, opt);
        for (const auto& r : ds.rows) CHECK(model->predict(r.features) == r.label);
    }
    SUBCASE("Bayes decision boundary at the midpoint for equal variances") {
        LabeledDataset ds;
        ds.attribute_names = {"x"};
        // class A around 0, class B around 2, equal spreads
        ds.rows = {{"a1", "A", {-0.5}}, {"a2", "A", {0.5}}, {"b1", "B", {1.5}}, {"b2", "B", {2.5}}};
        const auto model = train_model(ModelKind::NaiveBayes, ds);
        CHECK(model->predict({0.99}) == "A");
        CHECK(model->predict({1.01}) == "B");
        // exact midpoint: first-ordered class by the documented tie rule
        CHECK(model->predict({1.0}) == "A");
    }
    SUBCASE("single class rejected") {
        LabeledDataset ds;
        ds.attribute_names = {"x"};
        ds.rows = {{"r1", "A", {1.0}}, {"r2", "A", {2.0}}};
        for (ModelKind kind : {ModelKind::Knn, ModelKind::NaiveBayes, ModelKind::DecisionTree,
                               ModelKind::Perceptron}) {
            CHECK_THROWS_AS(train_model(kind, ds), std::invalid_argument);
        }
    }
    SUBCASE("arity mismatch on predict") {
        const auto model = train_model(ModelKind::NaiveBayes, two_blobs(5, 17));
        CHECK_THROWS_AS(model->predict({1.0, 2.0, 3.0}), std::invalid_argument);
    }
    SUBCASE("predictions are invariant to affine feature scaling (knn, perceptron)") {
        const auto ds = two_blobs(15, 19);
        LabeledDataset scaled = ds;
        for (auto& r : scaled.rows) {
            r.features[0] = r.features[0] * 1000.0 + 5.0;
            r.features[1] = r.features[1] * 0.001 - 7.0;
        }
        for (ModelKind kind : {ModelKind::Knn, ModelKind::Perceptron}) {
            const auto m1 = train_model(kind, ds);
            const auto m2 = train_model(kind, scaled);
            for (std::size_t i = 0; i < ds.rows.size(); ++i) {
                CHECK(m1->predict(ds.rows[i].features) == m2->predict(scaled.rows[i].features));
            }
        }
    }
}

TEST_CASE("cross validation") {
    SUBCASE("separable data scores 1.0") {
        const auto report = cross_validate(two_blobs(10, 23), ModelKind::Knn, 10, 1);
        CHECK(report.mean_accuracy == doctest::Approx(1.0));
        CHECK(report.p_value < 1e-4);
    }
    SUBCASE("pure-noise multiclass data stays near chance") {
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        LabeledDataset ds;
        ds.attribute_names = {"n1", "n2"};
        for (int i = 0; i < 160; ++i) {
            ds.rows.push_back({"r" + std::to_string(i), "c" + std::to_string(i % 8),
                               {uni(rng), uni(rng)}});
        }
        const auto report = cross_validate(ds, ModelKind::NaiveBayes, 10, 2);
        CHECK(report.mean_accuracy < 0.30);  // chance = 0.125 plus binomial noise
    }
    SUBCASE("fixed seed reproduces the report bit-for-bit") {
        const auto ds = two_blobs(10, 31);
        const auto r1 = cross_validate(ds, ModelKind::DecisionTree, 5, 99);
        const auto r2 = cross_validate(ds, ModelKind::DecisionTree, 5, 99);
        CHECK(r1.to_json() == r2.to_json());
    }
    SUBCASE("confusion matrix trace / total equals mean accuracy on equal folds") {
        const auto ds = two_blobs(10, 37);  // 20 rows, 10 folds of 2
        const auto report = cross_validate(ds, ModelKind::Knn, 10, 3);
        std::size_t trace = 0, total = 0;
        for (std::size_t i = 0; i < report.labels.size(); ++i) {
            trace += report.confusion[i][i];
            for (std::size_t j = 0; j < report.labels.size(); ++j) total += report.confusion[i][j];
        }
        CHECK(total == ds.rows.size());
        CHECK(report.mean_accuracy ==
              doctest::Approx(static_cast<double>(trace) / static_cast<double>(total)));
    }
    SUBCASE("confusion row sums equal per-class test counts") {
        const auto ds = two_blobs(10, 41);
        const auto report = cross_validate(ds, ModelKind::NaiveBayes, 10, 4);
        for (std::size_t i = 0; i < report.labels.size(); ++i) {
            std::size_t row_sum = 0;
            for (std::size_t j = 0; j < report.labels.size(); ++j) row_sum += report.confusion[i][j];
            CHECK(row_sum == 10);  // each class has 10 rows, all tested exactly once
        }
    }
    SUBCASE("more folds than rows rejected") {
        CHECK_THROWS_AS(cross_validate(toy_table(), ModelKind::Knn, 10, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("binomial p-value") {
    SUBCASE("all correct at chance 0.5") {
        CHECK(binomial_pvalue(10, 10, 0.5) == doctest::Approx(std::pow(2.0, -10)).epsilon(1e-12));
    }
    SUBCASE("zero correct is certain") {
        CHECK(binomial_pvalue(0, 10, 0.5) == 1.0);
    }
    SUBCASE("18/40 at chance 1/8 is highly significant") {
        const double p = binomial_pvalue(18, 40, 0.125);
        CHECK(p < 1e-6);
        CHECK(p > 0.0);
    }
    SUBCASE("matches direct high-precision summation") {
        // direct sum with long double for a small case
        const std::size_t total = 12, correct = 9;
        const long double chance = 0.25L;
        long double direct = 0.0L;
        auto binom = [](std::size_t n, std::size_t k) {
            long double r = 1.0L;
            for (std::size_t i = 0; i < k; ++i) {
                r = r * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
            }
            return r;
        };
        for (std::size_t i = correct; i <= total; ++i) {
            direct += binom(total, i) * std::pow(chance, static_cast<long double>(i)) *
                      std::pow(1.0L - chance, static_cast<long double>(total - i));
        }
        CHECK(binomial_pvalue(correct, total, 0.25) ==
              doctest::Approx(static_cast<double>(direct)).epsilon(1e-10));
    }
}

TEST_CASE("pca") {
    SUBCASE("collinear 2D data: first component captures everything") {
        LabeledDataset ds;
        ds.attribute_names = {"x", "y"};
        for (int i = 0; i < 20; ++i) {
            const double t = static_cast<double>(i);
            ds.rows.push_back({"r" + std::to_string(i), "A", {t, 3.0 * t}});
        }
        const auto res = pca(ds, 2);
        CHECK(res.explained_variance_ratio[0] >= 0.999);
    }
    SUBCASE("isotropic cloud: roughly equal ratios") {
        std::mt19937_64 rng(43);
        std::normal_distribution<double> gauss(0.0, 1.0);
        LabeledDataset ds;
        ds.attribute_names = {"x", "y"};
        for (int i = 0; i < 4000; ++i) {
            ds.rows.push_back({"r" + std::to_string(i), "A", {gauss(rng), gauss(rng)}});
        }
        const auto res = pca(ds, 2);
        CHECK(std::abs(res.explained_variance_ratio[0] - res.explained_variance_ratio[1]) < 0.1);
    }
    SUBCASE("eigenpairs satisfy the residual bound") {
        std::mt19937_64 rng(47);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const std::size_t arity = 5;
        LabeledDataset ds;
        for (std::size_t k = 0; k < arity; ++k) ds.attribute_names.push_back("f" + std::to_string(k));
        for (int i = 0; i < 60; ++i) {
            std::vector<double> f(arity);
            const double shared = gauss(rng);
            for (auto& v : f) v = shared * 0.7 + gauss(rng);
            ds.rows.push_back({"r" + std::to_string(i), "A", std::move(f)});
        }
        // rebuild the z-scored covariance independently and check ||Av - lv||
        std::vector<std::vector<double>> rows;
        for (const auto& r : ds.rows) rows.push_back(r.features);
        const auto z = ZScore::fit(rows);
        std::vector<std::vector<double>> x;
        for (const auto& r : rows) x.push_back(z.apply(r));
        std::vector<std::vector<double>> cov(arity, std::vector<double>(arity, 0.0));
        for (const auto& row : x)
            for (std::size_t i = 0; i < arity; ++i)
                for (std::size_t j = 0; j < arity; ++j) cov[i][j] += row[i] * row[j];
        for (auto& row : cov)
            for (auto& v : row) v /= static_cast<double>(x.size() - 1);

        const auto res = pca(ds, arity);
        for (std::size_t d = 0; d < arity; ++d) {
            double norm2 = 0.0;
            for (std::size_t i = 0; i < arity; ++i) {
                double av = 0.0;
                for (std::size_t j = 0; j < arity; ++j) av += cov[i][j] * res.components[d][j];
                const double resid = av - res.eigenvalues[d] * res.components[d][i];
                norm2 += resid * resid;
            }
            CHECK(std::sqrt(norm2) < 1e-8);
        }
    }
    SUBCASE("zero-variance data rejected") {
        LabeledDataset ds;
        ds.attribute_names = {"x"};
        ds.rows = {{"r1", "A", {1.0}}, {"r2", "A", {1.0}}};
        CHECK_THROWS_AS(pca(ds, 1), std::invalid_argument);
    }
}
