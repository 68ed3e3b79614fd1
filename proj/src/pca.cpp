#include "stylofluct/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stylofluct/stats.hpp"

namespace stylofluct {

void jacobi_eigen(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                  std::vector<std::vector<double>>& eigenvectors, double tolerance) {
    const std::size_t n = a.size();
    // V starts as identity, accumulates the rotations
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    auto off_diagonal = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    constexpr std::size_t kMaxSweeps = 100;
    for (std::size_t sweep = 0; sweep < kMaxSweeps && off_diagonal() > tolerance; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) <= tolerance / (static_cast<double>(n) * n)) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });

    eigenvalues.resize(n);
    eigenvectors.assign(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r) {
        eigenvalues[r] = a[order[r]][order[r]];
        for (std::size_t k = 0; k < n; ++k) eigenvectors[r][k] = v[k][order[r]];
    }
}

PcaResult pca(const LabeledDataset& dataset, std::size_t dims) {
    dataset.validate(false);
    const std::size_t n = dataset.rows.size();
    const std::size_t arity = dataset.arity();
    if (n < 2) throw std::invalid_argument("pca: need >= 2 rows");
    if (dims > arity) throw std::invalid_argument("pca: dims exceeds attribute count");

    std::vector<std::vector<double>> raw;
    raw.reserve(n);
    for (const auto& r : dataset.rows) raw.push_back(r.features);

    // reject all-constant data before z-scoring masks it
    bool any_variance = false;
    for (std::size_t k = 0; k < arity && !any_variance; ++k) {
        for (std::size_t i = 1; i < n; ++i) {
            if (raw[i][k] != raw[0][k]) {
                any_variance = true;
                break;
            }
        }
    }
    if (!any_variance) throw std::invalid_argument("pca: dataset has zero variance");

    const ZScore z = ZScore::fit(raw);
    std::vector<std::vector<double>> x;
    x.reserve(n);
    for (const auto& r : raw) x.push_back(z.apply(r));

    std::vector<std::vector<double>> cov(arity, std::vector<double>(arity, 0.0));
    for (const auto& row : x) {
        for (std::size_t i = 0; i < arity; ++i)
            for (std::size_t j = i; j < arity; ++j) cov[i][j] += row[i] * row[j];
    }
    for (std::size_t i = 0; i < arity; ++i) {
        for (std::size_t j = i; j < arity; ++j) {
            cov[i][j] /= static_cast<double>(n - 1);
            cov[j][i] = cov[i][j];
        }
    }

    PcaResult res;
    std::vector<std::vector<double>> vectors;
    jacobi_eigen(cov, res.eigenvalues, vectors);

    double total = 0.0;
    for (double e : res.eigenvalues) total += std::max(e, 0.0);

    for (std::size_t d = 0; d < dims; ++d) {
        auto component = vectors[d];
        // sign convention: largest-magnitude loading positive
        double max_abs = 0.0;
        std::size_t max_k = 0;
        for (std::size_t k = 0; k < arity; ++k) {
            if (std::abs(component[k]) > max_abs) {
                max_abs = std::abs(component[k]);
                max_k = k;
            }
        }
        if (component[max_k] < 0.0) {
            for (auto& c : component) c = -c;
        }
        res.components.push_back(std::move(component));
        res.explained_variance_ratio.push_back(
            total > 0.0 ? std::max(res.eigenvalues[d], 0.0) / total : 0.0);
    }

    res.projections.assign(n, std::vector<double>(dims, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d < dims; ++d) {
            double dot = 0.0;
            for (std::size_t k = 0; k < arity; ++k) dot += x[i][k] * res.components[d][k];
            res.projections[i][d] = dot;
        }
    }
    return res;
}

}  // namespace stylofluct
