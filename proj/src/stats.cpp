#include "stylofluct/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace stylofluct {

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const double m = mean_of(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size()));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("pearson: need >= 2 points");
    const double mx = mean_of(x), my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::invalid_argument("pearson: zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

double binomial_pvalue(std::size_t correct, std::size_t total, double chance) {
    if (correct > total) throw std::invalid_argument("binomial_pvalue: correct > total");
    if (chance <= 0.0 || chance >= 1.0) {
        throw std::invalid_argument("binomial_pvalue: chance must be in (0,1)");
    }
    if (correct == 0) return 1.0;

    const double log_p = std::log(chance);
    const double log_q = std::log1p(-chance);
    const double log_n_fact = std::lgamma(static_cast<double>(total) + 1.0);

    // log-sum-exp over i = correct..total
    double max_term = -INFINITY;
    std::vector<double> terms;
    terms.reserve(total - correct + 1);
    for (std::size_t i = correct; i <= total; ++i) {
        const double di = static_cast<double>(i);
        const double term = log_n_fact - std::lgamma(di + 1.0) -
                            std::lgamma(static_cast<double>(total - i) + 1.0) + di * log_p +
                            static_cast<double>(total - i) * log_q;
        terms.push_back(term);
        if (term > max_term) max_term = term;
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    const double p = std::exp(max_term) * sum;
    return p > 1.0 ? 1.0 : p;
}

ZScore ZScore::fit(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("ZScore::fit: empty dataset");
    const std::size_t arity = rows.front().size();
    ZScore z;
    z.mean.assign(arity, 0.0);
    z.stddev.assign(arity, 0.0);
    for (const auto& r : rows) {
        if (r.size() != arity) throw std::invalid_argument("ZScore::fit: ragged rows");
        for (std::size_t k = 0; k < arity; ++k) z.mean[k] += r[k];
    }
    for (auto& m : z.mean) m /= static_cast<double>(rows.size());
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < arity; ++k) {
            const double d = r[k] - z.mean[k];
            z.stddev[k] += d * d;
        }
    }
    constexpr double kMinStddev = 1e-12;
    for (auto& s : z.stddev) {
        s = std::sqrt(s / static_cast<double>(rows.size()));
        if (s < kMinStddev) s = 1.0;  // constant attribute maps to 0
    }
    return z;
}

std::vector<double> ZScore::apply(const std::vector<double>& row) const {
    if (row.size() != mean.size()) throw std::invalid_argument("ZScore::apply: arity mismatch");
    std::vector<double> out(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) out[k] = (row[k] - mean[k]) / stddev[k];
    return out;
}

}  // namespace stylofluct
