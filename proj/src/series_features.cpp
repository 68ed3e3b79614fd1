#include "stylofluct/series_features.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "stylofluct/cooc_network.hpp"

namespace stylofluct {

namespace {

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::string measurement_name(Measurement m) {
    switch (m) {
        case Measurement::VocabSize: return "M";
        case Measurement::MeanClustering: return "meanClustering";
        case Measurement::MeanPathLen: return "meanPathLen";
        case Measurement::MeanBetweenness: return "meanBetweenness";
        case Measurement::MeanAccess2: return "meanAccess2";
        case Measurement::MeanAccess3: return "meanAccess3";
    }
    throw std::logic_error("unknown measurement");
}

MetricSeries metric_series(const std::vector<TokenStream>& windows, Measurement m) {
    if (windows.empty()) throw std::invalid_argument("metric_series requires >= 1 window");
    MetricSeries series{m, {}};
    series.values.reserve(windows.size());
    for (const auto& win : windows) {
        const CoocNetwork net = CoocNetwork::build(win, 1);
        switch (m) {
            case Measurement::VocabSize:
                series.values.push_back(static_cast<double>(net.vocab_size()));
                break;
            case Measurement::MeanClustering:
                series.values.push_back(mean(clustering(net)));
                break;
            case Measurement::MeanPathLen:
                series.values.push_back(mean(shortest_paths(net).mean_dist));
                break;
            case Measurement::MeanBetweenness:
                series.values.push_back(mean(betweenness(net)));
                break;
            case Measurement::MeanAccess2:
                series.values.push_back(mean(accessibility(net, 2)));
                break;
            case Measurement::MeanAccess3:
                series.values.push_back(mean(accessibility(net, 3)));
                break;
        }
    }
    return series;
}

std::vector<MetricSeries> all_metric_series(const std::vector<TokenStream>& windows) {
    if (windows.empty()) throw std::invalid_argument("metric_series requires >= 1 window");
    std::vector<MetricSeries> out;
    out.reserve(kAllMeasurements.size());
    for (Measurement m : kAllMeasurements) out.push_back(MetricSeries{m, {}});
    for (auto& s : out) s.values.reserve(windows.size());

    for (const auto& win : windows) {
        const CoocNetwork net = CoocNetwork::build(win, 1);
        out[0].values.push_back(static_cast<double>(net.vocab_size()));
        out[1].values.push_back(mean(clustering(net)));
        out[2].values.push_back(mean(shortest_paths(net).mean_dist));
        out[3].values.push_back(mean(betweenness(net)));
        out[4].values.push_back(mean(accessibility(net, 2)));
        out[5].values.push_back(mean(accessibility(net, 3)));
    }
    return out;
}

std::vector<std::complex<double>> dft(const std::vector<double>& series) {
    const std::size_t p = series.size();
    std::vector<std::complex<double>> out(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < p; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) *
                                 static_cast<double>(k + 1) / static_cast<double>(p);
            acc += series[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[j] = acc;
    }
    return out;
}

std::array<double, 4> spectral_features(const MetricSeries& series) {
    if (series.values.size() < 4) {
        throw std::invalid_argument("series for " + measurement_name(series.measurement) +
                                    " has only " + std::to_string(series.values.size()) +
                                    " windows; need >= 4 for spectral features");
    }
    const auto spectrum = dft(series.values);
    return {std::abs(spectrum[0]), std::abs(spectrum[1]), std::abs(spectrum[2]),
            std::abs(spectrum[3])};
}

std::vector<std::string> spectral_feature_names() {
    std::vector<std::string> names;
    names.reserve(kAllMeasurements.size() * 4);
    for (Measurement m : kAllMeasurements) {
        for (int j = 0; j < 4; ++j) {
            names.push_back("F(" + measurement_name(m) + ")_" + std::to_string(j));
        }
    }
    return names;
}

std::vector<double> spectral_feature_vector(const std::vector<TokenStream>& windows) {
    std::vector<double> features;
    features.reserve(kAllMeasurements.size() * 4);
    for (const auto& series : all_metric_series(windows)) {
        for (double f : spectral_features(series)) features.push_back(f);
    }
    return features;
}

}  // namespace stylofluct
