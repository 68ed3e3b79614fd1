#ifndef STYLOFLUCT_SERIES_FEATURES_HPP
#define STYLOFLUCT_SERIES_FEATURES_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "stylofluct/text_pipeline.hpp"

namespace stylofluct {

// Per-window network measurements tracked along a book.
enum class Measurement {
    VocabSize,        // M
    MeanClustering,   // <C>
    MeanPathLen,      // <l>
    MeanBetweenness,  // <B>
    MeanAccess2,      // <alpha^(2)>
    MeanAccess3,      // <alpha^(3)>
};

inline constexpr std::array<Measurement, 6> kAllMeasurements = {
    Measurement::VocabSize,      Measurement::MeanClustering, Measurement::MeanPathLen,
    Measurement::MeanBetweenness, Measurement::MeanAccess2,    Measurement::MeanAccess3,
};

std::string measurement_name(Measurement m);

struct MetricSeries {
    Measurement measurement;
    std::vector<double> values;  // x_1..x_P, one per window
};

// Builds the d=1 network of each window and records the node-mean of the
// requested measurement (or M itself).
MetricSeries metric_series(const std::vector<TokenStream>& windows, Measurement m);

// All six series from one pass over the windows (shares the per-window
// network and metric computations).
std::vector<MetricSeries> all_metric_series(const std::vector<TokenStream>& windows);

// Direct DFT: F_j = sum_k x_k * exp(-2*pi*i*j*k / P). O(P^2), P is small.
std::vector<std::complex<double>> dft(const std::vector<double>& series);

// Magnitudes of the first four DFT components. Throws std::invalid_argument
// when the series has fewer than 4 points.
std::array<double, 4> spectral_features(const MetricSeries& series);

// Deterministic feature column names: measurement-major, component-minor,
// e.g. "F(M)_0" .. "F(meanAccess3)_3". 24 names total.
std::vector<std::string> spectral_feature_names();

// Full 24-entry feature vector for one book's windows.
std::vector<double> spectral_feature_vector(const std::vector<TokenStream>& windows);

}  // namespace stylofluct

#endif
