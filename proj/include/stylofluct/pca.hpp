#ifndef STYLOFLUCT_PCA_HPP
#define STYLOFLUCT_PCA_HPP

#include <cstddef>
#include <vector>

#include "stylofluct/dataset.hpp"

namespace stylofluct {

struct PcaResult {
    std::vector<std::vector<double>> projections;  // rows x dims
    std::vector<double> explained_variance_ratio;  // one per kept component
    std::vector<double> eigenvalues;               // all, descending
    std::vector<std::vector<double>> components;   // kept eigenvectors (dims x arity)
};

// Z-scores the attributes, eigendecomposes the covariance matrix with cyclic
// Jacobi rotations (off-diagonal tolerance 1e-10), and projects onto the
// top-`dims` eigenvectors. Sign convention: the largest-magnitude loading of
// each component is positive. Throws on zero-variance data or dims > arity.
PcaResult pca(const LabeledDataset& dataset, std::size_t dims = 2);

// Symmetric eigendecomposition used by pca(); exposed for testing.
// Returns eigenvalues (descending) and matching eigenvectors (rows).
void jacobi_eigen(std::vector<std::vector<double>> matrix, std::vector<double>& eigenvalues,
                  std::vector<std::vector<double>>& eigenvectors, double tolerance = 1e-10);

}  // namespace stylofluct

#endif
