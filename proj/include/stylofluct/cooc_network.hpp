#ifndef STYLOFLUCT_COOC_NETWORK_HPP
#define STYLOFLUCT_COOC_NETWORK_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylofluct/text_pipeline.hpp"

namespace stylofluct {

// Undirected simple graph over the distinct word types of a token stream.
// Nodes are indexed 0..M-1 in order of first appearance; no self-loops,
// no duplicate edges.
class CoocNetwork {
public:
    // Connects tokens at stream distance <= d (d=1: adjacent tokens only).
    // Throws std::invalid_argument on an empty stream or d < 1.
    static CoocNetwork build(const TokenStream& stream, std::size_t d = 1);

    // Explicit graph over n synthetic nodes ("n0".."n<n-1>"); self-loops and
    // duplicates are rejected with std::invalid_argument.
    static CoocNetwork from_edges(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t vocab_size() const { return words_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const std::string& word(std::size_t i) const { return words_[i]; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
    std::size_t degree(std::size_t i) const { return adj_[i].size(); }
    bool has_edge(std::size_t a, std::size_t b) const;

    // Index of a word, or npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& w) const;

    // Sorted edge list "word1\tword2" with word1 < word2 lexicographically,
    // lines sorted; for debugging and golden tests.
    std::string edge_list_dump() const;

private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;  // each list sorted ascending
    std::size_t edge_count_ = 0;
};

// Per-node local clustering: C_i = 2*c_i / (k_i*(k_i-1)), 0 when k_i < 2.
std::vector<double> clustering(const CoocNetwork& net);

struct ShortestPathResult {
    // dist[i][j]: BFS hop distance, npos-like SIZE_MAX when unreachable.
    std::vector<std::vector<std::size_t>> dist;
    // Mean finite distance from node i to the other nodes of its component;
    // 0 for isolated nodes (flagged below).
    std::vector<double> mean_dist;
    std::vector<bool> isolated;
    double global_mean = 0.0;     // mean over all ordered reachable pairs
    double reachable_fraction = 0.0;  // reachable ordered pairs / M*(M-1)
};

ShortestPathResult shortest_paths(const CoocNetwork& net);

// Brandes betweenness over unordered pairs, raw (unnormalized) path counts.
std::vector<double> betweenness(const CoocNetwork& net);

// Accessibility at walk length h: exp of the entropy of the h-step
// random-walk distribution started at each node. Isolated nodes get 1.
std::vector<double> accessibility(const CoocNetwork& net, std::size_t h);

}  // namespace stylofluct

#endif
