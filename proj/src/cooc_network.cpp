#include "stylofluct/cooc_network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stylofluct {

CoocNetwork CoocNetwork::build(const TokenStream& stream, std::size_t d) {
    if (stream.empty()) throw std::invalid_argument("cannot build network from empty stream");
    if (d < 1) throw std::invalid_argument("co-occurrence distance d must be >= 1");

    CoocNetwork net;
    std::vector<std::size_t> ids;
    ids.reserve(stream.size());
    for (const auto& t : stream.tokens) {
        auto [it, inserted] = net.index_.try_emplace(t, net.words_.size());
        if (inserted) net.words_.push_back(t);
        ids.push_back(it->second);
    }

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t off = 1; off <= d && i + off < ids.size(); ++off) {
            std::size_t a = ids[i], b = ids[i + off];
            if (a == b) continue;  // no self-loops
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    }

    net.adj_.resize(net.words_.size());
    for (const auto& [a, b] : edges) {
        net.adj_[a].push_back(b);
        net.adj_[b].push_back(a);
    }
    for (auto& nb : net.adj_) std::sort(nb.begin(), nb.end());
    net.edge_count_ = edges.size();
    return net;
}

CoocNetwork CoocNetwork::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    CoocNetwork net;
    for (std::size_t i = 0; i < n; ++i) {
        net.words_.push_back("n" + std::to_string(i));
        net.index_.emplace(net.words_.back(), i);
    }
    std::set<std::pair<std::size_t, std::size_t>> unique;
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("from_edges: node index out of range");
        if (a == b) throw std::invalid_argument("from_edges: self-loop rejected");
        if (!unique.emplace(std::min(a, b), std::max(a, b)).second) {
            throw std::invalid_argument("from_edges: duplicate edge rejected");
        }
    }
    net.adj_.resize(n);
    for (const auto& [a, b] : unique) {
        net.adj_[a].push_back(b);
        net.adj_[b].push_back(a);
    }
    for (auto& nb : net.adj_) std::sort(nb.begin(), nb.end());
    net.edge_count_ = unique.size();
    return net;
}

bool CoocNetwork::has_edge(std::size_t a, std::size_t b) const {
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t CoocNetwork::index_of(const std::string& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? npos : it->second;
}

std::string CoocNetwork::edge_list_dump() const {
    std::vector<std::string> lines;
    for (std::size_t a = 0; a < adj_.size(); ++a) {
        for (std::size_t b : adj_[a]) {
            if (a < b) {
                const std::string &wa = words_[a], &wb = words_[b];
                lines.push_back(wa < wb ? wa + "\t" + wb : wb + "\t" + wa);
            }
        }
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::vector<double> clustering(const CoocNetwork& net) {
    const std::size_t m = net.vocab_size();
    std::vector<double> c(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& nb = net.neighbors(i);
        const std::size_t k = nb.size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (net.has_edge(nb[a], nb[b])) ++links;
        c[i] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
    }
    return c;
}

ShortestPathResult shortest_paths(const CoocNetwork& net) {
    const std::size_t m = net.vocab_size();
    constexpr std::size_t INF = std::numeric_limits<std::size_t>::max();

    ShortestPathResult res;
    res.dist.assign(m, std::vector<std::size_t>(m, INF));
    res.mean_dist.assign(m, 0.0);
    res.isolated.assign(m, false);

    double total = 0.0;
    std::size_t reachable_pairs = 0;
    std::deque<std::size_t> queue;

    for (std::size_t s = 0; s < m; ++s) {
        auto& dist = res.dist[s];
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : net.neighbors(u)) {
                if (dist[v] == INF) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        double sum = 0.0;
        std::size_t reached = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == s || dist[j] == INF) continue;
            sum += static_cast<double>(dist[j]);
            ++reached;
        }
        if (reached == 0) {
            res.isolated[s] = true;
        } else {
            res.mean_dist[s] = sum / static_cast<double>(reached);
        }
        total += sum;
        reachable_pairs += reached;
    }

    res.global_mean = reachable_pairs == 0 ? 0.0 : total / static_cast<double>(reachable_pairs);
    res.reachable_fraction =
        m < 2 ? 0.0 : static_cast<double>(reachable_pairs) / (static_cast<double>(m) * (m - 1));
    return res;
}

std::vector<double> betweenness(const CoocNetwork& net) {
    // Brandes (2001); scores accumulated over unordered pairs.
    const std::size_t m = net.vocab_size();
    std::vector<double> bc(m, 0.0);

    std::vector<std::ptrdiff_t> dist(m);
    std::vector<double> sigma(m), delta(m);
    std::vector<std::vector<std::size_t>> preds(m);
    std::vector<std::size_t> order;
    order.reserve(m);
    std::deque<std::size_t> queue;

    for (std::size_t s = 0; s < m; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();
        queue.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (std::size_t v : net.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t w = *it;
            for (std::size_t u : preds[w]) {
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) bc[w] += delta[w];
        }
    }
    // each unordered pair was counted from both endpoints
    for (auto& b : bc) b /= 2.0;
    return bc;
}

std::vector<double> accessibility(const CoocNetwork& net, std::size_t h) {
    if (h < 1) throw std::invalid_argument("accessibility walk length must be >= 1");
    const std::size_t m = net.vocab_size();
    std::vector<double> alpha(m, 1.0);

    // Row i of P^h via h sparse vector-matrix products, where
    // P[u][v] = 1/degree(u) for v adjacent to u.
    std::vector<double> cur(m), next(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (net.degree(i) == 0) continue;  // isolated: alpha = 1 by convention
        std::fill(cur.begin(), cur.end(), 0.0);
        cur[i] = 1.0;
        for (std::size_t step = 0; step < h; ++step) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t u = 0; u < m; ++u) {
                if (cur[u] == 0.0) continue;
                const double share = cur[u] / static_cast<double>(net.degree(u));
                for (std::size_t v : net.neighbors(u)) next[v] += share;
            }
            cur.swap(next);
        }
        double entropy = 0.0;
        for (double p : cur) {
            if (p > 0.0) entropy -= p * std::log(p);
        }
        alpha[i] = std::exp(entropy);
    }
    return alpha;
}

}  // namespace stylofluct
