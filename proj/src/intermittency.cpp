#include "stylofluct/intermittency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "stylofluct/stats.hpp"

namespace stylofluct {

RecurrenceSeries recurrence_series(const TokenStream& stream, const std::string& word) {
    RecurrenceSeries series;
    series.word = word;
    series.stream_length = stream.size();

    std::size_t since_last = 0;
    for (const auto& t : stream.tokens) {
        if (t == word) {
            series.gaps.push_back(since_last);
            ++series.occurrences;
            since_last = 0;
        } else {
            ++since_last;
        }
    }
    if (series.occurrences == 0) {
        throw std::invalid_argument("word '" + word + "' does not occur in stream '" +
                                    stream.source_id + "'");
    }
    series.gaps.push_back(since_last);  // tail gap after the last occurrence
    return series;
}

double intermittency(const RecurrenceSeries& series) {
    const std::size_t f = series.occurrences;
    if (f < 1) throw std::invalid_argument("intermittency requires >= 1 occurrence");

    // Recurrence intervals measured as position differences: each gap of g
    // intermediary tokens is an interval of g+1, and the f+1 intervals sum
    // to N+1, so their mean is exactly <T> = (N+1)/(f+1).
    const double mean_t =
        (static_cast<double>(series.stream_length) + 1.0) / (static_cast<double>(f) + 1.0);
    double acc = 0.0;
    for (std::size_t g : series.gaps) {
        const double d = (static_cast<double>(g) + 1.0) - mean_t;
        acc += d * d;
    }
    const double delta_t = std::sqrt(acc / (static_cast<double>(f) + 1.0));
    return delta_t / mean_t;
}

std::vector<std::string> top_frequent_words(const std::vector<TokenStream>& corpus,
                                            std::size_t n) {
    if (corpus.empty()) throw std::invalid_argument("top_frequent_words: empty corpus");
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& book : corpus) {
        for (const auto& t : book.tokens) ++counts[t];
    }
    std::vector<std::pair<std::string, std::size_t>> entries(counts.begin(), counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > n) entries.resize(n);
    std::vector<std::string> words;
    words.reserve(entries.size());
    for (auto& [w, c] : entries) words.push_back(std::move(w));
    return words;
}

IntermittencyVector intermittency_vector(const TokenStream& book,
                                         const std::vector<std::string>& words) {
    IntermittencyVector vec;
    vec.book_id = book.source_id;
    vec.values.reserve(words.size());
    vec.missing.reserve(words.size());

    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& t : book.tokens) ++counts[t];

    for (const auto& w : words) {
        const auto it = counts.find(w);
        if (it == counts.end() || it->second < 2) {
            vec.values.push_back(0.0);
            vec.missing.push_back(true);
        } else {
            vec.values.push_back(intermittency(recurrence_series(book, w)));
            vec.missing.push_back(false);
        }
    }
    return vec;
}

double intermittency_frequency_correlation(const TokenStream& book,
                                           std::size_t min_occurrences) {
    if (book.size() < 1000) {
        throw std::invalid_argument("correlation scan requires >= 1000 tokens, got " +
                                    std::to_string(book.size()));
    }
    // single pass over the book: positions per word, then gaps
    std::map<std::string, std::vector<std::size_t>> positions;  // ordered for determinism
    for (std::size_t i = 0; i < book.size(); ++i) positions[book.tokens[i]].push_back(i);

    std::vector<double> freqs, inters;
    for (const auto& [w, pos] : positions) {
        const std::size_t f = pos.size();
        if (f < min_occurrences) continue;
        RecurrenceSeries series;
        series.word = w;
        series.occurrences = f;
        series.stream_length = book.size();
        series.gaps.reserve(f + 1);
        series.gaps.push_back(pos.front());
        for (std::size_t i = 1; i < f; ++i) series.gaps.push_back(pos[i] - pos[i - 1] - 1);
        series.gaps.push_back(book.size() - pos.back() - 1);
        freqs.push_back(static_cast<double>(f));
        inters.push_back(intermittency(series));
    }
    if (freqs.size() < 10) {
        throw std::invalid_argument("correlation scan needs >= 10 qualifying words, got " +
                                    std::to_string(freqs.size()));
    }
    return pearson(freqs, inters);
}

}  // namespace stylofluct
