#ifndef STYLOFLUCT_INTERMITTENCY_HPP
#define STYLOFLUCT_INTERMITTENCY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stylofluct/text_pipeline.hpp"

namespace stylofluct {

// Gap sequence of one word in one book: gaps[0] = tokens before the first
// occurrence, gaps[f] = tokens after the last, interior entries = tokens
// between consecutive occurrences. len(gaps) == f+1 and sum(gaps) + f == N.
struct RecurrenceSeries {
    std::string word;
    std::size_t occurrences = 0;          // f
    std::vector<std::size_t> gaps;        // f+1 entries
    std::size_t stream_length = 0;        // N
};

// Computed on the tokenized, lowercased, UNFILTERED stream (function words
// are the subject, so stopwords stay in). Throws when the word is absent.
RecurrenceSeries recurrence_series(const TokenStream& stream, const std::string& word);

// I = dT/<T> where <T> = (N+1)/(f+1) and dT is the population standard
// deviation of the recurrence intervals (gap + 1 per entry, whose mean is
// exactly <T>). 0 for perfectly even spacing. Requires f >= 1.
double intermittency(const RecurrenceSeries& series);

// n most frequent tokens across the corpus, frequency-descending, ties
// broken lexicographically. Returns fewer than n when the vocabulary is
// smaller (callers may warn).
std::vector<std::string> top_frequent_words(const std::vector<TokenStream>& corpus,
                                            std::size_t n = 100);

struct IntermittencyVector {
    std::string book_id;
    std::vector<double> values;     // one per word, 0 when missing
    std::vector<bool> missing;      // word absent or occurring once
};

IntermittencyVector intermittency_vector(const TokenStream& book,
                                         const std::vector<std::string>& words);

// Pearson r between occurrence count f and intermittency I across the words
// of a book with f >= min_occurrences. Requires >= 1000 tokens and >= 10
// qualifying words; throws otherwise (also when either variable is constant).
double intermittency_frequency_correlation(const TokenStream& book,
                                           std::size_t min_occurrences = 5);

}  // namespace stylofluct

#endif
