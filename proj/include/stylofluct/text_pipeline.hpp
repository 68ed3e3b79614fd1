#ifndef STYLOFLUCT_TEXT_PIPELINE_HPP
#define STYLOFLUCT_TEXT_PIPELINE_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace stylofluct {

// Ordered sequence of normalized (lowercase) word tokens from one text.
struct TokenStream {
    std::vector<std::string> tokens;
    std::string source_id;
    std::size_t raw_length = 0;  // token count before any filtering

    std::size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }
};

struct StopwordList {
    std::unordered_set<std::string> words;

    bool contains(const std::string& w) const { return words.count(w) != 0; }
};

// inflected form -> canonical form; canonical forms are fixed points.
struct LemmaDictionary {
    std::unordered_map<std::string, std::string> mapping;

    const std::string& canonical(const std::string& w) const {
        auto it = mapping.find(w);
        return it == mapping.end() ? w : it->second;
    }
};

struct WindowSpec {
    std::size_t tokens_per_window;  // W, must be >= 2
};

// Maximal runs of letters, apostrophes kept when flanked by letters,
// everything lowercased. Digits and punctuation are discarded.
TokenStream tokenize(const std::string& raw_text, const std::string& source_id = "");

TokenStream remove_stopwords(const TokenStream& stream, const StopwordList& stops);

TokenStream lemmatize(const TokenStream& stream, const LemmaDictionary& dict);

// Splits into floor(len/W) consecutive non-overlapping windows of exactly W
// tokens; the trailing remainder is discarded. Throws std::invalid_argument
// when the stream is shorter than W or W < 2.
std::vector<TokenStream> window_split(const TokenStream& stream, const WindowSpec& spec);

StopwordList load_stopword_file(const std::string& path);
LemmaDictionary load_lemma_file(const std::string& path);

}  // namespace stylofluct

#endif
