#include "stylofluct/text_pipeline.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace stylofluct {

namespace {

bool is_letter(unsigned char c) { return std::isalpha(c) != 0; }

}  // namespace

TokenStream tokenize(const std::string& raw_text, const std::string& source_id) {
    TokenStream out;
    out.source_id = source_id;

    const std::size_t n = raw_text.size();
    std::string cur;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = static_cast<unsigned char>(raw_text[i]);
        if (is_letter(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (c == '\'' && !cur.empty() && i + 1 < n &&
                   is_letter(static_cast<unsigned char>(raw_text[i + 1]))) {
            // apostrophe kept only between letters
            cur.push_back('\'');
        } else if (!cur.empty()) {
            out.tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.tokens.push_back(std::move(cur));

    out.raw_length = out.tokens.size();
    return out;
}

TokenStream remove_stopwords(const TokenStream& stream, const StopwordList& stops) {
    TokenStream out;
    out.source_id = stream.source_id;
    out.raw_length = stream.raw_length;
    out.tokens.reserve(stream.tokens.size());
    for (const auto& t : stream.tokens) {
        if (!stops.contains(t)) out.tokens.push_back(t);
    }
    return out;
}

TokenStream lemmatize(const TokenStream& stream, const LemmaDictionary& dict) {
    TokenStream out;
    out.source_id = stream.source_id;
    out.raw_length = stream.raw_length;
    out.tokens.reserve(stream.tokens.size());
    for (const auto& t : stream.tokens) out.tokens.push_back(dict.canonical(t));
    return out;
}

std::vector<TokenStream> window_split(const TokenStream& stream, const WindowSpec& spec) {
    const std::size_t w = spec.tokens_per_window;
    if (w < 2) throw std::invalid_argument("window size must be >= 2");
    if (stream.size() < w) {
        throw std::invalid_argument("stream '" + stream.source_id + "' has " +
                                    std::to_string(stream.size()) +
                                    " tokens, too short for window size " + std::to_string(w));
    }
    const std::size_t count = stream.size() / w;
    std::vector<TokenStream> windows;
    windows.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        TokenStream win;
        win.source_id = stream.source_id + "#w" + std::to_string(j);
        win.tokens.assign(stream.tokens.begin() + static_cast<std::ptrdiff_t>(j * w),
                          stream.tokens.begin() + static_cast<std::ptrdiff_t>((j + 1) * w));
        win.raw_length = w;
        windows.push_back(std::move(win));
    }
    return windows;
}

StopwordList load_stopword_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    StopwordList stops;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        stops.words.insert(line);
    }
    return stops;
}

LemmaDictionary load_lemma_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lemma file: " + path);
    LemmaDictionary dict;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("lemma file " + path + ": missing tab on line " +
                                     std::to_string(lineno));
        }
        dict.mapping[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return dict;
}

}  // namespace stylofluct
