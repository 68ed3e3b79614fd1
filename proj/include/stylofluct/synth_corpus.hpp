#ifndef STYLOFLUCT_SYNTH_CORPUS_HPP
#define STYLOFLUCT_SYNTH_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stylofluct {

// Seeded generator for a small benchmark corpus with author-distinct
// statistics: each synthetic author has its own function-word usage
// profile, per-word burstiness, Zipf exponent over a shared content
// vocabulary and topic-drift rate. Deterministic for a fixed seed.
struct SynthCorpusSpec {
    std::size_t authors = 4;
    std::size_t books_per_author = 5;
    std::size_t tokens_per_book = 30000;
    std::uint64_t seed = 42;
};

// Generates one book's text (with punctuation, capitalization and line
// breaks so the tokenizer has real work to do).
std::string synth_book_text(const SynthCorpusSpec& spec, std::size_t author,
                            std::size_t book);

// Writes <dir>/<authorName>/<bookName>.txt for the whole corpus; creates
// directories as needed. Returns the author directory names.
std::vector<std::string> write_synth_corpus(const std::string& dir,
                                            const SynthCorpusSpec& spec);

}  // namespace stylofluct

#endif
