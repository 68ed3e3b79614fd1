#ifndef STYLOFLUCT_CORPUS_HPP
#define STYLOFLUCT_CORPUS_HPP

#include <string>
#include <vector>

#include "stylofluct/text_pipeline.hpp"

namespace stylofluct {

// One file inside <corpusRoot>/<author>/.
struct BookRef {
    std::string author;
    std::string book;  // file stem
    std::string path;
};

// Authors with no readable books are kept with an empty book list so
// callers can warn about them.
struct CorpusListing {
    std::vector<BookRef> books;              // sorted by (author, book)
    std::vector<std::string> empty_authors;  // sorted
};

// Scans <root>/<author>/<book>.txt. Throws std::runtime_error when the root
// does not exist or contains no author directories.
CorpusListing list_corpus(const std::string& root);

std::string read_text_file(const std::string& path);

// Raw lowercase token stream of one book (no filtering).
TokenStream load_book_tokens(const BookRef& ref);

}  // namespace stylofluct

#endif
