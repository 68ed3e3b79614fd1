#include "stylofluct/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;

namespace stylofluct {

CorpusListing list_corpus(const std::string& root) {
    if (!fs::is_directory(root)) {
        throw std::runtime_error("corpus root is not a directory: " + root);
    }
    CorpusListing listing;
    bool any_author = false;
    for (const auto& author_entry : fs::directory_iterator(root)) {
        if (!author_entry.is_directory()) continue;
        any_author = true;
        const std::string author = author_entry.path().filename().string();
        bool any_book = false;
        for (const auto& book_entry : fs::directory_iterator(author_entry.path())) {
            if (!book_entry.is_regular_file()) continue;
            any_book = true;
            listing.books.push_back(BookRef{author, book_entry.path().stem().string(),
                                            book_entry.path().string()});
        }
        if (!any_book) listing.empty_authors.push_back(author);
    }
    if (!any_author) throw std::runtime_error("corpus root has no author directories: " + root);

    std::sort(listing.books.begin(), listing.books.end(), [](const BookRef& a, const BookRef& b) {
        if (a.author != b.author) return a.author < b.author;
        return a.book < b.book;
    });
    std::sort(listing.empty_authors.begin(), listing.empty_authors.end());
    return listing;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TokenStream load_book_tokens(const BookRef& ref) {
    TokenStream stream = tokenize(read_text_file(ref.path), ref.author + "/" + ref.book);
    return stream;
}

}  // namespace stylofluct
