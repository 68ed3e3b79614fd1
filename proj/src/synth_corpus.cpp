#include "stylofluct/synth_corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

namespace fs = std::filesystem;

namespace stylofluct {

namespace {

// Function vocabulary: common English glue words. Author styles differ in
// how often and how evenly each of these is used.
const std::vector<std::string> kFunctionWords = {
    "the", "of",   "and",  "a",    "to",   "in",   "he",   "was",  "that", "it",
    "his", "her",  "with", "as",   "i",    "had",  "for",  "at",   "by",   "on",
    "not", "she",  "but",  "be",   "they", "this", "from", "or",   "have", "an",
    "you", "were", "all",  "we",   "when", "there", "can",  "more", "if",   "no",
    "out", "so",   "up",   "said", "what", "who",  "them", "some", "could", "him"};

const char* kOnsets[] = {"b", "br", "c", "cr", "d", "dr", "f", "fl", "g", "gl",
                         "h", "j",  "k", "l",  "m", "n",  "p", "pr", "qu", "r",
                         "s", "st", "t", "tr", "v", "w",  "z", "sh", "ch", "th"};
const char* kNuclei[] = {"a", "e", "i", "o", "u", "ai", "ea", "ou", "io", "oa"};
const char* kCodas[] = {"", "n", "r", "s", "t", "l", "m", "nd", "rt", "ck"};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = a * 0x9e3779b97f4a7c15ull + b + 0x7f4a7c15ull;
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    return h;
}

// Shared pseudo-word content vocabulary, rank-ordered.
std::vector<std::string> content_vocabulary(std::uint64_t seed, std::size_t size) {
    std::mt19937_64 rng(mix(seed, 0xc0ffee));
    std::vector<std::string> vocab;
    vocab.reserve(size);
    std::uniform_int_distribution<std::size_t> on(0, std::size(kOnsets) - 1);
    std::uniform_int_distribution<std::size_t> nu(0, std::size(kNuclei) - 1);
    std::uniform_int_distribution<std::size_t> co(0, std::size(kCodas) - 1);
    std::uniform_int_distribution<int> syllables(2, 4);
    while (vocab.size() < size) {
        std::string w;
        const int n = syllables(rng);
        for (int s = 0; s < n; ++s) {
            w += kOnsets[on(rng)];
            w += kNuclei[nu(rng)];
            if (s + 1 == n) w += kCodas[co(rng)];
        }
        if (std::find(kFunctionWords.begin(), kFunctionWords.end(), w) == kFunctionWords.end() &&
            std::find(vocab.begin(), vocab.end(), w) == vocab.end()) {
            vocab.push_back(std::move(w));
        }
    }
    return vocab;
}

struct AuthorStyle {
    double zipf_exponent;
    double function_prob;             // share of function tokens
    std::vector<double> func_weight;  // base sampling weight per function word
    std::vector<double> burst;        // per-word high/low rate ratio
    std::size_t topic_span;           // tokens before the topic set drifts
    double topic_prob;
};

AuthorStyle author_style(std::uint64_t seed, std::size_t author) {
    std::mt19937_64 rng(mix(seed, 1000 + author));
    AuthorStyle st;
    st.zipf_exponent = 1.02 + 0.11 * static_cast<double>(author);
    st.function_prob = 0.40 + 0.035 * static_cast<double>(author);
    st.topic_span = 300 + 250 * author;
    st.topic_prob = 0.30 + 0.04 * static_cast<double>(author);
    std::normal_distribution<double> lognorm(0.0, 0.9);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    st.func_weight.reserve(kFunctionWords.size());
    st.burst.reserve(kFunctionWords.size());
    for (std::size_t i = 0; i < kFunctionWords.size(); ++i) {
        // frequent words keep a Zipf-ish base so "the","of","and" stay on top
        const double base = 1.0 / std::pow(static_cast<double>(i + 1), 0.85);
        st.func_weight.push_back(base * std::exp(lognorm(rng)));
        const double u = uni(rng);
        st.burst.push_back(1.0 + 7.0 * u * u);
    }
    return st;
}

std::size_t sample_discrete(const std::vector<double>& cumulative, double total,
                            std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, total);
    const double x = uni(rng);
    return static_cast<std::size_t>(
        std::lower_bound(cumulative.begin(), cumulative.end(), x) - cumulative.begin());
}

}  // namespace

std::string synth_book_text(const SynthCorpusSpec& spec, std::size_t author, std::size_t book) {
    if (author >= spec.authors || book >= spec.books_per_author) {
        throw std::invalid_argument("synth_book_text: index out of range");
    }
    constexpr std::size_t kVocabSize = 4000;
    constexpr std::size_t kTopicSize = 25;

    const auto vocab = content_vocabulary(spec.seed, kVocabSize);
    const AuthorStyle style = author_style(spec.seed, author);
    std::mt19937_64 rng(mix(spec.seed, 2000 + author * 97 + book));

    // zipf cumulative weights over the shared vocabulary
    std::vector<double> zipf_cum(kVocabSize);
    double zipf_total = 0.0;
    for (std::size_t r = 0; r < kVocabSize; ++r) {
        zipf_total += 1.0 / std::pow(static_cast<double>(r + 1), style.zipf_exponent);
        zipf_cum[r] = zipf_total;
    }

    // two-state burst process per function word
    std::vector<bool> high(kFunctionWords.size(), false);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> func_pick(0, kFunctionWords.size() - 1);
    for (auto&& state : high) state = uni(rng) < 0.5;

    std::vector<std::size_t> topic(kTopicSize);
    auto resample_topic = [&]() {
        for (auto& t : topic) t = sample_discrete(zipf_cum, zipf_total, rng);
    };
    resample_topic();

    std::string text;
    text.reserve(spec.tokens_per_book * 8);
    std::uniform_int_distribution<int> sentence_len(8, 18);
    int left_in_sentence = sentence_len(rng);
    int line_len = 0;
    bool sentence_start = true;

    std::vector<double> func_cum(kFunctionWords.size());
    for (std::size_t tok = 0; tok < spec.tokens_per_book; ++tok) {
        if (tok % style.topic_span == 0 && tok > 0) resample_topic();
        // occasionally toggle one word's burst state
        if (uni(rng) < 0.25) {
            const std::size_t w = func_pick(rng);
            high[w] = !high[w];
        }

        std::string word;
        if (uni(rng) < style.function_prob) {
            double total = 0.0;
            for (std::size_t w = 0; w < kFunctionWords.size(); ++w) {
                total += style.func_weight[w] * (high[w] ? style.burst[w] : 1.0 / style.burst[w]);
                func_cum[w] = total;
            }
            word = kFunctionWords[sample_discrete(func_cum, total, rng)];
        } else if (uni(rng) < style.topic_prob) {
            word = vocab[topic[static_cast<std::size_t>(uni(rng) * kTopicSize) % kTopicSize]];
        } else {
            word = vocab[sample_discrete(zipf_cum, zipf_total, rng)];
        }

        if (sentence_start) {
            word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
            sentence_start = false;
        } else {
            text += ' ';
            ++line_len;
        }
        text += word;
        ++line_len;

        if (--left_in_sentence <= 0) {
            text += '.';
            left_in_sentence = sentence_len(rng);
            sentence_start = true;
            if (line_len > 10) {
                text += '\n';
                line_len = 0;
            } else {
                text += ' ';
            }
        } else if (uni(rng) < 0.06) {
            text += ',';
        }
    }
    text += '\n';
    return text;
}

std::vector<std::string> write_synth_corpus(const std::string& dir, const SynthCorpusSpec& spec) {
    const std::vector<std::string> author_names = {"ashby",   "brennan", "calloway", "durrell",
                                                   "ellison", "fairfax", "grantham", "holloway"};
    if (spec.authors > author_names.size()) {
        throw std::invalid_argument("synth corpus supports at most " +
                                    std::to_string(author_names.size()) + " authors");
    }
    std::vector<std::string> used;
    for (std::size_t a = 0; a < spec.authors; ++a) {
        const fs::path author_dir = fs::path(dir) / author_names[a];
        fs::create_directories(author_dir);
        for (std::size_t b = 0; b < spec.books_per_author; ++b) {
            const fs::path path = author_dir / (author_names[a] + "_" + std::to_string(b + 1) +
                                                ".txt");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            out << synth_book_text(spec, a, b);
        }
        used.push_back(author_names[a]);
    }
    return used;
}

}  // namespace stylofluct
