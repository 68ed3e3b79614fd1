#ifndef STYLOFLUCT_CONFIG_HPP
#define STYLOFLUCT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace stylofluct {

struct RunConfig {
    std::string corpus_root;
    std::string stopword_file;
    std::string lemma_file;
    std::vector<std::size_t> window_sizes = {500, 700, 900, 1100, 1300};
    std::size_t function_word_count = 100;
    std::vector<std::string> classifier_kinds = {"knn", "naiveBayes", "decisionTree",
                                                 "perceptron"};
    std::size_t cv_folds = 10;
    std::uint64_t seed = 1;
    std::string output_dir = "out";

    // Parses the JSON config file (field names: corpusRoot, stopwordFile,
    // lemmaFile, windowSizes, functionWordCount, classifierKinds, cvFolds,
    // seed, outputDir). Unknown fields are rejected.
    static RunConfig from_json_file(const std::string& path);
    std::string to_json() const;

    // Stable FNV-1a hash of the canonical JSON form; embedded in every
    // output artifact together with the seed.
    std::string hash() const;

    // Throws std::runtime_error when referenced paths are missing or a
    // window size is below 2.
    void validate() const;
};

}  // namespace stylofluct

#endif
