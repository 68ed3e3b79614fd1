#include "stylofluct/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace stylofluct {

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config " + path + ": " + e.what());
    }

    static const std::set<std::string> known = {
        "corpusRoot", "stopwordFile", "lemmaFile",  "windowSizes", "functionWordCount",
        "classifierKinds", "cvFolds", "seed", "outputDir"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw std::runtime_error("config " + path + ": unknown field '" + key + "'");
    }

    RunConfig cfg;
    if (j.contains("corpusRoot")) cfg.corpus_root = j["corpusRoot"].get<std::string>();
    if (j.contains("stopwordFile")) cfg.stopword_file = j["stopwordFile"].get<std::string>();
    if (j.contains("lemmaFile")) cfg.lemma_file = j["lemmaFile"].get<std::string>();
    if (j.contains("windowSizes")) cfg.window_sizes = j["windowSizes"].get<std::vector<std::size_t>>();
    if (j.contains("functionWordCount")) cfg.function_word_count = j["functionWordCount"].get<std::size_t>();
    if (j.contains("classifierKinds")) cfg.classifier_kinds = j["classifierKinds"].get<std::vector<std::string>>();
    if (j.contains("cvFolds")) cfg.cv_folds = j["cvFolds"].get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("outputDir")) cfg.output_dir = j["outputDir"].get<std::string>();
    return cfg;
}

std::string RunConfig::to_json() const {
    nlohmann::json j;
    j["corpusRoot"] = corpus_root;
    j["stopwordFile"] = stopword_file;
    j["lemmaFile"] = lemma_file;
    j["windowSizes"] = window_sizes;
    j["functionWordCount"] = function_word_count;
    j["classifierKinds"] = classifier_kinds;
    j["cvFolds"] = cv_folds;
    j["seed"] = seed;
    j["outputDir"] = output_dir;
    return j.dump(2) + "\n";
}

std::string RunConfig::hash() const {
    // FNV-1a 64-bit over the canonical JSON text
    const std::string text = to_json();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void RunConfig::validate() const {
    namespace fs = std::filesystem;
    if (!corpus_root.empty() && !fs::is_directory(corpus_root)) {
        throw std::runtime_error("corpusRoot does not exist: " + corpus_root);
    }
    if (!stopword_file.empty() && !fs::is_regular_file(stopword_file)) {
        throw std::runtime_error("stopwordFile does not exist: " + stopword_file);
    }
    if (!lemma_file.empty() && !fs::is_regular_file(lemma_file)) {
        throw std::runtime_error("lemmaFile does not exist: " + lemma_file);
    }
    for (std::size_t w : window_sizes) {
        if (w < 2) throw std::runtime_error("window size must be >= 2");
    }
    if (cv_folds < 2) throw std::runtime_error("cvFolds must be >= 2");
}

}  // namespace stylofluct
