#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stylofluct/commands.hpp"
#include "stylofluct/config.hpp"

namespace {

struct CliOptions {
    std::string config_file;
    stylofluct::RunConfig config;
    // per-flag overrides, applied after the config file
    std::string corpus_root, stopword_file, lemma_file, output_dir;
    std::vector<std::size_t> window_sizes;
    std::vector<std::string> classifier_kinds;
    std::int64_t function_word_count = -1;
    std::int64_t cv_folds = -1;
    std::int64_t seed = -1;

    stylofluct::RunConfig resolve() const {
        stylofluct::RunConfig cfg = config_file.empty()
                                        ? stylofluct::RunConfig{}
                                        : stylofluct::RunConfig::from_json_file(config_file);
        if (!corpus_root.empty()) cfg.corpus_root = corpus_root;
        if (!stopword_file.empty()) cfg.stopword_file = stopword_file;
        if (!lemma_file.empty()) cfg.lemma_file = lemma_file;
        if (!output_dir.empty()) cfg.output_dir = output_dir;
        if (!window_sizes.empty()) cfg.window_sizes = window_sizes;
        if (!classifier_kinds.empty()) cfg.classifier_kinds = classifier_kinds;
        if (function_word_count >= 0) cfg.function_word_count = static_cast<std::size_t>(function_word_count);
        if (cv_folds >= 0) cfg.cv_folds = static_cast<std::size_t>(cv_folds);
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        return cfg;
    }
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_file, "JSON config file");
    cmd->add_option("--corpus", opt.corpus_root, "corpus root directory (author subdirs)");
    cmd->add_option("--stopwords", opt.stopword_file, "stopword file, one word per line");
    cmd->add_option("--lemmas", opt.lemma_file, "lemma TSV (inflected<TAB>canonical)");
    cmd->add_option("--out", opt.output_dir, "output directory");
    cmd->add_option("--window-sizes", opt.window_sizes, "window sizes W");
    cmd->add_option("--classifiers", opt.classifier_kinds,
                    "classifier kinds (knn naiveBayes decisionTree perceptron)");
    cmd->add_option("--function-words", opt.function_word_count, "function word count");
    cmd->add_option("--folds", opt.cv_folds, "cross-validation folds");
    cmd->add_option("--seed", opt.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fluctuation-based authorship attribution pipeline"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string feature_csv;

    auto* ingest = app.add_subcommand("ingest", "scan the corpus and write manifest.json");
    auto* spectral = app.add_subcommand(
        "spectral", "per-window network metric series -> spectral feature CSV per W");
    auto* intermit = app.add_subcommand(
        "intermit", "function-word intermittency feature CSV");
    auto* classify = app.add_subcommand("classify", "cross-validated classification report");
    auto* rank = app.add_subcommand("rank", "information-gain attribute ranking");
    auto* pca = app.add_subcommand("pca", "2-component projection: CSV + SVG scatter");
    for (auto* cmd : {ingest, spectral, intermit, classify, rank, pca}) {
        add_common_flags(cmd, opt);
    }
    for (auto* cmd : {classify, rank, pca}) {
        cmd->add_option("--features", feature_csv, "input feature CSV")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors -> 1
    }

    try {
        const stylofluct::RunConfig cfg = opt.resolve();
        if (ingest->parsed()) stylofluct::commands::ingest(cfg, std::cerr);
        if (spectral->parsed()) stylofluct::commands::spectral(cfg, std::cerr);
        if (intermit->parsed()) stylofluct::commands::intermit(cfg, std::cerr);
        if (classify->parsed()) stylofluct::commands::classify(cfg, feature_csv, std::cerr);
        if (rank->parsed()) stylofluct::commands::rank(cfg, feature_csv, std::cerr);
        if (pca->parsed()) stylofluct::commands::pca(cfg, feature_csv, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;  // data errors -> 2
    }
    return 0;
}
