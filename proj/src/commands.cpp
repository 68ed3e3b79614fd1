#include "stylofluct/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "stylofluct/corpus.hpp"
#include "stylofluct/cross_validation.hpp"
#include "stylofluct/dataset.hpp"
#include "stylofluct/info_gain.hpp"
#include "stylofluct/intermittency.hpp"
#include "stylofluct/pca.hpp"
#include "stylofluct/series_features.hpp"
#include "stylofluct/svg.hpp"
#include "stylofluct/text_pipeline.hpp"

namespace fs = std::filesystem;

namespace stylofluct::commands {

namespace {

std::string provenance(const RunConfig& config) {
    return "config=" + config.hash() + " seed=" + std::to_string(config.seed);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

void ensure_output_dir(const RunConfig& config) {
    fs::create_directories(config.output_dir);
}

std::string out_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.output_dir) / name).string();
}

StopwordList load_stops(const RunConfig& config) {
    return config.stopword_file.empty() ? StopwordList{} : load_stopword_file(config.stopword_file);
}

LemmaDictionary load_lemmas(const RunConfig& config) {
    return config.lemma_file.empty() ? LemmaDictionary{} : load_lemma_file(config.lemma_file);
}

// Raw token streams for every book, sorted corpus order; unreadable files
// are reported and skipped.
struct LoadedBook {
    BookRef ref;
    TokenStream raw;  // unfiltered lowercase tokens
};

std::vector<LoadedBook> load_corpus(const RunConfig& config, std::ostream& log) {
    const CorpusListing listing = list_corpus(config.corpus_root);
    for (const auto& a : listing.empty_authors) {
        log << "warning: author directory '" << a << "' has no books\n";
    }
    std::vector<LoadedBook> books;
    for (const auto& ref : listing.books) {
        try {
            books.push_back(LoadedBook{ref, load_book_tokens(ref)});
        } catch (const std::exception& e) {
            log << "error: skipping " << ref.path << ": " << e.what() << "\n";
        }
    }
    return books;
}

double fmt_roundtrip(double v) { return v; }

}  // namespace

void ingest(const RunConfig& config, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const StopwordList stops = load_stops(config);
    const LemmaDictionary lemmas = load_lemmas(config);

    const CorpusListing listing = list_corpus(config.corpus_root);
    nlohmann::json manifest;
    manifest["configHash"] = config.hash();
    manifest["seed"] = config.seed;
    manifest["books"] = nlohmann::json::array();
    manifest["emptyAuthors"] = listing.empty_authors;
    for (const auto& a : listing.empty_authors) {
        log << "warning: author directory '" << a << "' has no books\n";
    }
    for (const auto& ref : listing.books) {
        try {
            const TokenStream raw = load_book_tokens(ref);
            const TokenStream filtered = lemmatize(remove_stopwords(raw, stops), lemmas);
            manifest["books"].push_back({{"author", ref.author},
                                         {"book", ref.book},
                                         {"rawTokens", raw.size()},
                                         {"filteredTokens", filtered.size()}});
        } catch (const std::exception& e) {
            log << "error: skipping " << ref.path << ": " << e.what() << "\n";
        }
    }
    write_file(out_path(config, "manifest.json"), manifest.dump(2) + "\n");
    log << "wrote " << out_path(config, "manifest.json") << " ("
        << manifest["books"].size() << " books)\n";
}

void spectral(const RunConfig& config, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const StopwordList stops = load_stops(config);
    const LemmaDictionary lemmas = load_lemmas(config);
    const auto books = load_corpus(config, log);

    for (std::size_t w : config.window_sizes) {
        LabeledDataset ds;
        ds.attribute_names = spectral_feature_names();
        std::size_t excluded = 0;
        for (const auto& b : books) {
            const TokenStream filtered = lemmatize(remove_stopwords(b.raw, stops), lemmas);
            if (filtered.size() < 4 * w) {
                log << "excluded " << b.ref.author << "/" << b.ref.book << " at W=" << w
                    << ": " << filtered.size() << " filtered tokens < " << 4 * w << "\n";
                ++excluded;
                continue;
            }
            const auto windows = window_split(filtered, WindowSpec{w});
            DataRow row;
            row.book_id = b.ref.book;
            row.label = b.ref.author;
            row.features = spectral_feature_vector(windows);
            ds.rows.push_back(std::move(row));
        }
        const std::string path = out_path(config, "spectral_W" + std::to_string(w) + ".csv");
        write_feature_csv(path, ds, provenance(config) + " W=" + std::to_string(w));
        log << "wrote " << path << " (" << ds.rows.size() << " books, " << excluded
            << " excluded)\n";
    }
}

void intermit(const RunConfig& config, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const auto books = load_corpus(config, log);
    if (books.empty()) throw std::runtime_error("no readable books in corpus");

    std::vector<TokenStream> streams;
    streams.reserve(books.size());
    for (const auto& b : books) streams.push_back(b.raw);
    const auto words = top_frequent_words(streams, config.function_word_count);
    if (words.size() < config.function_word_count) {
        log << "warning: corpus has only " << words.size() << " distinct tokens, requested "
            << config.function_word_count << "\n";
    }

    std::string word_list = "# " + provenance(config) + "\n";
    for (const auto& w : words) word_list += w + "\n";
    write_file(out_path(config, "function_words.txt"), word_list);

    LabeledDataset ds;
    for (const auto& w : words) ds.attribute_names.push_back("I_" + w);
    for (const auto& b : books) {
        const auto vec = intermittency_vector(b.raw, words);
        DataRow row;
        row.book_id = b.ref.book;
        row.label = b.ref.author;
        row.features = vec.values;
        ds.rows.push_back(std::move(row));
    }
    const std::string path = out_path(config, "intermittency.csv");
    write_feature_csv(path, ds, provenance(config));
    log << "wrote " << path << " (" << ds.rows.size() << " books, " << words.size()
        << " words)\n";
}

void classify(const RunConfig& config, const std::string& feature_csv, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const LabeledDataset ds = read_feature_csv(feature_csv);
    if (ds.rows.size() < config.cv_folds) {
        throw std::runtime_error("feature CSV has " + std::to_string(ds.rows.size()) +
                                 " rows, fewer than cvFolds=" + std::to_string(config.cv_folds));
    }

    std::string best_kind;
    double best_accuracy = -1.0;
    double best_pvalue = 1.0;
    std::string summary = "# " + provenance(config) + " input=" + fs::path(feature_csv).filename().string() + "\n";
    for (const auto& kind_name : config.classifier_kinds) {
        const ModelKind kind = model_kind_from_name(kind_name);
        const CVReport report = cross_validate(ds, kind, config.cv_folds, config.seed);
        nlohmann::json j = nlohmann::json::parse(report.to_json());
        j["configHash"] = config.hash();
        write_file(out_path(config, "report_" + kind_name + ".json"), j.dump(2) + "\n");
        write_file(out_path(config, "confusion_" + kind_name + ".txt"),
                   "# " + provenance(config) + "\n" + report.confusion_table());
        char line[160];
        std::snprintf(line, sizeof(line), "%-14s accuracy=%.4f p=%.3g\n", kind_name.c_str(),
                      report.mean_accuracy, report.p_value);
        summary += line;
        log << line;
        if (report.mean_accuracy > best_accuracy) {
            best_accuracy = report.mean_accuracy;
            best_pvalue = report.p_value;
            best_kind = kind_name;
        }
    }
    char best_line[160];
    std::snprintf(best_line, sizeof(best_line), "best: %s accuracy=%.4f p=%.3g\n",
                  best_kind.c_str(), best_accuracy, best_pvalue);
    summary += best_line;
    log << best_line;
    write_file(out_path(config, "classify_summary.txt"), summary);
}

void rank(const RunConfig& config, const std::string& feature_csv, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const LabeledDataset ds = read_feature_csv(feature_csv);
    const auto ranked = rank_attributes(ds);

    std::string table = "# " + provenance(config) + "\nrank\tattribute\tinfoGain\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%zu\t%s\t%.6f\n", i + 1, ranked[i].name.c_str(),
                      ranked[i].gain);
        table += buf;
    }
    write_file(out_path(config, "rank.tsv"), table);
    log << "wrote " << out_path(config, "rank.tsv") << " (" << ranked.size()
        << " attributes)\n";
}

void pca(const RunConfig& config, const std::string& feature_csv, std::ostream& log) {
    config.validate();
    ensure_output_dir(config);
    const LabeledDataset ds = read_feature_csv(feature_csv);
    const PcaResult res = stylofluct::pca(ds, 2);

    std::string csv = "# " + provenance(config) + "\nbook,author,pc1,pc2\n";
    std::vector<ScatterPoint> points;
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        char buf[200];
        std::snprintf(buf, sizeof(buf), "%s,%s,%.17g,%.17g\n", ds.rows[i].book_id.c_str(),
                      ds.rows[i].label.c_str(), fmt_roundtrip(res.projections[i][0]),
                      fmt_roundtrip(res.projections[i][1]));
        csv += buf;
        points.push_back(ScatterPoint{res.projections[i][0], res.projections[i][1],
                                      ds.rows[i].label});
    }
    write_file(out_path(config, "pca.csv"), csv);

    nlohmann::json side;
    side["configHash"] = config.hash();
    side["seed"] = config.seed;
    side["explainedVarianceRatio"] = res.explained_variance_ratio;
    write_file(out_path(config, "pca_variance.json"), side.dump(2) + "\n");

    write_file(out_path(config, "pca.svg"), scatter_svg(points, "pc1", "pc2"));
    log << "wrote " << out_path(config, "pca.csv") << ", pca_variance.json, pca.svg\n";
}

}  // namespace stylofluct::commands
