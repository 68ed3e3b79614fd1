#ifndef STYLOFLUCT_COMMANDS_HPP
#define STYLOFLUCT_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "stylofluct/config.hpp"

namespace stylofluct::commands {

// Each command is a pure function of (config, corpus bytes, seed); double
// runs produce byte-identical files. All outputs land in config.output_dir
// and embed the config hash and seed. Diagnostics go to `log`. Data errors
// raise std::runtime_error / std::invalid_argument; the CLI maps those to
// exit code 2.

// Writes manifest.json listing books, authors and token counts.
void ingest(const RunConfig& config, std::ostream& log);

// Writes spectral_W<W>.csv per window size (24 feature columns). Books
// shorter than 4*W filtered tokens are excluded with a logged reason.
void spectral(const RunConfig& config, std::ostream& log);

// Writes intermittency.csv (one I_<word> column per function word) and
// function_words.txt (the corpus-wide frequency ranking used).
void intermit(const RunConfig& config, std::ostream& log);

// Reads a feature CSV; writes report_<kind>.json and confusion_<kind>.txt
// per classifier kind plus classify_summary.txt with the best kind.
void classify(const RunConfig& config, const std::string& feature_csv, std::ostream& log);

// Writes rank.tsv: attributes by information gain, descending.
void rank(const RunConfig& config, const std::string& feature_csv, std::ostream& log);

// Writes pca.csv (book,author,pc1,pc2), pca_variance.json and pca.svg.
void pca(const RunConfig& config, const std::string& feature_csv, std::ostream& log);

}  // namespace stylofluct::commands

#endif
