#ifndef STYLOFLUCT_DATASET_HPP
#define STYLOFLUCT_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace stylofluct {

struct DataRow {
    std::string book_id;
    std::string label;  // author
    std::vector<double> features;
};

struct LabeledDataset {
    std::vector<std::string> attribute_names;
    std::vector<DataRow> rows;

    std::size_t arity() const { return attribute_names.size(); }
    // Distinct labels in first-appearance order.
    std::vector<std::string> class_set() const;
    // Throws std::invalid_argument on ragged rows or < 2 classes when
    // require_two_classes is set.
    void validate(bool require_two_classes = true) const;
};

// CSV layout: header "book,author,<attr1>,..."; leading '#' comment lines
// are skipped. Throws std::runtime_error with a line position on malformed
// input.
LabeledDataset read_feature_csv(const std::string& path);
void write_feature_csv(const std::string& path, const LabeledDataset& dataset,
                       const std::string& header_comment = "");

}  // namespace stylofluct

#endif
