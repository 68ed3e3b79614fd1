#include "stylofluct/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stylofluct {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<std::string> LabeledDataset::class_set() const {
    std::vector<std::string> classes;
    for (const auto& r : rows) {
        if (std::find(classes.begin(), classes.end(), r.label) == classes.end()) {
            classes.push_back(r.label);
        }
    }
    return classes;
}

void LabeledDataset::validate(bool require_two_classes) const {
    for (const auto& r : rows) {
        if (r.features.size() != arity()) {
            throw std::invalid_argument("dataset row '" + r.book_id + "' has " +
                                        std::to_string(r.features.size()) + " features, expected " +
                                        std::to_string(arity()));
        }
    }
    if (require_two_classes && class_set().size() < 2) {
        throw std::invalid_argument("dataset needs >= 2 distinct classes");
    }
}

LabeledDataset read_feature_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open feature CSV: " + path);

    LabeledDataset ds;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (!have_header) {
            if (fields.size() < 3 || fields[0] != "book" || fields[1] != "author") {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected header 'book,author,...'");
            }
            ds.attribute_names.assign(fields.begin() + 2, fields.end());
            have_header = true;
            continue;
        }
        if (fields.size() != ds.arity() + 2) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(ds.arity() + 2) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        DataRow row;
        row.book_id = fields[0];
        row.label = fields[1];
        row.features.reserve(ds.arity());
        for (std::size_t k = 2; k < fields.size(); ++k) {
            try {
                std::size_t used = 0;
                row.features.push_back(std::stod(fields[k], &used));
                if (used != fields[k].size()) throw std::invalid_argument(fields[k]);
            } catch (const std::exception&) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": field " +
                                         std::to_string(k + 1) + " is not a number: '" +
                                         fields[k] + "'");
            }
        }
        ds.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error(path + ": missing header row");
    return ds;
}

void write_feature_csv(const std::string& path, const LabeledDataset& dataset,
                       const std::string& header_comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write feature CSV: " + path);
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    out << "book,author";
    for (const auto& a : dataset.attribute_names) out << ',' << a;
    out << '\n';
    for (const auto& r : dataset.rows) {
        out << r.book_id << ',' << r.label;
        for (double v : r.features) out << ',' << format_double(v);
        out << '\n';
    }
}

}  // namespace stylofluct
