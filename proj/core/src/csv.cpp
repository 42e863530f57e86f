#include "pea/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "pea/errors.hpp"
#include "pea/format.hpp"

namespace pea {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

double parse_number(const std::string& field, std::size_t line_no, std::size_t col_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw DataError("row " + std::to_string(line_no) + ", column " + std::to_string(col_no) +
                        ": cannot parse '" + field + "' as a number");
    if (!std::isfinite(value))
        throw DataError("row " + std::to_string(line_no) + ", column " + std::to_string(col_no) +
                        ": non-finite value");
    return value;
}

}  // namespace

CsvData load_csv(const std::string& path, bool has_header,
                 std::optional<std::size_t> label_column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");

    CsvData out;
    std::unordered_map<std::string, long long> label_ids;
    std::vector<std::vector<double>> rows;
    std::size_t expected_cols = 0;

    std::string line;
    std::size_t line_no = 0;
    bool skipped_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (has_header && !skipped_header) {
            skipped_header = true;
            continue;
        }
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_fields(line);
        if (expected_cols == 0) {
            expected_cols = fields.size();
            if (label_column && *label_column >= expected_cols)
                throw DataError("label column " + std::to_string(*label_column + 1) +
                                " out of range; file has " + std::to_string(expected_cols) +
                                " columns");
        } else if (fields.size() != expected_cols) {
            throw DataError("row " + std::to_string(line_no) + ": expected " +
                            std::to_string(expected_cols) + " columns, got " +
                            std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(expected_cols - (label_column ? 1 : 0));
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (label_column && c == *label_column) {
                auto [it, inserted] =
                    label_ids.try_emplace(fields[c], static_cast<long long>(label_ids.size()));
                out.labels.push_back(it->second);
                continue;
            }
            row.push_back(parse_number(fields[c], line_no, c + 1));
        }
        rows.push_back(std::move(row));
    }

    if (rows.empty()) throw DataError("'" + path + "' has no data rows");
    std::size_t p = rows[0].size();
    if (p == 0) throw DataError("'" + path + "' has no feature columns");
    out.X = DataMatrix(rows.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t l = 0; l < p; ++l) out.X.at(i, l) = rows[i][l];
    out.has_labels = label_column.has_value();
    return out;
}

void write_data_csv(const std::string& path, const DataMatrix& X,
                    const std::vector<long long>* labels) {
    if (labels && labels->size() != X.n)
        throw std::invalid_argument("write_data_csv: label count mismatch");
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw DataError("cannot write '" + path + "'");
    std::ostringstream body;
    for (std::size_t i = 0; i < X.n; ++i) {
        for (std::size_t l = 0; l < X.p; ++l) {
            if (l) body << ',';
            body << format_g17(X.at(i, l));
        }
        if (labels) body << ',' << (*labels)[i];
        body << '\n';
    }
    outf << body.str();
    if (!outf) throw DataError("write failed for '" + path + "'");
}

void write_assignments_csv(const std::string& path,
                           const std::vector<std::size_t>& assignments) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw DataError("cannot write '" + path + "'");
    std::ostringstream body;
    for (std::size_t i = 0; i < assignments.size(); ++i)
        body << (i + 1) << ',' << assignments[i] << '\n';
    outf << body.str();
    if (!outf) throw DataError("write failed for '" + path + "'");
}

}  // namespace pea
