#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pea/types.hpp"

namespace pea {

struct CsvData {
    DataMatrix X;
    std::vector<long long> labels;  // filled when a label column was requested
    bool has_labels = false;
};

// Comma-separated numeric rows (RFC-4180 subset: no quoting). label_column is
// 0-based; that column may hold arbitrary text and is dictionary-encoded by
// first appearance. Errors carry 1-based line and column positions.
CsvData load_csv(const std::string& path, bool has_header,
                 std::optional<std::size_t> label_column = std::nullopt);

// Rows of %.17g features; when labels are given they form a trailing column.
void write_data_csv(const std::string& path, const DataMatrix& X,
                    const std::vector<long long>* labels = nullptr);

// One "row_index,cluster_index" line per sample, both 1-based.
void write_assignments_csv(const std::string& path,
                           const std::vector<std::size_t>& assignments);

}  // namespace pea
