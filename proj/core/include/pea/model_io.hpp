#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pea/types.hpp"

namespace pea {

// Persisted fit/cluster model. save -> load -> save is byte-identical; all
// numbers are written with 17 significant digits.
struct ModelDocument {
    std::string schema_version = "1";
    std::string kind;  // "pea-fit" or "pea-cluster"
    std::vector<EllipseParams> ellipses;
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    double objective = 0.0;
    long long iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
};

void save_model(const std::string& path, const ModelDocument& doc);
ModelDocument load_model(const std::string& path);

}  // namespace pea
