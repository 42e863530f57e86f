#include "pea/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pea/errors.hpp"
#include "pea/format.hpp"

namespace pea {

namespace {

void write_vector(std::ostream& out, const std::vector<double>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << format_g17(v[i]);
    }
    out << ']';
}

}  // namespace

void save_model(const std::string& path, const ModelDocument& doc) {
    if (doc.kind != "pea-fit" && doc.kind != "pea-cluster")
        throw std::invalid_argument("save_model: kind must be 'pea-fit' or 'pea-cluster'");
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema_version\": \"" << doc.schema_version << "\",\n";
    out << "  \"kind\": \"" << doc.kind << "\",\n";
    out << "  \"bounds\": {\"lambda\": " << format_g17(doc.lambda_lo)
        << ", \"Lambda\": " << format_g17(doc.lambda_hi) << "},\n";
    out << "  \"objective\": " << format_g17(doc.objective) << ",\n";
    out << "  \"iterations\": " << doc.iterations << ",\n";
    out << "  \"converged\": " << (doc.converged ? "true" : "false") << ",\n";
    out << "  \"seed\": " << doc.seed << ",\n";
    out << "  \"ellipses\": [\n";
    for (std::size_t j = 0; j < doc.ellipses.size(); ++j) {
        out << "    {\"mu\": ";
        write_vector(out, doc.ellipses[j].mu);
        out << ", \"w\": ";
        write_vector(out, doc.ellipses[j].w);
        out << '}' << (j + 1 < doc.ellipses.size() ? "," : "") << '\n';
    }
    out << "  ]\n";
    out << "}\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot write '" + path + "'");
    file << out.str();
    if (!file) throw DataError("write failed for '" + path + "'");
}

ModelDocument load_model(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DataError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("model parse error in '" + path + "': " + e.what());
    }
    try {
        ModelDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != "1")
            throw DataError("unsupported schema_version '" + doc.schema_version + "' in '" +
                            path + "'");
        doc.kind = j.at("kind").get<std::string>();
        if (doc.kind != "pea-fit" && doc.kind != "pea-cluster")
            throw DataError("unknown model kind '" + doc.kind + "' in '" + path + "'");
        doc.lambda_lo = j.at("bounds").at("lambda").get<double>();
        doc.lambda_hi = j.at("bounds").at("Lambda").get<double>();
        doc.objective = j.at("objective").get<double>();
        doc.iterations = j.at("iterations").get<long long>();
        doc.converged = j.at("converged").get<bool>();
        doc.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& e : j.at("ellipses")) {
            EllipseParams params;
            params.mu = e.at("mu").get<std::vector<double>>();
            params.w = e.at("w").get<std::vector<double>>();
            params.lambda_lo = doc.lambda_lo;
            params.lambda_hi = doc.lambda_hi;
            doc.ellipses.push_back(std::move(params));
        }
        if (doc.ellipses.empty()) throw DataError("model '" + path + "' has no ellipses");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("model field error in '" + path + "': " + e.what());
    }
}

}  // namespace pea
