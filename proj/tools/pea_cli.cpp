#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "pea/pea.hpp"

namespace {

struct InputOptions {
    std::string path;
    bool has_header = false;
    std::size_t label_col = 0;  // 1-based; 0 = none
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "Input CSV file")->required();
    cmd->add_flag("--has-header", in.has_header, "Skip the first line");
    cmd->add_option("--label-col", in.label_col,
                    "1-based column holding labels; stripped before fitting")
        ->check(CLI::PositiveNumber);
}

pea::CsvData load_input(const InputOptions& in) {
    std::optional<std::size_t> label;
    if (in.label_col > 0) label = in.label_col - 1;
    pea::CsvData data = pea::load_csv(in.path, in.has_header, label);
    pea::validate(data.X, "'" + in.path + "'");
    return data;
}

struct FitOptions {
    double lambda_lo = 0.05;
    double lambda_hi = 20.0;
    double tol = 1e-8;
    int max_iter = 500;
    std::uint64_t seed = 0;
};

void add_fit_options(CLI::App* cmd, FitOptions& fo) {
    cmd->add_option("--lambda", fo.lambda_lo, "Lower weight bound (lambda)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--Lambda", fo.lambda_hi, "Upper weight bound (Lambda)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", fo.tol, "Relative objective-change tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iter", fo.max_iter, "Iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", fo.seed, "Random seed")->capture_default_str();
}

pea::FitConfig to_fit_config(const FitOptions& fo) {
    pea::FitConfig cfg;
    cfg.lambda_lo = fo.lambda_lo;
    cfg.lambda_hi = fo.lambda_hi;
    cfg.tol = fo.tol;
    cfg.max_iter = fo.max_iter;
    cfg.seed = fo.seed;
    return cfg;
}

int run_fit(const InputOptions& in, const FitOptions& fo, std::size_t screen_top,
            const std::string& output) {
    pea::CsvData data = load_input(in);
    pea::DataMatrix X = std::move(data.X);
    if (screen_top > 0) X = pea::screen_variance(X, screen_top).X;
    pea::FitConfig cfg = to_fit_config(fo);
    pea::FitReport report = pea::fit(X, cfg);

    pea::ModelDocument doc;
    doc.kind = "pea-fit";
    doc.ellipses = {report.params};
    doc.lambda_lo = cfg.lambda_lo;
    doc.lambda_hi = cfg.lambda_hi;
    doc.objective = report.objective_trace.back();
    doc.iterations = report.iterations;
    doc.converged = report.converged;
    doc.seed = cfg.seed;
    pea::save_model(output, doc);

    std::cout << "{\"objective\": " << pea::format_g17(doc.objective)
              << ", \"iterations\": " << doc.iterations
              << ", \"converged\": " << (doc.converged ? "true" : "false") << "}\n";
    return 0;
}

int run_cluster(const InputOptions& in, const FitOptions& fo, std::size_t k,
                int max_outer, int n_init, int inner_passes, std::size_t screen_top,
                const std::string& output, const std::string& assignments_path) {
    pea::CsvData data = load_input(in);
    pea::DataMatrix X = std::move(data.X);
    if (screen_top > 0) X = pea::screen_variance(X, screen_top).X;

    pea::ClusterConfig cfg;
    cfg.k = k;
    cfg.fit = to_fit_config(fo);
    cfg.max_outer_iter = max_outer;
    cfg.n_init = n_init;
    cfg.inner_passes = inner_passes;
    cfg.seed = fo.seed;
    pea::ClusterResult result = pea::cluster(X, cfg);

    pea::ModelDocument doc;
    doc.kind = "pea-cluster";
    doc.ellipses = result.model.ellipses;
    doc.lambda_lo = cfg.fit.lambda_lo;
    doc.lambda_hi = cfg.fit.lambda_hi;
    doc.objective = result.objective_trace.back();
    doc.iterations = result.outer_iterations;
    doc.converged = result.outer_iterations < cfg.max_outer_iter;
    doc.seed = cfg.seed;
    pea::save_model(output, doc);
    pea::write_assignments_csv(assignments_path, result.model.assignments);

    std::cout << "{\"objective\": " << pea::format_g17(doc.objective)
              << ", \"outer_iterations\": " << result.outer_iterations << "}\n";
    return 0;
}

int run_kmeans(const InputOptions& in, std::size_t k, int n_init, int max_iter,
               std::uint64_t seed, const std::string& assignments_path) {
    pea::CsvData data = load_input(in);
    pea::KmeansResult result = pea::lloyd(data.X, k, n_init, max_iter, seed);
    pea::write_assignments_csv(assignments_path, result.assignments);
    std::cout << "{\"wcss\": " << pea::format_g17(result.wcss) << "}\n";
    return 0;
}

int run_gen_motivating(std::uint64_t seed, const std::string& output) {
    pea::LabeledData data = pea::gen_motivating(seed);
    pea::write_data_csv(output, data.X, &data.labels);
    std::cout << "{\"rows\": " << data.X.n << ", \"cols\": " << data.X.p
              << ", \"labels\": true}\n";
    return 0;
}

int run_gen_arc(const pea::ArcSpec& spec, std::uint64_t seed, const std::string& output) {
    pea::DataMatrix X = pea::gen_arc(spec, seed);
    pea::write_data_csv(output, X);
    std::cout << "{\"rows\": " << X.n << ", \"cols\": " << X.p << ", \"labels\": false}\n";
    return 0;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<long long> load_last_column_labels(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pea::DataError("cannot open '" + path + "'");
    std::unordered_map<std::string, long long> ids;
    std::vector<long long> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::size_t comma = line.rfind(',');
        std::string field = trim(comma == std::string::npos ? line : line.substr(comma + 1));
        auto [it, inserted] = ids.try_emplace(field, static_cast<long long>(ids.size()));
        labels.push_back(it->second);
    }
    if (labels.empty()) throw pea::DataError("'" + path + "' has no data rows");
    return labels;
}

int run_eval(const std::string& pred_path, const std::string& truth_path) {
    std::vector<long long> pred = load_last_column_labels(pred_path);
    std::vector<long long> truth = load_last_column_labels(truth_path);
    if (pred.size() != truth.size())
        throw pea::DataError("label vectors differ in length: " + std::to_string(pred.size()) +
                             " vs " + std::to_string(truth.size()));
    pea::PartitionMetrics m = pea::compute_metrics(pred, truth);
    std::cout << "{\"nmi\": " << pea::format_g17(m.nmi) << ", \"ari\": " << pea::format_g17(m.ari)
              << ", \"cer\": " << pea::format_g17(m.cer) << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Principal Elliptical Analysis: ellipsoid fitting and clustering"};
    app.require_subcommand(1);

    InputOptions in;
    FitOptions fo;
    std::size_t k = 2;
    std::size_t screen_top = 0;
    int max_outer = 100, n_init = 10, inner_passes = 1, km_max_iter = 100;
    std::string output, assignments_path, pred_path, truth_path;

    CLI::App* fit_cmd = app.add_subcommand("fit", "Fit one ellipsoid by block-coordinate descent");
    add_input_options(fit_cmd, in);
    add_fit_options(fit_cmd, fo);
    fit_cmd->add_option("--screen-top", screen_top, "Keep only the M highest-variance columns")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--output", output, "Model JSON path")->required();

    CLI::App* cluster_cmd = app.add_subcommand("cluster", "k-ellipse clustering");
    add_input_options(cluster_cmd, in);
    add_fit_options(cluster_cmd, fo);
    cluster_cmd->add_option("-k,--clusters", k, "Number of clusters")
        ->required()
        ->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--max-outer", max_outer, "Outer iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--n-init", n_init, "k-means initialization restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--inner-passes", inner_passes,
                            "BCD passes per cluster per outer iteration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--screen-top", screen_top, "Keep only the M highest-variance columns")
        ->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--output", output, "Model JSON path")->required();
    cluster_cmd->add_option("--assignments", assignments_path, "Assignments CSV path")->required();

    CLI::App* kmeans_cmd = app.add_subcommand("kmeans", "Plain k-means baseline");
    add_input_options(kmeans_cmd, in);
    kmeans_cmd->add_option("-k,--clusters", k, "Number of clusters")
        ->required()
        ->check(CLI::PositiveNumber);
    kmeans_cmd->add_option("--n-init", n_init, "Restarts")->check(CLI::PositiveNumber)->capture_default_str();
    kmeans_cmd->add_option("--max-iter", km_max_iter, "Lloyd iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    kmeans_cmd->add_option("--seed", fo.seed, "Random seed")->capture_default_str();
    kmeans_cmd->add_option("--assignments", assignments_path, "Assignments CSV path")->required();

    CLI::App* gen_cmd = app.add_subcommand("gen", "Synthetic datasets");
    gen_cmd->require_subcommand(1);
    CLI::App* gen_motivating_cmd =
        gen_cmd->add_subcommand("motivating", "Two z-scored noisy arcs, 100 points each");
    gen_motivating_cmd->add_option("--seed", fo.seed, "Random seed")->capture_default_str();
    gen_motivating_cmd->add_option("--output", output, "Output CSV path")->required();

    pea::ArcSpec arc;
    arc.center = {0.0, 0.0};
    arc.radii = {1.0, 1.0};
    arc.theta_hi = 6.283185307179586;
    arc.n = 100;
    CLI::App* gen_arc_cmd = gen_cmd->add_subcommand("arc", "Noisy ellipse arc");
    gen_arc_cmd->add_option("--center", arc.center, "Arc center (two values)")->expected(2);
    gen_arc_cmd->add_option("--radii", arc.radii, "Arc radii (two values)")->expected(2);
    gen_arc_cmd->add_option("--theta-lo", arc.theta_lo, "Angle range start")->capture_default_str();
    gen_arc_cmd->add_option("--theta-hi", arc.theta_hi, "Angle range end")->capture_default_str();
    gen_arc_cmd->add_option("--n", arc.n, "Sample count")->check(CLI::PositiveNumber)->capture_default_str();
    gen_arc_cmd->add_option("--noise", arc.noise_sd, "Gaussian noise sd")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    gen_arc_cmd->add_option("--seed", fo.seed, "Random seed")->capture_default_str();
    gen_arc_cmd->add_option("--output", output, "Output CSV path")->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "NMI/ARI/CER between two labelings");
    eval_cmd->add_option("--pred", pred_path, "Predicted labels CSV (last column used)")->required();
    eval_cmd->add_option("--truth", truth_path, "Ground-truth labels CSV (last column used)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(in, fo, screen_top, output);
        if (cluster_cmd->parsed())
            return run_cluster(in, fo, k, max_outer, n_init, inner_passes, screen_top, output,
                               assignments_path);
        if (kmeans_cmd->parsed())
            return run_kmeans(in, k, n_init, km_max_iter, fo.seed, assignments_path);
        if (gen_cmd->parsed()) {
            if (gen_motivating_cmd->parsed()) return run_gen_motivating(fo.seed, output);
            return run_gen_arc(arc, fo.seed, output);
        }
        if (eval_cmd->parsed()) return run_eval(pred_path, truth_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
