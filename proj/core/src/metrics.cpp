#include "pea/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace pea {

namespace {

struct Contingency {
    std::size_t n = 0;
    std::vector<std::size_t> row;            // class sizes of a
    std::vector<std::size_t> col;            // class sizes of b
    std::vector<std::size_t> cell;           // row-major joint counts
    std::size_t rows = 0, cols = 0;

    std::size_t at(std::size_t i, std::size_t j) const { return cell[i * cols + j]; }
};

std::vector<std::size_t> compact_ids(const std::vector<long long>& labels,
                                     std::size_t& classes) {
    std::unordered_map<long long, std::size_t> ids;
    std::vector<std::size_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
        out[i] = it->second;
    }
    classes = ids.size();
    return out;
}

Contingency build(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("metrics: label vectors differ in length");
    Contingency c;
    c.n = a.size();
    auto ia = compact_ids(a, c.rows);
    auto ib = compact_ids(b, c.cols);
    c.row.assign(c.rows, 0);
    c.col.assign(c.cols, 0);
    c.cell.assign(c.rows * c.cols, 0);
    for (std::size_t i = 0; i < c.n; ++i) {
        ++c.row[ia[i]];
        ++c.col[ib[i]];
        ++c.cell[ia[i] * c.cols + ib[i]];
    }
    return c;
}

double comb2(std::size_t m) { return 0.5 * static_cast<double>(m) * static_cast<double>(m - 1); }

}  // namespace

double ari(const std::vector<long long>& a, const std::vector<long long>& b) {
    Contingency c = build(a, b);
    if (c.n < 2) throw std::invalid_argument("ari: need at least two samples");
    double sum_cells = 0.0;
    for (std::size_t v : c.cell) sum_cells += comb2(v);
    double sum_a = 0.0;
    for (std::size_t v : c.row) sum_a += comb2(v);
    double sum_b = 0.0;
    for (std::size_t v : c.col) sum_b += comb2(v);
    double total = comb2(c.n);
    double expected = sum_a * sum_b / total;
    double maximum = 0.5 * (sum_a + sum_b);
    double denom = maximum - expected;
    if (denom == 0.0) return 1.0;
    return (sum_cells - expected) / denom;
}

double nmi(const std::vector<long long>& a, const std::vector<long long>& b) {
    Contingency c = build(a, b);
    if (c.n < 1) throw std::invalid_argument("nmi: need at least one sample");
    const double n = static_cast<double>(c.n);
    double ha = 0.0;
    for (std::size_t v : c.row) {
        if (v == 0) continue;
        double pr = static_cast<double>(v) / n;
        ha -= pr * std::log(pr);
    }
    double hb = 0.0;
    for (std::size_t v : c.col) {
        if (v == 0) continue;
        double pr = static_cast<double>(v) / n;
        hb -= pr * std::log(pr);
    }
    bool za = c.rows <= 1;
    bool zb = c.cols <= 1;
    if (za && zb) return 1.0;
    if (za || zb) return 0.0;
    double info = 0.0;
    for (std::size_t i = 0; i < c.rows; ++i) {
        for (std::size_t j = 0; j < c.cols; ++j) {
            std::size_t v = c.at(i, j);
            if (v == 0) continue;
            double pij = static_cast<double>(v) / n;
            double pi = static_cast<double>(c.row[i]) / n;
            double pj = static_cast<double>(c.col[j]) / n;
            info += pij * std::log(pij / (pi * pj));
        }
    }
    double value = info / std::sqrt(ha * hb);
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

double cer(const std::vector<long long>& a, const std::vector<long long>& b) {
    Contingency c = build(a, b);
    if (c.n < 2) throw std::invalid_argument("cer: need at least two samples");
    double sum_cells = 0.0;
    for (std::size_t v : c.cell) sum_cells += comb2(v);
    double sum_a = 0.0;
    for (std::size_t v : c.row) sum_a += comb2(v);
    double sum_b = 0.0;
    for (std::size_t v : c.col) sum_b += comb2(v);
    return (sum_a + sum_b - 2.0 * sum_cells) / comb2(c.n);
}

PartitionMetrics compute_metrics(const std::vector<long long>& a,
                                 const std::vector<long long>& b) {
    return PartitionMetrics{nmi(a, b), ari(a, b), cer(a, b)};
}

}  // namespace pea
