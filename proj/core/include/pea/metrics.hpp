#pragma once

#include <vector>

namespace pea {

struct PartitionMetrics {
    double nmi = 0.0;
    double ari = 0.0;
    double cer = 0.0;
};

// Adjusted Rand Index from the contingency table. Labels are arbitrary
// integers; only their equivalence classes matter. When the adjustment
// denominator is 0 (both partitions place every pair identically) the value
// is 1.0. Requires n >= 2.
double ari(const std::vector<long long>& a, const std::vector<long long>& b);

// Normalized mutual information with geometric-mean normalization and natural
// logs: I(a;b) / sqrt(H(a) H(b)). Both entropies zero -> 1; exactly one
// zero -> 0. Requires n >= 1.
double nmi(const std::vector<long long>& a, const std::vector<long long>& b);

// Clustering error rate: the fraction of the n(n-1)/2 point pairs whose
// co-membership differs between the partitions. Requires n >= 2.
double cer(const std::vector<long long>& a, const std::vector<long long>& b);

PartitionMetrics compute_metrics(const std::vector<long long>& a,
                                 const std::vector<long long>& b);

}  // namespace pea
