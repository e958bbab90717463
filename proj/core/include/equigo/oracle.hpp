#pragma once

#include <map>
#include <string>
#include <vector>

#include "equigo/cyclotomic.hpp"

namespace equigo {

struct GradedEigenEntry {
    int degree = 0;
    Cyclotomic eigenvalue;
};

/// Basis of a graded space with an endomorphism, one eigenvalue per basis vector.
using GradedEigenSpace = std::vector<GradedEigenEntry>;

/// Signed graded trace on the k-th graded-symmetric power, keyed by total degree.
/// Even-degree basis vectors repeat freely, odd-degree ones at most once, and
/// each odd factor contributes a sign.  Zero entries are omitted.
std::map<int, Cyclotomic> brute_symmetric_power(const GradedEigenSpace& space, int k);

/// Checks that [t^n z^i] prod_{i <= n_max} 1/(1 - z^{i-1} t^i) equals p(n, n - i)
/// and P(i, n - i) for all n <= n_max.  On failure the first mismatch is written
/// to *diagnostic when given.
bool cell_count_identity_check(int n_max, std::string* diagnostic = nullptr);

} // namespace equigo
