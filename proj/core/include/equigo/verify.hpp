#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equigo/eta.hpp"

namespace equigo {

struct SuiteRow {
    std::string label;
    bool pass = false;
    /// First failing coefficient or a short summary.
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteRow> rows;

    bool passed() const;
    std::size_t pass_count() const;
    std::string describe() const;
};

/// Published eta-quotient rows for symplectic K3 (N = 1..8) and abelian (N = 1, 2, 3, 4, 6) actions.
const std::vector<std::pair<int, EtaQuotient>>& k3_eta_table();
const std::vector<std::pair<int, EtaQuotient>>& abelian_eta_table();

/// k3-table, abelian-table, symmetric-oracle, kummer-oracle, cells, e2.
std::vector<std::string> suite_names();
/// Default depth per suite: t-truncation, largest n, or largest symmetric power.
int default_suite_depth(std::string_view suite);
/// Runs one suite to the given depth (default_suite_depth when depth < 0).
/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view suite, int depth = -1);

} // namespace equigo
