#include "equigo/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "equigo/error.hpp"
#include "equigo/goettsche.hpp"
#include "equigo/kummer.hpp"
#include "equigo/oracle.hpp"

namespace equigo {

bool SuiteReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

std::size_t SuiteReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; }));
}

std::string SuiteReport::describe() const {
    std::ostringstream os;
    for (const auto& r : rows) os << (r.pass ? "PASS " : "FAIL ") << r.label << (r.detail.empty() ? "" : ": ") << r.detail << '\n';
    os << suite << ": " << pass_count() << "/" << rows.size() << " rows pass\n";
    return os.str();
}

const std::vector<std::pair<int, EtaQuotient>>& k3_eta_table() {
    static const std::vector<std::pair<int, EtaQuotient>> table = {
        {1, EtaQuotient({{1, -24}}, 1)},
        {2, EtaQuotient({{1, -8}, {2, -8}}, 1)},
        {3, EtaQuotient({{1, -6}, {3, -6}}, 1)},
        {4, EtaQuotient({{1, -4}, {2, -2}, {4, -4}}, 1)},
        {5, EtaQuotient({{1, -4}, {5, -4}}, 1)},
        {6, EtaQuotient({{1, -2}, {2, -2}, {3, -2}, {6, -2}}, 1)},
        {7, EtaQuotient({{1, -3}, {7, -3}}, 1)},
        {8, EtaQuotient({{1, -2}, {2, -1}, {4, -1}, {8, -2}}, 1)},
    };
    return table;
}

const std::vector<std::pair<int, EtaQuotient>>& abelian_eta_table() {
    static const std::vector<std::pair<int, EtaQuotient>> table = {
        {1, EtaQuotient({}, 0)},
        {2, EtaQuotient({{1, -16}, {2, 8}}, 0)},
        {3, EtaQuotient({{1, -9}, {3, 3}}, 0)},
        {4, EtaQuotient({{1, -4}, {2, -6}, {4, 4}}, 0)},
        {6, EtaQuotient({{1, -1}, {2, -4}, {3, -5}, {6, 4}}, 0)},
    };
    return table;
}

std::vector<std::string> suite_names() { return {"k3-table", "abelian-table", "symmetric-oracle", "kummer-oracle", "cells", "e2"}; }

int default_suite_depth(std::string_view suite) {
    if (suite == "k3-table" || suite == "abelian-table") return 40;
    if (suite == "symmetric-oracle") return 4;
    if (suite == "kummer-oracle") return 6;
    if (suite == "cells") return 20;
    if (suite == "e2") return 10;
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

namespace {

std::map<int, Rational> order_traces(const TraceVector& tv) {
    std::map<int, Rational> c;
    for (int k = 0; k < tv.order; ++k) {
        const int d = std::gcd(k, tv.order);
        if (!tv.values[k].is_rational()) throw Error(Errc::InvalidArgument, "Euler traces must be rational");
        c.emplace(d == 0 ? tv.order : d, tv.values[k].rational());
    }
    return c;
}

SuiteRow eta_row(const std::string& label, const SurfaceHodgeCharacter& s, const EtaQuotient& expected, int T) {
    SuiteRow row{label + " " + render(expected), false, ""};
    try {
        const TraceVector tv = euler_traces(s);
        const EtaQuotient derived = eta_from_order_traces(s.order, order_traces(tv));
        if (!(derived == expected)) {
            row.detail = "derived quotient " + render(derived);
            return row;
        }
        const int k = s.order == 1 ? 0 : 1;
        const TruncatedSeries got = euler_trace_series(tv, T).slice(k);
        if (auto diff = first_difference(got, expand(expected, T))) {
            row.detail = "trace series vs eta expansion at " + diff->describe();
            return row;
        }
        row.pass = true;
        row.detail = "agrees through t^" + std::to_string(T);
    } catch (const Error& e) {
        row.detail = e.what();
    }
    return row;
}

SuiteReport table_suite(const std::string& name, bool k3, int T) {
    SuiteReport report{name, {}};
    for (const auto& [n, eq] : k3 ? k3_eta_table() : abelian_eta_table()) {
        const std::string label = (k3 ? "k3:" : "abelian:") + std::to_string(n);
        report.rows.push_back(eta_row(label, preset_surface(label), eq, T));
    }
    return report;
}

SuiteReport symmetric_suite(int max_k) {
    SuiteReport report{"symmetric-oracle", {}};
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dim_dist(1, 4);
    std::uniform_int_distribution<int> degree_dist(0, 4);
    std::uniform_int_distribution<int> order_dist(1, 6);
    std::size_t agreed = 0;
    std::string first_mismatch;
    constexpr int kCases = 100;
    for (int c = 0; c < kCases; ++c) {
        GradedEigenSpace space;
        std::map<int, std::vector<Cyclotomic>> graded;
        const int dim = dim_dist(rng);
        for (int i = 0; i < dim; ++i) {
            const int order = order_dist(rng);
            const int degree = degree_dist(rng);
            Cyclotomic lambda = Cyclotomic::zeta(order, std::uniform_int_distribution<int>(0, order - 1)(rng));
            space.push_back({degree, lambda});
            graded[degree].push_back(std::move(lambda));
        }
        const TruncatedSeries series = symmetric_power_series(graded, max_k);
        std::string mismatch;
        for (int k = 0; k <= max_k && mismatch.empty(); ++k) {
            UVPoly expected;
            for (const auto& [deg, value] : brute_symmetric_power(space, k)) expected.ref(deg, 0) = value;
            if (!(expected == series.layer(k))) mismatch = "case " + std::to_string(c) + ", k=" + std::to_string(k);
        }
        if (mismatch.empty()) ++agreed;
        else if (first_mismatch.empty()) first_mismatch = mismatch;
    }
    report.rows.push_back({"random graded spaces", agreed == kCases,
                           std::to_string(agreed) + "/" + std::to_string(kCases) + " agree for k <= " +
                               std::to_string(max_k) + (first_mismatch.empty() ? "" : "; first mismatch " + first_mismatch)});
    return report;
}

SuiteReport kummer_oracle_suite(int n_max) {
    SuiteReport report{"kummer-oracle", {}};
    const TruncatedSeries slice = kummer_slice(abelian_symplectic_preset(1), 0, n_max);
    for (int n = 1; n <= n_max; ++n) {
        SuiteRow row{"n=" + std::to_string(n), false, ""};
        try {
            const UVPoly closed = kummer_hodge_closed(n);
            TruncatedSeries a(0);
            TruncatedSeries b(0);
            a.mutable_layer(0) = slice.layer(n);
            b.mutable_layer(0) = closed;
            if (auto diff = first_difference(a, b)) {
                row.detail = "theorem series vs closed formula at u^" + std::to_string(diff->where.u) + " v^" +
                             std::to_string(diff->where.v) + ": " + diff->lhs.to_string() + " != " + diff->rhs.to_string();
            } else {
                row.pass = true;
                row.detail = "e(K_n) = " + closed.sum_of_coefficients().to_string();
            }
        } catch (const Error& e) {
            row.detail = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

SuiteReport cells_suite(int n_max) {
    std::string diagnostic;
    const bool ok = cell_count_identity_check(n_max, &diagnostic);
    return {"cells", {{"n <= " + std::to_string(n_max), ok, ok ? "identity holds" : diagnostic}}};
}

SuiteReport e2_suite(int n_max) {
    SuiteReport report{"e2", {}};
    const auto cmp = kummer_euler_numbers(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const auto& e = cmp.euler[n - 1];
        const auto& q = cmp.e2_side[n - 1];
        const bool match = abs(e) == abs(q);
        report.rows.push_back({"n=" + std::to_string(n), match, "e(K_n) = " + e.get_str() + ", E2 side " + q.get_str()});
    }
    const std::string sign = cmp.global_sign == 0 ? "none" : (cmp.global_sign > 0 ? "+1" : "-1");
    report.rows.push_back({"global sign", cmp.global_sign != 0, "e(K_n) = (" + sign + ") * E2 side"});
    return report;
}

} // namespace

SuiteReport run_suite(std::string_view suite, int depth) {
    const int fallback = default_suite_depth(suite);
    if (depth < 0) depth = fallback;
    if (suite == "k3-table") return table_suite("k3-table", true, depth);
    if (suite == "abelian-table") return table_suite("abelian-table", false, depth);
    if (suite == "symmetric-oracle") return symmetric_suite(depth);
    if (suite == "kummer-oracle") return kummer_oracle_suite(std::max(depth, 1));
    if (suite == "cells") return cells_suite(std::max(depth, 1));
    return e2_suite(std::max(depth, 1));
}

} // namespace equigo
