#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "equigo/error.hpp"
#include "equigo/goettsche.hpp"
#include "equigo/kummer.hpp"
#include "equigo/verify.hpp"
#include "render.hpp"

namespace {

using namespace equigo;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kDefaultMaxTrunc = 64;

struct JobConfig {
    std::string surface;
    int trunc = 10;
    std::string format = "pretty";
    std::optional<int> element;
    std::string output;
    bool euler = false;
    bool decompose = false;
    bool hodge_table = false;
};

struct VerifyConfig {
    std::string suite;
    int depth = -1;
};

int max_trunc() {
    const char* env = std::getenv("EQUIGO_MAX_TRUNC");
    if (env == nullptr || *env == '\0') return kDefaultMaxTrunc;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(env, &used);
        if (used != std::string(env).size() || cap < 0) throw std::invalid_argument(env);
        return cap;
    } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, std::string("EQUIGO_MAX_TRUNC must be a nonnegative integer, got '") + env + "'");
    }
}

void check_trunc(int trunc) {
    if (trunc < 0) throw Error(Errc::InvalidArgument, "--trunc must be nonnegative");
    const int cap = max_trunc();
    if (trunc > cap) {
        throw Error(Errc::InvalidArgument, "--trunc " + std::to_string(trunc) + " exceeds the cap " + std::to_string(cap) +
                                               " (raise EQUIGO_MAX_TRUNC)");
    }
}

SurfaceHodgeCharacter load_surface(const std::string& source) {
    if (is_preset_name(source)) return preset_surface(source);
    std::ifstream in(source);
    if (!in) {
        throw Error(Errc::InvalidArgument, "'" + source + "' is neither a preset (k3:1..8, abelian:1|2|3|4|6) nor a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return SurfaceHodgeCharacter::from_json(buffer.str());
}

cli::Format parse_format(const std::string& name) {
    if (name == "json") return cli::Format::Json;
    if (name == "csv") return cli::Format::Csv;
    return cli::Format::Pretty;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

int run_series(const std::string& command, const JobConfig& cfg) {
    check_trunc(cfg.trunc);
    const SurfaceHodgeCharacter s = load_surface(cfg.surface);
    if (cfg.element && (*cfg.element < 0 || *cfg.element >= s.order)) {
        throw Error(Errc::InvalidArgument, "--element must lie in 0.." + std::to_string(s.order - 1));
    }
    if (cfg.decompose && cfg.element) throw Error(Errc::InvalidArgument, "--decompose needs every power of g; drop --element");
    const bool kummer = command == "kummer";

    EquivariantSeries series{s.order, {}};
    cli::RenderContext ctx{command, cfg.surface, {}};
    if (cfg.element) {
        series.slices.push_back(kummer ? kummer_slice(s, *cfg.element, cfg.trunc) : hilbert_slice(s, *cfg.element, cfg.trunc));
        ctx.elements.push_back(*cfg.element);
    } else {
        series = kummer ? kummer_equivariant(s, cfg.trunc) : hilbert_equivariant(s, cfg.trunc);
        for (int k = 0; k < s.order; ++k) ctx.elements.push_back(k);
    }

    if (cfg.hodge_table) {
        const TruncatedSeries identity = kummer ? (cfg.element == 0 ? series.slices[0] : kummer_slice(s, 0, cfg.trunc))
                                                : (cfg.element == 0 ? series.slices[0] : hilbert_slice(s, 0, cfg.trunc));
        std::ostringstream os;
        for (int n = kummer ? 1 : 0; n <= cfg.trunc; ++n) {
            os << (kummer ? "K_" : "S^[") << n << (kummer ? "" : "]") << ":\n" << render_hodge_diamond(identity.layer(n)) << '\n';
        }
        emit(os.str(), cfg.output);
        return 0;
    }
    if (cfg.euler) {
        for (auto& slice : series.slices) slice = specialize_uv_one(slice);
    }
    const auto format = parse_format(cfg.format);
    emit(cfg.decompose ? cli::render_decomposition(series, ctx, format) : cli::render_series(series, ctx, format), cfg.output);
    return 0;
}

int run_verify(const VerifyConfig& cfg) {
    std::vector<std::string> suites;
    if (cfg.suite == "all") suites = suite_names();
    else suites.push_back(cfg.suite);
    bool ok = true;
    for (const auto& name : suites) {
        const SuiteReport report = run_suite(name, cfg.depth);
        std::cout << report.describe();
        ok = ok && report.passed();
    }
    return ok ? 0 : kExitMismatch;
}

void add_series_options(CLI::App* sub, JobConfig& cfg) {
    sub->add_option("--surface", cfg.surface, "Preset (k3:1..8, abelian:1|2|3|4|6) or surface JSON file")->required();
    sub->add_option("--trunc", cfg.trunc, "Highest power of t kept");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--element", cfg.element, "Only the trace of g^k");
    sub->add_option("--output", cfg.output, "Write to this file instead of stdout");
    sub->add_flag("--euler", cfg.euler, "Specialize u = v = 1");
    sub->add_flag("--decompose", cfg.decompose, "Multiplicities of the irreducible characters per coefficient");
    sub->add_flag("--hodge-table", cfg.hodge_table, "Hodge diamonds of the identity slice");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Hodge and Euler series of Hilbert schemes and generalized Kummer varieties"};
    app.require_subcommand(1);

    JobConfig hilbert_cfg;
    auto* hilbert = app.add_subcommand("hilbert", "Traces of g^k on sum_n E(S^[n]; u, v) t^n");
    add_series_options(hilbert, hilbert_cfg);

    JobConfig kummer_cfg;
    auto* kummer = app.add_subcommand("kummer", "Traces of g^k on sum_n E(K_n(A); u, v) t^n");
    add_series_options(kummer, kummer_cfg);

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", verify_cfg.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify->add_option("--trunc", verify_cfg.depth, "Suite depth (t-truncation, largest n, or largest power)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*hilbert) return run_series("hilbert", hilbert_cfg);
        if (*kummer) return run_series("kummer", kummer_cfg);
        return run_verify(verify_cfg);
    } catch (const Error& e) {
        std::cerr << "equigo: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return e.is_internal() ? kExitInternal : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "equigo: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
