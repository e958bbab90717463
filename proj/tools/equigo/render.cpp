#include "render.hpp"

#include <sstream>

#include "json.hpp"

namespace equigo::cli {

namespace {

std::string monomial_text(int u, int v) {
    std::string out;
    auto var = [&](const char* name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    var("u", u);
    var("v", v);
    return out;
}

} // namespace

std::string render_uv(const UVPoly& p) {
    std::string out;
    p.for_each([&](int u, int v, const Cyclotomic& c) {
        std::string coeff = c.to_string();
        bool negative = c.is_rational() && c.rational().sign() < 0;
        if (negative) coeff = (-c).to_string();
        const std::string mono = monomial_text(u, v);
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else term = coeff + "*" + mono;
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    });
    return out.empty() ? "0" : out;
}

std::string render_series(const EquivariantSeries& s, const RenderContext& ctx, Format format) {
    std::ostringstream os;
    switch (format) {
    case Format::Json: {
        nlohmann::json slices = nlohmann::json::array();
        for (std::size_t i = 0; i < s.slices.size(); ++i) {
            slices.push_back({{"k", ctx.elements[i]}, {"series", nlohmann::json::parse(to_json(s.slices[i]))}});
        }
        nlohmann::json doc = {{"command", ctx.command}, {"surface", ctx.surface}, {"order", s.order},
                              {"trunc", s.trunc()},     {"slices", std::move(slices)}};
        os << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv: {
        os << "n,p,q,k,coeff\n";
        std::map<std::tuple<int, int, int, int>, std::string> rows;
        for (std::size_t i = 0; i < s.slices.size(); ++i) {
            for (const auto& [m, c] : s.slices[i].terms()) rows[{m.t, m.u, m.v, ctx.elements[i]}] = c.to_string();
        }
        for (const auto& [key, coeff] : rows) {
            const auto [n, p, q, k] = key;
            os << n << ',' << p << ',' << q << ',' << k << ',' << coeff << '\n';
        }
        break;
    }
    case Format::Pretty:
        os << ctx.command << " " << ctx.surface << " (order " << s.order << ", through t^" << s.trunc() << ")\n";
        for (std::size_t i = 0; i < s.slices.size(); ++i) {
            os << "g^" << ctx.elements[i] << ":\n";
            for (int n = 0; n <= s.slices[i].trunc(); ++n) os << "  t^" << n << ": " << render_uv(s.slices[i].layer(n)) << '\n';
        }
        break;
    }
    return os.str();
}

std::string render_decomposition(const EquivariantSeries& s, const RenderContext& ctx, Format format) {
    std::ostringstream os;
    const auto monomials = support(s);
    std::vector<std::vector<Integer>> mults;
    for (const auto& m : monomials) mults.push_back(decompose_coefficient(s, m));
    switch (format) {
    case Format::Json: {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            std::vector<std::string> values;
            for (const auto& x : mults[i]) values.push_back(x.get_str());
            rows.push_back({{"t", monomials[i].t}, {"u", monomials[i].u}, {"v", monomials[i].v}, {"multiplicities", values}});
        }
        nlohmann::json doc = {{"command", ctx.command}, {"surface", ctx.surface}, {"order", s.order},
                              {"trunc", s.trunc()},     {"decomposition", std::move(rows)}};
        os << doc.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        os << "n,p,q,a,multiplicity\n";
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            for (std::size_t a = 0; a < mults[i].size(); ++a) {
                os << monomials[i].t << ',' << monomials[i].u << ',' << monomials[i].v << ',' << a << ','
                   << mults[i][a].get_str() << '\n';
            }
        }
        break;
    case Format::Pretty:
        os << ctx.command << " " << ctx.surface << ": multiplicities of z^0..z^" << s.order - 1 << " in h^{p,q}\n";
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            os << "  t^" << monomials[i].t << " u^" << monomials[i].u << " v^" << monomials[i].v << ":";
            for (const auto& x : mults[i]) os << ' ' << x.get_str();
            os << '\n';
        }
        break;
    }
    return os.str();
}

} // namespace equigo::cli
