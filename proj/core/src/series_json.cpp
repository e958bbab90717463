#include "json.hpp"

#include "equigo/error.hpp"
#include "equigo/series.hpp"

namespace equigo {

std::string to_json(const TruncatedSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        terms.push_back({{"t", m.t}, {"u", m.u}, {"v", m.v}, {"coeff", c.to_string()}});
    }
    nlohmann::json doc = {{"trunc", s.trunc()}, {"terms", std::move(terms)}};
    return doc.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        TruncatedSeries s(doc.at("trunc").get<int>());
        for (const auto& term : doc.at("terms")) {
            const Monomial m{term.at("t").get<int>(), term.at("u").get<int>(), term.at("v").get<int>()};
            if (m.t < 0 || m.u < 0 || m.v < 0) throw Error(Errc::ParseError, "negative exponent in series JSON");
            const auto& coeff = term.at("coeff");
            const Cyclotomic c = coeff.is_string() ? Cyclotomic::parse(coeff.get<std::string>())
                                                   : Cyclotomic(coeff.get<std::int64_t>());
            s.add_term(m, c);
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("series JSON: ") + e.what());
    }
}

} // namespace equigo
