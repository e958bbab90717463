#include <algorithm>
#include <charconv>
#include <numeric>

#include "equigo/error.hpp"
#include "equigo/goettsche.hpp"
#include "json.hpp"

namespace equigo {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

std::vector<int> negated(const std::vector<int>& exps, int n) {
    std::vector<int> out;
    out.reserve(exps.size());
    for (int a : exps) out.push_back(mod(-static_cast<long long>(a), n));
    std::sort(out.begin(), out.end());
    return out;
}

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw Error(Errc::ParseError, std::string("bad ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

} // namespace

const std::vector<int>& SurfaceHodgeCharacter::exponents(int p, int q) const {
    static const std::vector<int> kEmpty;
    auto it = hodge.find({p, q});
    return it == hodge.end() ? kEmpty : it->second;
}

void SurfaceHodgeCharacter::normalize() {
    if (order < 1) throw Error(Errc::InvalidSurface, "order must be positive");
    for (auto it = hodge.begin(); it != hodge.end();) {
        const auto [p, q] = it->first;
        if (p < 0 || p > 2 || q < 0 || q > 2) {
            throw Error(Errc::InvalidSurface, "Hodge index (" + std::to_string(p) + "," + std::to_string(q) + ") outside 0..2");
        }
        if (it->second.empty()) {
            it = hodge.erase(it);
            continue;
        }
        for (int& a : it->second) a = mod(a, order);
        std::sort(it->second.begin(), it->second.end());
        ++it;
    }
    if (exponents(0, 0) != std::vector<int>{0}) throw Error(Errc::InvalidSurface, "H^{0,0} must be the trivial line");
    for (const auto& [pq, exps] : hodge) {
        const auto [p, q] = pq;
        if (negated(exps, order) != exponents(q, p)) {
            throw Error(Errc::InvalidSurface, "H^{" + std::to_string(q) + "," + std::to_string(p) +
                                                  "} is not the conjugate of H^{" + std::to_string(p) + "," +
                                                  std::to_string(q) + "}");
        }
    }
}

SurfaceHodgeCharacter SurfaceHodgeCharacter::from_json(const std::string& text) {
    SurfaceHodgeCharacter s;
    try {
        const auto doc = nlohmann::json::parse(text);
        s.order = doc.at("order").get<int>();
        for (const auto& [key, value] : doc.at("hodge").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw Error(Errc::ParseError, "Hodge key must look like \"p,q\": " + key);
            const std::string_view k(key);
            const int p = parse_int(trim(k.substr(0, comma)), "Hodge index");
            const int q = parse_int(trim(k.substr(comma + 1)), "Hodge index");
            auto& exps = s.hodge[{p, q}];
            for (const auto& a : value) exps.push_back(a.get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("surface JSON: ") + e.what());
    }
    s.normalize();
    return s;
}

std::string SurfaceHodgeCharacter::to_json() const {
    nlohmann::json hodge_doc = nlohmann::json::object();
    for (const auto& [pq, exps] : hodge) hodge_doc[std::to_string(pq.first) + "," + std::to_string(pq.second)] = exps;
    return nlohmann::json{{"order", order}, {"hodge", hodge_doc}}.dump();
}

Rational mathieu_epsilon(int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "element order must be positive");
    Rational denom(n);
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        denom *= Rational(p + 1, p);
    }
    return Rational(24) / denom;
}

SurfaceHodgeCharacter k3_symplectic_preset(int N) {
    if (N < 1 || N > 8) throw Error(Errc::UnsupportedOrder, "symplectic K3 automorphisms have order 1..8, got " + std::to_string(N));
    TraceVector h11{N, {}};
    for (int k = 0; k < N; ++k) h11.values.emplace_back(mathieu_epsilon(N / std::gcd(k, N)) - Rational(4));
    const auto mult = character_to_multiplicities(h11, Genuineness::RequireGenuine);
    SurfaceHodgeCharacter s;
    s.order = N;
    for (auto pq : {std::pair{0, 0}, {2, 0}, {0, 2}, {2, 2}}) s.hodge[pq] = {0};
    auto& e11 = s.hodge[{1, 1}];
    for (int a = 0; a < N; ++a) e11.insert(e11.end(), static_cast<std::size_t>(mult[a].get_si()), a);
    s.normalize();
    return s;
}

SurfaceHodgeCharacter abelian_symplectic_preset(int N) {
    if (N != 1 && N != 2 && N != 3 && N != 4 && N != 6) {
        throw Error(Errc::UnsupportedOrder, "symplectic abelian-surface automorphisms fixing the origin have order 1, 2, 3, 4 or 6");
    }
    const std::vector<int> h10{1 % N, mod(-1, N)};
    SurfaceHodgeCharacter s;
    s.order = N;
    s.hodge[{0, 0}] = {0};
    s.hodge[{1, 0}] = h10;
    s.hodge[{0, 1}] = negated(h10, N);
    s.hodge[{2, 0}] = {0};
    s.hodge[{0, 2}] = {0};
    s.hodge[{1, 1}] = {0, 0, mod(2, N), mod(-2, N)};
    s.hodge[{2, 1}] = h10;
    s.hodge[{1, 2}] = negated(h10, N);
    s.hodge[{2, 2}] = {0};
    s.normalize();
    return s;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 8; ++n) names.push_back("k3:" + std::to_string(n));
    for (int n : {1, 2, 3, 4, 6}) names.push_back("abelian:" + std::to_string(n));
    return names;
}

bool is_preset_name(std::string_view name) {
    const auto names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SurfaceHodgeCharacter preset_surface(std::string_view name) {
    if (!is_preset_name(name)) {
        throw Error(Errc::InvalidArgument, "unknown preset '" + std::string(name) + "' (k3:1..8, abelian:1|2|3|4|6)");
    }
    const auto colon = name.find(':');
    const int n = parse_int(name.substr(colon + 1), "preset order");
    return name.starts_with("k3") ? k3_symplectic_preset(n) : abelian_symplectic_preset(n);
}

} // namespace equigo
