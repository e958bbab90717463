#include "equigo/series.hpp"

#include <algorithm>
#include <sstream>

#include "equigo/error.hpp"

namespace equigo {

namespace {

void require_same_trunc(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc() != b.trunc()) {
        throw Error(Errc::TruncationMismatch,
                    "truncations differ: " + std::to_string(a.trunc()) + " vs " + std::to_string(b.trunc()));
    }
}

bool is_constant(const UVPoly& p, const Cyclotomic& value) {
    bool ok = true;
    p.for_each([&](int u, int v, const Cyclotomic&) {
        if (u != 0 || v != 0) ok = false;
    });
    return ok && p.at(0, 0) == value;
}

} // namespace

TruncatedSeries::TruncatedSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw Error(Errc::InvalidArgument, "truncation must be nonnegative");
    layers_.resize(static_cast<std::size_t>(trunc) + 1);
}

TruncatedSeries TruncatedSeries::one(int trunc) {
    TruncatedSeries s(trunc);
    s.layers_[0].ref(0, 0) = Cyclotomic(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int trunc, Monomial m, Cyclotomic coeff) {
    TruncatedSeries s(trunc);
    s.add_term(m, coeff);
    return s;
}

TruncatedSeries TruncatedSeries::from_terms(int trunc, std::span<const std::pair<Monomial, Cyclotomic>> terms) {
    TruncatedSeries s(trunc);
    for (const auto& [m, c] : terms) s.add_term(m, c);
    return s;
}

TruncatedSeries TruncatedSeries::from_t_coefficients(int trunc, std::span<const Cyclotomic> coeffs) {
    TruncatedSeries s(trunc);
    for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= trunc; ++n) {
        if (!coeffs[n].is_zero()) s.layers_[n].ref(0, 0) = coeffs[n];
    }
    return s;
}

Cyclotomic TruncatedSeries::coeff(Monomial m) const {
    if (m.t < 0 || m.t > trunc_) return Cyclotomic();
    return layers_[m.t].at(m.u, m.v);
}

void TruncatedSeries::add_term(Monomial m, const Cyclotomic& value) {
    if (m.t < 0) throw Error(Errc::InvalidArgument, "negative t exponent");
    if (m.t > trunc_ || value.is_zero()) return;
    layers_[m.t].ref(m.u, m.v) += value;
}

const UVPoly& TruncatedSeries::layer(int n) const {
    static const UVPoly kEmpty;
    if (n < 0 || n > trunc_) return kEmpty;
    return layers_[n];
}

UVPoly& TruncatedSeries::mutable_layer(int n) {
    if (n < 0 || n > trunc_) throw Error(Errc::InvalidArgument, "layer index outside truncation");
    return layers_[n];
}

std::vector<std::pair<Monomial, Cyclotomic>> TruncatedSeries::terms() const {
    std::vector<std::pair<Monomial, Cyclotomic>> out;
    for (int n = 0; n <= trunc_; ++n) {
        layers_[n].for_each([&](int u, int v, const Cyclotomic& c) { out.emplace_back(Monomial{n, u, v}, c); });
    }
    return out;
}

std::size_t TruncatedSeries::term_count() const {
    std::size_t total = 0;
    for (const auto& l : layers_) total += l.term_count();
    return total;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(layers_.begin(), layers_.end(), [](const UVPoly& l) { return l.is_zero(); });
}

unsigned TruncatedSeries::variables() const {
    unsigned mask = 0;
    for (int n = 0; n <= trunc_; ++n) {
        layers_[n].for_each([&](int u, int v, const Cyclotomic&) {
            if (n > 0) mask |= kVarT;
            if (u > 0) mask |= kVarU;
            if (v > 0) mask |= kVarV;
        });
    }
    return mask;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_trunc(*this, rhs);
    for (int n = 0; n <= trunc_; ++n) layers_[n] += rhs.layers_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_trunc(*this, rhs);
    for (int n = 0; n <= trunc_; ++n) layers_[n] -= rhs.layers_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Cyclotomic& scale) {
    for (auto& l : layers_) l *= scale;
    return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& l : out.layers_) l = -l;
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_ != b.trunc_) return false;
    for (int n = 0; n <= a.trunc_; ++n) {
        if (!(a.layers_[n] == b.layers_[n])) return false;
    }
    return true;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_trunc(a, b);
    const int T = a.trunc();
    TruncatedSeries out(T);
    for (int i = 0; i <= T; ++i) {
        const UVPoly& ai = a.layer(i);
        if (ai.is_zero()) continue;
        for (int j = 0; i + j <= T; ++j) {
            const UVPoly& bj = b.layer(j);
            if (bj.is_zero()) continue;
            UVPoly& dst = out.mutable_layer(i + j);
            ai.for_each([&](int u, int v, const Cyclotomic& c) { dst.add_scaled_shifted(bj, c, u, v); });
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries inverse(const TruncatedSeries& a) {
    const UVPoly& a0 = a.layer(0);
    const Cyclotomic& c = a0.at(0, 0);
    if (!c.is_rational() || c.is_zero() || !is_constant(a0, c)) {
        throw Error(Errc::NonUnitConstantTerm, "t^0 coefficient must be a nonzero rational constant");
    }
    const Rational inv = Rational(1) / c.rational();
    const Cyclotomic neg_inv(-inv);
    const int T = a.trunc();
    TruncatedSeries b(T);
    b.mutable_layer(0).ref(0, 0) = Cyclotomic(inv);
    for (int n = 1; n <= T; ++n) {
        UVPoly acc;
        for (int k = 1; k <= n; ++k) {
            const UVPoly& ak = a.layer(k);
            if (ak.is_zero()) continue;
            const UVPoly& prev = b.layer(n - k);
            ak.for_each([&](int u, int v, const Cyclotomic& coeff) { acc.add_scaled_shifted(prev, coeff, u, v); });
        }
        acc *= neg_inv;
        b.mutable_layer(n) = std::move(acc);
    }
    return b;
}

TruncatedSeries inverse(const TruncatedSeries& a, int u_extent, int v_extent) {
    const int T = a.trunc();
    TruncatedSeries b(T);
    const UVPoly b0 = inverse_in_box(a.layer(0), u_extent, v_extent);
    b.mutable_layer(0) = b0;
    for (int n = 1; n <= T; ++n) {
        UVPoly acc;
        for (int k = 1; k <= n; ++k) {
            const UVPoly& ak = a.layer(k);
            if (ak.is_zero()) continue;
            acc += (ak * b.layer(n - k)).truncated(u_extent, v_extent);
        }
        b.mutable_layer(n) = (-(b0 * acc)).truncated(u_extent, v_extent);
    }
    return b;
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (!a.layer(0).is_zero()) throw Error(Errc::BadConstantTerm, "exp needs a series without t^0 term");
    const int T = a.trunc();
    TruncatedSeries f = TruncatedSeries::one(T);
    // n f_n = sum_{k=1}^n k a_k f_{n-k}
    for (int n = 1; n <= T; ++n) {
        UVPoly acc;
        for (int k = 1; k <= n; ++k) {
            const UVPoly& ak = a.layer(k);
            if (ak.is_zero()) continue;
            const UVPoly& prev = f.layer(n - k);
            const Cyclotomic weight(k);
            ak.for_each([&](int u, int v, const Cyclotomic& c) { acc.add_scaled_shifted(prev, c * weight, u, v); });
        }
        acc *= Cyclotomic(Rational(1, n));
        f.mutable_layer(n) = std::move(acc);
    }
    return f;
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (!is_constant(a.layer(0), Cyclotomic(1))) throw Error(Errc::BadConstantTerm, "log needs t^0 coefficient 1");
    const int T = a.trunc();
    TruncatedSeries g(T);
    // n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}
    for (int n = 1; n <= T; ++n) {
        UVPoly acc;
        for (int k = 1; k < n; ++k) {
            const UVPoly& gk = g.layer(k);
            if (gk.is_zero()) continue;
            const UVPoly& ank = a.layer(n - k);
            const Cyclotomic weight(-k);
            gk.for_each([&](int u, int v, const Cyclotomic& c) { acc.add_scaled_shifted(ank, c * weight, u, v); });
        }
        acc *= Cyclotomic(Rational(1, n));
        acc += a.layer(n);
        g.mutable_layer(n) = std::move(acc);
    }
    return g;
}

TruncatedSeries substitute_t_power(const TruncatedSeries& a, int m) {
    if (m < 1) throw Error(Errc::InvalidArgument, "substitution power must be positive");
    TruncatedSeries out(a.trunc());
    for (int n = 0; n * m <= a.trunc(); ++n) out.mutable_layer(n * m) = a.layer(n);
    return out;
}

TruncatedSeries multiply_by_polynomial_in(TruncatedSeries a, std::span<const Cyclotomic> coeffs, Monomial step) {
    if (step.t < 1) throw Error(Errc::InvalidArgument, "polynomial variable must carry positive t-degree");
    if (coeffs.empty()) return TruncatedSeries(a.trunc());
    const int T = a.trunc();
    const bool unit_lead = coeffs[0] == Cyclotomic(1);
    for (int n = T; n >= 0; --n) {
        UVPoly& dst = a.mutable_layer(n);
        if (!unit_lead) dst *= coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            const int src = n - static_cast<int>(i) * step.t;
            if (src < 0) break;
            dst.add_scaled_shifted(a.layer(src), coeffs[i], static_cast<int>(i) * step.u, static_cast<int>(i) * step.v);
        }
    }
    return a;
}

TruncatedSeries divide_by_polynomial_in(TruncatedSeries a, std::span<const Cyclotomic> coeffs, Monomial step) {
    if (step.t < 1) throw Error(Errc::InvalidArgument, "polynomial variable must carry positive t-degree");
    if (coeffs.empty() || !coeffs[0].is_rational() || coeffs[0].is_zero()) {
        throw Error(Errc::NonUnitConstantTerm, "divisor needs a nonzero rational constant term");
    }
    const int T = a.trunc();
    const bool unit_lead = coeffs[0] == Cyclotomic(1);
    const Rational inv_lead = Rational(1) / coeffs[0].rational();
    std::vector<Cyclotomic> neg(coeffs.size());
    for (std::size_t i = 1; i < coeffs.size(); ++i) neg[i] = -coeffs[i] * inv_lead;
    for (int n = 0; n <= T; ++n) {
        UVPoly& dst = a.mutable_layer(n);
        if (!unit_lead) dst *= Cyclotomic(inv_lead);
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            const int src = n - static_cast<int>(i) * step.t;
            if (src < 0) break;
            dst.add_scaled_shifted(a.layer(src), neg[i], static_cast<int>(i) * step.u, static_cast<int>(i) * step.v);
        }
    }
    return a;
}

TruncatedSeries divide_layers_exact(const TruncatedSeries& a, const UVPoly& d) {
    TruncatedSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) {
        auto q = divide_exact(a.layer(n), d);
        if (!q) throw Error(Errc::NonPolynomialQuotient, "t^" + std::to_string(n) + " coefficient is not divisible");
        out.mutable_layer(n) = std::move(*q);
    }
    return out;
}

TruncatedSeries specialize_uv_one(const TruncatedSeries& a) {
    TruncatedSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) {
        Cyclotomic s = a.layer(n).sum_of_coefficients();
        if (!s.is_zero()) out.mutable_layer(n).ref(0, 0) = std::move(s);
    }
    return out;
}

TruncatedSeries conj(const TruncatedSeries& a) {
    TruncatedSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.mutable_layer(n) = a.layer(n).conj();
    return out;
}

TruncatedSeries swap_uv(const TruncatedSeries& a) {
    TruncatedSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.mutable_layer(n) = a.layer(n).swapped();
    return out;
}

TruncatedSeries sign_twist_uv(const TruncatedSeries& a) {
    TruncatedSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.mutable_layer(n) = a.layer(n).sign_twisted();
    return out;
}

TruncatedSeries truncate(const TruncatedSeries& a, int trunc) {
    TruncatedSeries out(trunc);
    for (int n = 0; n <= std::min(trunc, a.trunc()); ++n) out.mutable_layer(n) = a.layer(n);
    return out;
}

std::string SeriesMismatch::describe() const {
    std::ostringstream os;
    os << "t^" << where.t << " u^" << where.u << " v^" << where.v << ": " << lhs << " != " << rhs;
    return os.str();
}

std::optional<SeriesMismatch> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int T = std::min(a.trunc(), b.trunc());
    for (int n = 0; n <= T; ++n) {
        const UVPoly& x = a.layer(n);
        const UVPoly& y = b.layer(n);
        const int nu = std::max(x.u_extent(), y.u_extent());
        const int nv = std::max(x.v_extent(), y.v_extent());
        for (int u = 0; u < nu; ++u) {
            for (int v = 0; v < nv; ++v) {
                if (!(x.at(u, v) == y.at(u, v))) return SeriesMismatch{{n, u, v}, x.at(u, v), y.at(u, v)};
            }
        }
    }
    return std::nullopt;
}

} // namespace equigo
