#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equigo/cyclotomic.hpp"
#include "equigo/uv_poly.hpp"

namespace equigo {

/// Exponent tuple t^t u^u v^v.  Ordering is lexicographic in (t, u, v).
struct Monomial {
    int t = 0;
    int u = 0;
    int v = 0;
    auto operator<=>(const Monomial&) const = default;
};

enum Variable : unsigned { kVarT = 1u, kVarU = 2u, kVarV = 4u };

/// Power series in t, u, v over Q(zeta), truncated at t-degree `trunc`.
///
/// Only the t-degree is truncated.  Each t-degree carries a (u, v)
/// polynomial, which is finite for every generating function built here
/// (the u- and v-degrees of the t^n coefficient grow linearly in n).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc = 0);

    static TruncatedSeries one(int trunc);
    static TruncatedSeries monomial(int trunc, Monomial m, Cyclotomic coeff);
    /// Terms with t > trunc are dropped.
    static TruncatedSeries from_terms(int trunc, std::span<const std::pair<Monomial, Cyclotomic>> terms);
    /// Univariate series in t from coefficients c_0, c_1, ...
    static TruncatedSeries from_t_coefficients(int trunc, std::span<const Cyclotomic> coeffs);

    int trunc() const noexcept { return trunc_; }

    Cyclotomic coeff(Monomial m) const;
    /// Adds `value` at m; silently ignored when m.t > trunc().
    void add_term(Monomial m, const Cyclotomic& value);

    /// The (u, v) polynomial multiplying t^n.
    const UVPoly& layer(int n) const;
    UVPoly& mutable_layer(int n);

    /// Nonzero terms sorted by (t, u, v).
    std::vector<std::pair<Monomial, Cyclotomic>> terms() const;
    std::size_t term_count() const;
    bool is_zero() const;
    /// Bitmask of Variable values that occur with a positive exponent.
    unsigned variables() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Cyclotomic& scale);
    TruncatedSeries operator-() const;

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int trunc_;
    std::vector<UVPoly> layers_;
};

/// Product truncated at t^T; both operands must share T (TruncationMismatch).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse.  The t^0 coefficient must be a nonzero rational
/// constant; otherwise the inverse has infinitely many (u, v) terms per
/// t-degree and NonUnitConstantTerm is thrown.
TruncatedSeries inverse(const TruncatedSeries& a);

/// Inverse when the t^0 coefficient is a (u, v) polynomial with nonzero
/// rational constant term; u- and v-exponents are cut at the given extents.
TruncatedSeries inverse(const TruncatedSeries& a, int u_extent, int v_extent);

/// exp(a); the t^0 coefficient of a must vanish (BadConstantTerm).
TruncatedSeries exp(const TruncatedSeries& a);
/// log(a); the t^0 coefficient of a must be exactly 1 (BadConstantTerm).
TruncatedSeries log(const TruncatedSeries& a);

/// t -> t^m, truncation preserved.
TruncatedSeries substitute_t_power(const TruncatedSeries& a, int m);

/// a * P(x) where x = t^step.t u^step.u v^step.v and P(x) = sum_i coeffs[i] x^i.
/// step.t must be positive.
TruncatedSeries multiply_by_polynomial_in(TruncatedSeries a, std::span<const Cyclotomic> coeffs, Monomial step);
/// a / P(x); requires coeffs[0] to be a nonzero rational.
TruncatedSeries divide_by_polynomial_in(TruncatedSeries a, std::span<const Cyclotomic> coeffs, Monomial step);

/// Divides every t-layer by the (u, v) polynomial d exactly; throws
/// NonPolynomialQuotient when some layer is not divisible.
TruncatedSeries divide_layers_exact(const TruncatedSeries& a, const UVPoly& d);

/// u = v = 1; the result is a series in t only.
TruncatedSeries specialize_uv_one(const TruncatedSeries& a);
TruncatedSeries conj(const TruncatedSeries& a);
TruncatedSeries swap_uv(const TruncatedSeries& a);
/// u -> -u, v -> -v
TruncatedSeries sign_twist_uv(const TruncatedSeries& a);
/// Same series cut to a smaller truncation.
TruncatedSeries truncate(const TruncatedSeries& a, int trunc);

struct SeriesMismatch {
    Monomial where;
    Cyclotomic lhs;
    Cyclotomic rhs;
    std::string describe() const;
};

/// First differing coefficient in (t, u, v) order, comparing up to the
/// smaller of the two truncations.
std::optional<SeriesMismatch> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/// Canonical JSON: {"trunc": T, "terms": [{"t":..,"u":..,"v":..,"coeff":".."}]}
std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

/// Series whose terms carry an extra w-exponent ("tag") that combines by gcd
/// under the odot product; gcd(0, l) = l, so tag 0 is the identity tag.
class GcdTaggedSeries {
public:
    explicit GcdTaggedSeries(int trunc = 0) : trunc_(trunc) {}

    /// 1 with tag 0.
    static GcdTaggedSeries identity(int trunc);
    /// Every term of s with a single tag.
    static GcdTaggedSeries tagged(const TruncatedSeries& s, int tag);

    int trunc() const noexcept { return trunc_; }
    void add_term(Monomial m, int tag, const Cyclotomic& value);
    Cyclotomic coeff(Monomial m, int tag) const;

    /// Per-tag parts; zero parts are not stored.
    const std::map<int, TruncatedSeries>& parts() const noexcept { return parts_; }
    void add_part(int tag, const TruncatedSeries& s);

    friend bool operator==(const GcdTaggedSeries& a, const GcdTaggedSeries& b);
    GcdTaggedSeries& operator+=(const GcdTaggedSeries& rhs);

private:
    int trunc_;
    std::map<int, TruncatedSeries> parts_;
};

int gcd_tag(int a, int b);

/// Coefficients multiply, (t, u, v) exponents add, tags combine by gcd.
GcdTaggedSeries odot_mul(const GcdTaggedSeries& a, const GcdTaggedSeries& b);

/// Applies (w d/dw)^4 and sets w = 1: a tag-l term is multiplied by l^4.
TruncatedSeries euler_w_4_then_collapse(const GcdTaggedSeries& a);

} // namespace equigo
