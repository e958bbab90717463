#pragma once

#include <optional>
#include <vector>

#include "equigo/cyclotomic.hpp"

namespace equigo {

/// Polynomial in two commuting variables u, v with nonnegative exponents.
///
/// Storage is a dense row-major grid over [0, u_extent) x [0, v_extent);
/// cells outside the grid read as zero and writes grow the grid.
class UVPoly {
public:
    UVPoly() = default;
    static UVPoly constant(Cyclotomic value);
    static UVPoly monomial(int u, int v, Cyclotomic value);

    int u_extent() const noexcept { return nu_; }
    int v_extent() const noexcept { return nv_; }
    /// Largest exponent with a nonzero coefficient, -1 for the zero polynomial.
    int u_degree() const;
    int v_degree() const;

    const Cyclotomic& at(int u, int v) const;
    Cyclotomic& ref(int u, int v);
    void reserve(int u_extent, int v_extent);

    bool is_zero() const;
    std::size_t term_count() const;

    /// f(u, v, coeff) for every nonzero coefficient in (u, v) lexicographic order.
    template <class F>
    void for_each(F&& f) const {
        for (int u = 0; u < nu_; ++u) {
            for (int v = 0; v < nv_; ++v) {
                const Cyclotomic& c = cells_[static_cast<std::size_t>(u) * nv_ + v];
                if (!c.is_zero()) f(u, v, c);
            }
        }
    }

    /// this += scale * u^du v^dv * src
    void add_scaled_shifted(const UVPoly& src, const Cyclotomic& scale, int du, int dv);

    UVPoly& operator+=(const UVPoly& rhs);
    UVPoly& operator-=(const UVPoly& rhs);
    UVPoly& operator*=(const Cyclotomic& rhs);
    UVPoly operator-() const;

    friend UVPoly operator+(UVPoly a, const UVPoly& b) { return a += b; }
    friend UVPoly operator-(UVPoly a, const UVPoly& b) { return a -= b; }
    friend UVPoly operator*(const UVPoly& a, const UVPoly& b);
    friend UVPoly operator*(UVPoly a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const UVPoly& a, const UVPoly& b);

    /// Value at u = v = 1.
    Cyclotomic sum_of_coefficients() const;
    /// Coefficientwise complex conjugate.
    UVPoly conj() const;
    /// u <-> v
    UVPoly swapped() const;
    /// u -> -u, v -> -v
    UVPoly sign_twisted() const;
    /// Drops every term with u >= u_extent or v >= v_extent.
    UVPoly truncated(int u_extent, int v_extent) const;

private:
    int nu_ = 0;
    int nv_ = 0;
    std::vector<Cyclotomic> cells_;
};

/// Power-series inverse of p in Q(zeta)[[u,v]], kept on [0,u_extent) x [0,v_extent).
/// Requires a nonzero constant term (throws NonUnitConstantTerm otherwise).
UVPoly inverse_in_box(const UVPoly& p, int u_extent, int v_extent);

/// Exact quotient a / d when d divides a as polynomials; std::nullopt otherwise.
/// The constant term of d must be nonzero.
std::optional<UVPoly> divide_exact(const UVPoly& a, const UVPoly& d);

} // namespace equigo
