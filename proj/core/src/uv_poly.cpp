#include "equigo/uv_poly.hpp"

#include <algorithm>

#include "equigo/error.hpp"

namespace equigo {

namespace {
const Cyclotomic kZero{};
}

UVPoly UVPoly::constant(Cyclotomic value) { return monomial(0, 0, std::move(value)); }

UVPoly UVPoly::monomial(int u, int v, Cyclotomic value) {
    UVPoly p;
    if (!value.is_zero()) p.ref(u, v) = std::move(value);
    return p;
}

int UVPoly::u_degree() const {
    int deg = -1;
    for_each([&](int u, int, const Cyclotomic&) { deg = std::max(deg, u); });
    return deg;
}

int UVPoly::v_degree() const {
    int deg = -1;
    for_each([&](int, int v, const Cyclotomic&) { deg = std::max(deg, v); });
    return deg;
}

const Cyclotomic& UVPoly::at(int u, int v) const {
    if (u < 0 || v < 0 || u >= nu_ || v >= nv_) return kZero;
    return cells_[static_cast<std::size_t>(u) * nv_ + v];
}

Cyclotomic& UVPoly::ref(int u, int v) {
    if (u < 0 || v < 0) throw Error(Errc::InvalidArgument, "negative exponent in u/v");
    if (u >= nu_ || v >= nv_) reserve(std::max(nu_, u + 1), std::max(nv_, v + 1));
    return cells_[static_cast<std::size_t>(u) * nv_ + v];
}

void UVPoly::reserve(int u_extent, int v_extent) {
    if (u_extent <= nu_ && v_extent <= nv_) return;
    int nu = std::max(nu_, u_extent);
    int nv = std::max(nv_, v_extent);
    std::vector<Cyclotomic> cells(static_cast<std::size_t>(nu) * nv);
    for (int u = 0; u < nu_; ++u) {
        for (int v = 0; v < nv_; ++v) {
            cells[static_cast<std::size_t>(u) * nv + v] = std::move(cells_[static_cast<std::size_t>(u) * nv_ + v]);
        }
    }
    cells_ = std::move(cells);
    nu_ = nu;
    nv_ = nv;
}

bool UVPoly::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

std::size_t UVPoly::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](const Cyclotomic& c) { return !c.is_zero(); }));
}

void UVPoly::add_scaled_shifted(const UVPoly& src, const Cyclotomic& scale, int du, int dv) {
    if (scale.is_zero() || src.nu_ == 0 || src.nv_ == 0) return;
    if (du < 0 || dv < 0) throw Error(Errc::InvalidArgument, "negative shift in u/v");
    reserve(src.nu_ + du, src.nv_ + dv);
    for (int u = 0; u < src.nu_; ++u) {
        const Cyclotomic* row = &src.cells_[static_cast<std::size_t>(u) * src.nv_];
        Cyclotomic* out = &cells_[static_cast<std::size_t>(u + du) * nv_ + dv];
        for (int v = 0; v < src.nv_; ++v) {
            if (!row[v].is_zero()) out[v].add_mul(row[v], scale);
        }
    }
}

UVPoly& UVPoly::operator+=(const UVPoly& rhs) {
    add_scaled_shifted(rhs, Cyclotomic(1), 0, 0);
    return *this;
}

UVPoly& UVPoly::operator-=(const UVPoly& rhs) {
    add_scaled_shifted(rhs, Cyclotomic(-1), 0, 0);
    return *this;
}

UVPoly& UVPoly::operator*=(const Cyclotomic& rhs) {
    for (auto& c : cells_) {
        if (!c.is_zero()) c *= rhs;
    }
    return *this;
}

UVPoly UVPoly::operator-() const {
    UVPoly out = *this;
    for (auto& c : out.cells_) {
        if (!c.is_zero()) c = -c;
    }
    return out;
}

UVPoly operator*(const UVPoly& a, const UVPoly& b) {
    UVPoly out;
    const int au = a.u_degree();
    const int bu = b.u_degree();
    if (au < 0 || bu < 0) return out;
    out.reserve(au + bu + 1, a.v_degree() + b.v_degree() + 1);
    a.for_each([&](int u, int v, const Cyclotomic& c) { out.add_scaled_shifted(b, c, u, v); });
    return out;
}

bool operator==(const UVPoly& a, const UVPoly& b) {
    const int nu = std::max(a.nu_, b.nu_);
    const int nv = std::max(a.nv_, b.nv_);
    for (int u = 0; u < nu; ++u) {
        for (int v = 0; v < nv; ++v) {
            if (!(a.at(u, v) == b.at(u, v))) return false;
        }
    }
    return true;
}

Cyclotomic UVPoly::sum_of_coefficients() const {
    Cyclotomic acc;
    for (const auto& c : cells_) {
        if (!c.is_zero()) acc += c;
    }
    return acc;
}

UVPoly UVPoly::conj() const {
    UVPoly out = *this;
    for (auto& c : out.cells_) {
        if (!c.is_rational()) c = c.conj();
    }
    return out;
}

UVPoly UVPoly::swapped() const {
    UVPoly out;
    out.reserve(nv_, nu_);
    for_each([&](int u, int v, const Cyclotomic& c) { out.ref(v, u) = c; });
    return out;
}

UVPoly UVPoly::sign_twisted() const {
    UVPoly out = *this;
    for (int u = 0; u < nu_; ++u) {
        for (int v = 0; v < nv_; ++v) {
            auto& c = out.cells_[static_cast<std::size_t>(u) * nv_ + v];
            if ((u + v) % 2 == 1 && !c.is_zero()) c = -c;
        }
    }
    return out;
}

UVPoly UVPoly::truncated(int u_extent, int v_extent) const {
    UVPoly out;
    for_each([&](int u, int v, const Cyclotomic& c) {
        if (u < u_extent && v < v_extent) out.ref(u, v) = c;
    });
    return out;
}

UVPoly inverse_in_box(const UVPoly& p, int u_extent, int v_extent) {
    const Cyclotomic& c00 = p.at(0, 0);
    if (!c00.is_rational() || c00.is_zero()) {
        throw Error(Errc::NonUnitConstantTerm, "constant term must be a nonzero rational, got " + c00.to_string());
    }
    const Rational inv00 = Rational(1) / c00.rational();
    UVPoly q;
    if (u_extent <= 0 || v_extent <= 0) return q;
    q.reserve(u_extent, v_extent);
    // q[u][v] = -(1/c00) sum_{(i,j) != (0,0)} p[i][j] q[u-i][v-j], with q[0][0] = 1/c00
    for (int u = 0; u < u_extent; ++u) {
        for (int v = 0; v < v_extent; ++v) {
            Cyclotomic acc = (u == 0 && v == 0) ? Cyclotomic(1) : Cyclotomic();
            p.for_each([&](int i, int j, const Cyclotomic& c) {
                if ((i == 0 && j == 0) || i > u || j > v) return;
                acc.sub_mul(c, q.at(u - i, v - j));
            });
            acc *= inv00;
            q.ref(u, v) = std::move(acc);
        }
    }
    return q;
}

std::optional<UVPoly> divide_exact(const UVPoly& a, const UVPoly& d) {
    const int ad_u = a.u_degree();
    const int dd_u = d.u_degree();
    if (dd_u < 0) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
    if (ad_u < 0) return UVPoly{};
    const int qu = ad_u - dd_u;
    const int qv = a.v_degree() - d.v_degree();
    if (qu < 0 || qv < 0) return std::nullopt;
    UVPoly q = inverse_in_box(d, qu + 1, qv + 1) * a.truncated(qu + 1, qv + 1);
    q = q.truncated(qu + 1, qv + 1);
    if (!(q * d == a)) return std::nullopt;
    return q;
}

} // namespace equigo
