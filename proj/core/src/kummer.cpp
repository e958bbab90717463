#include "equigo/kummer.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "equigo/error.hpp"
#include "equigo/partitions.hpp"

namespace equigo {

UVPoly e_polynomial_slice(const SurfaceHodgeCharacter& a, int k) {
    UVPoly e;
    for (const auto& [pq, exps] : a.hodge) {
        const Cyclotomic tr = power_trace(a.order, exps, k);
        e.ref(pq.first, pq.second) += (pq.first + pq.second) % 2 == 0 ? tr : -tr;
    }
    return e;
}

TruncatedSeries kummer_slice(const SurfaceHodgeCharacter& a, int k, int T) {
    if (a.hodge_number(1, 0) != 2 || a.hodge_number(0, 1) != 2) {
        throw Error(Errc::InvalidSurface, "generalized Kummer series need h^{1,0} = h^{0,1} = 2");
    }
    GcdTaggedSeries acc = GcdTaggedSeries::identity(T);
    for (int m = 1; m <= T; ++m) {
        GcdTaggedSeries factor = GcdTaggedSeries::identity(T);
        factor.add_part(m, hilbert_factor(a, k, m, T) - TruncatedSeries::one(T));
        acc = odot_mul(acc, factor);
    }
    return divide_layers_exact(euler_w_4_then_collapse(acc), e_polynomial_slice(a, k));
}

KummerSeries kummer_equivariant(const SurfaceHodgeCharacter& a, int T) {
    std::vector<std::future<TruncatedSeries>> jobs;
    for (int k = 0; k < a.order; ++k) {
        jobs.push_back(std::async(std::launch::async, [&a, k, T] { return kummer_slice(a, k, T); }));
    }
    KummerSeries out{a.order, {}};
    for (auto& job : jobs) out.slices.push_back(job.get());
    return out;
}

namespace {

UVPoly power(const UVPoly& base, int e) {
    UVPoly out = UVPoly::constant(Cyclotomic(1));
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
}

// ((1 - u^j)(1 - v^j))^2
UVPoly abelian_e_at_power(int j) {
    UVPoly f = UVPoly::constant(Cyclotomic(1));
    f.ref(j, 0) = Cyclotomic(-1);
    f.ref(0, j) = Cyclotomic(-1);
    f.ref(j, j) = Cyclotomic(1);
    return f * f;
}

// E of the k-th symmetric power of A: sum over beta of prod_j E(A)(u^j, v^j)^{beta_j} / (j^{beta_j} beta_j!)
UVPoly symmetric_power_e(int k) {
    UVPoly total;
    for (const auto& beta : enumerate_partitions(k)) {
        UVPoly term = UVPoly::constant(Cyclotomic(1));
        Rational weight(1);
        for (int j = 1; j <= static_cast<int>(beta.multiplicities().size()); ++j) {
            const int b = beta.multiplicity(j);
            if (b == 0) continue;
            term = term * power(abelian_e_at_power(j), b);
            for (int i = 1; i <= b; ++i) weight *= Rational(1, static_cast<std::int64_t>(j) * i);
        }
        total.add_scaled_shifted(term, Cyclotomic(weight), 0, 0);
    }
    return total;
}

} // namespace

UVPoly kummer_hodge_closed(int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "Kummer index must be positive");
    std::vector<UVPoly> sym;
    for (int k = 0; k <= n; ++k) sym.push_back(symmetric_power_e(k));
    UVPoly total;
    for (const auto& alpha : enumerate_partitions(n)) {
        UVPoly term = UVPoly::constant(Cyclotomic(1));
        for (int i = 1; i <= static_cast<int>(alpha.multiplicities().size()); ++i) {
            const int a = alpha.multiplicity(i);
            if (a != 0) term = term * sym[a];
        }
        const std::int64_t g = alpha.gcd_parts();
        const int shift = n - alpha.num_parts();
        total.add_scaled_shifted(term, Cyclotomic(g * g * g * g), shift, shift);
    }
    auto q = divide_exact(total, abelian_e_at_power(1));
    if (!q) throw Error(Errc::NonPolynomialQuotient, "closed Kummer sum is not divisible by ((1-u)(1-v))^2");
    q->for_each([&](int u, int v, const Cyclotomic& c) {
        if (!c.is_rational() || !c.rational().is_integer()) {
            throw Error(Errc::NonIntegralCoefficient, "non-integral coefficient " + c.to_string() + " in E(K_" +
                                                          std::to_string(n) + ")");
        }
        if (((u + v) % 2 == 0 ? c.rational().sign() : -c.rational().sign()) < 0) {
            throw Error(Errc::NonIntegralCoefficient, "negative Hodge number at (" + std::to_string(u) + "," +
                                                          std::to_string(v) + ") in K_" + std::to_string(n));
        }
    });
    return *q;
}

KummerEulerComparison kummer_euler_numbers(int T) {
    if (T < 1) throw Error(Errc::InvalidArgument, "truncation must be positive");
    KummerEulerComparison out;
    const TruncatedSeries euler = specialize_uv_one(kummer_slice(abelian_symplectic_preset(1), 0, T));
    for (int n = 1; n <= T; ++n) out.euler.push_back(euler.coeff({n, 0, 0}).rational().numerator());
    // E_2 = 1 - 24 sum sigma_1(n) q^n; (q d/dq)^3 multiplies q^n by n^3.
    for (int n = 1; n <= T; ++n) {
        const Integer e2_coeff = Integer(-24) * Integer(static_cast<long>(sigma1(n)));
        const Integer n3 = Integer(n) * n * n;
        out.e2_side.push_back(n3 * e2_coeff / 24);
    }
    for (int sign : {1, -1}) {
        bool ok = true;
        for (int i = 0; i < T; ++i) ok = ok && out.euler[i] == sign * out.e2_side[i];
        if (ok) out.global_sign = sign;
    }
    return out;
}

std::string render_hodge_diamond(const UVPoly& e_poly) {
    const int d = std::max(e_poly.u_degree(), e_poly.v_degree());
    if (d < 0) return "0\n";
    std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(2 * d) + 1);
    std::size_t width = 1;
    for (int r = 0; r <= 2 * d; ++r) {
        for (int p = std::min(r, d); p >= std::max(0, r - d); --p) {
            const int q = r - p;
            Cyclotomic h = e_poly.at(p, q);
            if ((p + q) % 2 == 1) h = -h;
            rows[r].push_back(h.to_string());
            width = std::max(width, rows[r].back().size());
        }
    }
    std::ostringstream os;
    const std::size_t cell = width + 1;
    for (const auto& row : rows) {
        std::string line((static_cast<std::size_t>(d) + 1 - row.size()) * cell / 2, ' ');
        for (const auto& entry : row) line += std::string(cell - entry.size(), ' ') + entry;
        os << line << '\n';
    }
    return os.str();
}

} // namespace equigo
