#include "equigo/goettsche.hpp"

#include <algorithm>
#include <future>

#include "equigo/error.hpp"

namespace equigo {

namespace {

struct FactorPolynomial {
    int p;
    int q;
    std::vector<Cyclotomic> coeffs; // prod_lambda (1 - lambda x)
};

std::vector<FactorPolynomial> factor_polynomials(const SurfaceHodgeCharacter& s, int k) {
    std::vector<FactorPolynomial> out;
    for (const auto& [pq, exps] : s.hodge) {
        std::vector<Cyclotomic> eigen;
        eigen.reserve(exps.size());
        for (int a : exps) eigen.push_back(Cyclotomic::zeta(s.order, static_cast<std::int64_t>(a) * k));
        out.push_back({pq.first, pq.second, alternating_exterior_polynomial(eigen)});
    }
    return out;
}

// Multiplies s by the m-th factor: P_pq(x)^{(-1)^{p+q+1}}, x = t^m u^{p+m-1} v^{q+m-1}.
TruncatedSeries apply_factor(TruncatedSeries s, const std::vector<FactorPolynomial>& polys, int m) {
    const int T = s.trunc();
    for (const auto& f : polys) {
        const std::size_t len = std::min(f.coeffs.size(), static_cast<std::size_t>(T / m) + 1);
        const std::span<const Cyclotomic> coeffs(f.coeffs.data(), len);
        const Monomial step{m, f.p + m - 1, f.q + m - 1};
        s = (f.p + f.q) % 2 == 0 ? divide_by_polynomial_in(std::move(s), coeffs, step)
                                 : multiply_by_polynomial_in(std::move(s), coeffs, step);
    }
    return s;
}

Cyclotomic binomial(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return Cyclotomic(r);
}

} // namespace

const TruncatedSeries& EquivariantSeries::slice(int k) const {
    if (k < 0 || k >= static_cast<int>(slices.size())) throw Error(Errc::InvalidArgument, "slice index out of range");
    return slices[k];
}

TruncatedSeries hilbert_factor(const SurfaceHodgeCharacter& s, int k, int m, int T) {
    if (m < 1) throw Error(Errc::InvalidArgument, "factor index must be positive");
    return apply_factor(TruncatedSeries::one(T), factor_polynomials(s, k), m);
}

TruncatedSeries hilbert_slice(const SurfaceHodgeCharacter& s, int k, int T) {
    const auto polys = factor_polynomials(s, k);
    TruncatedSeries out = TruncatedSeries::one(T);
    for (int m = 1; m <= T; ++m) out = apply_factor(std::move(out), polys, m);
    return out;
}

EquivariantSeries hilbert_equivariant(const SurfaceHodgeCharacter& s, int T) {
    std::vector<std::future<TruncatedSeries>> jobs;
    for (int k = 0; k < s.order; ++k) {
        jobs.push_back(std::async(std::launch::async, [&s, k, T] { return hilbert_slice(s, k, T); }));
    }
    EquivariantSeries out{s.order, {}};
    for (auto& job : jobs) out.slices.push_back(job.get());
    return out;
}

TraceVector euler_traces(const SurfaceHodgeCharacter& s) {
    TraceVector tv{s.order, {}};
    for (int k = 0; k < s.order; ++k) {
        Cyclotomic total;
        for (const auto& [pq, exps] : s.hodge) {
            const Cyclotomic tr = power_trace(s.order, exps, k);
            if ((pq.first + pq.second) % 2 == 0) total += tr;
            else total -= tr;
        }
        tv.values.push_back(std::move(total));
    }
    return tv;
}

EquivariantSeries euler_trace_series(const TraceVector& traces, int T) {
    if (traces.order < 1 || static_cast<int>(traces.values.size()) != traces.order) {
        throw Error(Errc::InvalidArgument, "trace vector must list Tr(g^k) for k = 0..N-1");
    }
    EquivariantSeries out{traces.order, {}};
    for (int k = 0; k < traces.order; ++k) {
        TruncatedSeries log_series(T);
        for (int j = 1; j <= T; ++j) {
            const Cyclotomic c = traces.at_power(static_cast<long long>(k) * j) * Rational(1, j);
            if (c.is_zero()) continue;
            for (int m = 1; m * j <= T; ++m) log_series.add_term({m * j, 0, 0}, c);
        }
        out.slices.push_back(exp(log_series));
    }
    return out;
}

HodgeDiamond hodge_numbers(const SurfaceHodgeCharacter& s) {
    HodgeDiamond h{};
    for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) h[p][q] = s.hodge_number(p, q);
    }
    return h;
}

TruncatedSeries goettsche_soergel_hodge(const HodgeDiamond& h, int T) {
    TruncatedSeries out = TruncatedSeries::one(T);
    for (int m = 1; m <= T; ++m) {
        for (int p = 0; p <= 2; ++p) {
            for (int q = 0; q <= 2; ++q) {
                const int n = h[p][q];
                if (n == 0) continue;
                std::vector<Cyclotomic> coeffs;
                for (int i = 0; i <= n && i * m <= T; ++i) {
                    Cyclotomic c = binomial(n, i);
                    if ((i * (p + q + 1)) % 2 == 1) c = -c;
                    coeffs.push_back(std::move(c));
                }
                const Monomial step{m, p + m - 1, q + m - 1};
                out = (p + q) % 2 == 0 ? divide_by_polynomial_in(std::move(out), coeffs, step)
                                       : multiply_by_polynomial_in(std::move(out), coeffs, step);
            }
        }
    }
    return sign_twist_uv(out);
}

TruncatedSeries symmetric_power_series(const std::map<int, std::vector<Cyclotomic>>& graded_eigen, int T) {
    TruncatedSeries out = TruncatedSeries::one(T);
    for (const auto& [j, eigen] : graded_eigen) {
        if (j < 0) throw Error(Errc::InvalidArgument, "cohomological degree must be nonnegative");
        if (eigen.empty()) continue;
        const auto coeffs = alternating_exterior_polynomial(eigen);
        const Monomial step{1, j, 0};
        out = j % 2 == 0 ? divide_by_polynomial_in(std::move(out), coeffs, step)
                         : multiply_by_polynomial_in(std::move(out), coeffs, step);
    }
    return out;
}

std::vector<Monomial> support(const EquivariantSeries& s) {
    std::vector<Monomial> out;
    for (const auto& slice : s.slices) {
        for (const auto& [m, c] : slice.terms()) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Integer> decompose_coefficient(const EquivariantSeries& s, Monomial m, Genuineness mode) {
    TraceVector tv{s.order, {}};
    for (const auto& slice : s.slices) {
        Cyclotomic c = slice.coeff(m);
        if ((m.u + m.v) % 2 == 1) c = -c;
        tv.values.push_back(std::move(c));
    }
    return character_to_multiplicities(tv, mode);
}

} // namespace equigo
