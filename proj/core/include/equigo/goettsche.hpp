#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equigo/characters.hpp"
#include "equigo/rational.hpp"
#include "equigo/series.hpp"

namespace equigo {

/// Action of a cyclic group <g> of order N on the Hodge pieces of a surface:
/// hodge[{p, q}] lists exponents a (eigenvalue zeta_N^a) on H^{p,q}, 0 <= p, q <= 2.
struct SurfaceHodgeCharacter {
    int order = 1;
    std::map<std::pair<int, int>, std::vector<int>> hodge;

    /// Exponents on H^{p,q}, empty when absent.
    const std::vector<int>& exponents(int p, int q) const;
    int hodge_number(int p, int q) const { return static_cast<int>(exponents(p, q).size()); }

    /// Reduces exponents into [0, N) and sorts them; throws InvalidSurface on
    /// a broken schema invariant (order, range of (p, q), H^{0,0}, Hodge symmetry).
    void normalize();

    /// {"order": N, "hodge": {"p,q": [a, ...]}}; throws ParseError or InvalidSurface.
    static SurfaceHodgeCharacter from_json(const std::string& text);
    std::string to_json() const;

    friend bool operator==(const SurfaceHodgeCharacter&, const SurfaceHodgeCharacter&) = default;
};

/// epsilon(n) = 24 / (n prod_{p | n} (1 + 1/p)).
Rational mathieu_epsilon(int n);

/// Symplectic K3 automorphism of order N in 1..8 (UnsupportedOrder otherwise).
SurfaceHodgeCharacter k3_symplectic_preset(int N);
/// Symplectic automorphism of an abelian surface fixing the origin, N in {1, 2, 3, 4, 6}.
SurfaceHodgeCharacter abelian_symplectic_preset(int N);

/// "k3:N" or "abelian:N"; throws InvalidArgument for other names.
SurfaceHodgeCharacter preset_surface(std::string_view name);
bool is_preset_name(std::string_view name);
/// Every preset name, K3 first.
std::vector<std::string> preset_names();

/// Per-power traces of a virtual character on a generating series: slice k is
/// the trace of g^k.
struct EquivariantSeries {
    int order = 1;
    std::vector<TruncatedSeries> slices;

    const TruncatedSeries& slice(int k) const;
    int trunc() const { return slices.empty() ? 0 : slices.front().trunc(); }
    friend bool operator==(const EquivariantSeries&, const EquivariantSeries&) = default;
};

/// Trace of g^k on the m-th factor of the Hilbert-scheme product, through t^T.
TruncatedSeries hilbert_factor(const SurfaceHodgeCharacter& s, int k, int m, int T);

/// Trace of g^k on sum_n E(S^[n]; u, v) t^n for every k; slices computed concurrently.
EquivariantSeries hilbert_equivariant(const SurfaceHodgeCharacter& s, int T);
/// One slice of hilbert_equivariant.
TruncatedSeries hilbert_slice(const SurfaceHodgeCharacter& s, int k, int T);

/// Tr(g^k, [e(S)]) = sum_{p,q} (-1)^{p+q} Tr(g^k, H^{p,q}).
TraceVector euler_traces(const SurfaceHodgeCharacter& s);

/// Slice k: exp(sum_m sum_j Tr(g^{kj}) t^{mj} / j) through t^T.
EquivariantSeries euler_trace_series(const TraceVector& traces, int T);

/// Hodge numbers h^{p,q}, 0 <= p, q <= 2.
using HodgeDiamond = std::array<std::array<int, 3>, 3>;
HodgeDiamond hodge_numbers(const SurfaceHodgeCharacter& s);

/// The non-equivariant product formula in Hodge-polynomial convention
/// (binomial coefficients and signs (-1)^{i(p+q+1)}), converted to E(X; u, v)
/// by u -> -u, v -> -v.
TruncatedSeries goettsche_soergel_hodge(const HodgeDiamond& h, int T);

/// prod_j prod_lambda (1 - lambda z^j t)^{(-1)^{j+1}} through t^T, with z stored in the u slot.
/// graded_eigen maps degree j to eigenvalues on H^j.
TruncatedSeries symmetric_power_series(const std::map<int, std::vector<Cyclotomic>>& graded_eigen, int T);

/// Monomials with a nonzero coefficient in some slice, sorted.
std::vector<Monomial> support(const EquivariantSeries& s);

/// Multiplicities of the characters z^a, a = 0..N-1, in the class function
/// k -> (-1)^{u+v} * (coefficient of m in slice k).
std::vector<Integer> decompose_coefficient(const EquivariantSeries& s, Monomial m,
                                           Genuineness mode = Genuineness::AllowVirtual);

} // namespace equigo
