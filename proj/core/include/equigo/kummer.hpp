#pragma once

#include <string>
#include <vector>

#include "equigo/goettsche.hpp"
#include "equigo/uv_poly.hpp"

namespace equigo {

/// Slice k is the trace of g^k on sum_n E(K_n(A); u, v) t^n.
using KummerSeries = EquivariantSeries;

/// Trace of g^k on the Hodge-Deligne polynomial of A: sum (-1)^{p+q} Tr(g^k, H^{p,q}) u^p v^q.
UVPoly e_polynomial_slice(const SurfaceHodgeCharacter& a, int k);

/// Generalized Kummer series of an abelian-surface character (h^{1,0} = 2,
/// InvalidSurface otherwise).  Each slice: odot-product of 1 + w^m (F_m - 1)
/// over m <= T, Euler operator (w d/dw)^4 at w = 1, then exact division of
/// every t-layer by the E(A) slice (NonPolynomialQuotient if not divisible).
KummerSeries kummer_equivariant(const SurfaceHodgeCharacter& a, int T);
TruncatedSeries kummer_slice(const SurfaceHodgeCharacter& a, int k, int T);

/// E(K_n(A); u, v) from the closed partition-sum formula.  Throws
/// NonPolynomialQuotient or NonIntegralCoefficient if the division by
/// ((1-u)(1-v))^2 is not exact or not integral.
UVPoly kummer_hodge_closed(int n);

struct KummerEulerComparison {
    /// e(K_n) for n = 1..T, from kummer_equivariant at g = 1.
    std::vector<Integer> euler;
    /// Coefficient of q^n, n = 1..T, in (q d/dq)^3 / 24 applied to E_2 = 1 - 24 sum sigma_1(n) q^n.
    std::vector<Integer> e2_side;
    /// s with euler = s * e2_side, or 0 when no single global sign works.
    int global_sign = 0;
};
KummerEulerComparison kummer_euler_numbers(int T);

/// h^{p,q} = (-1)^{p+q} [u^p v^q] E as a diamond, top row p = q = 0.
std::string render_hodge_diamond(const UVPoly& e_poly);

} // namespace equigo
