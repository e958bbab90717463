#include "equigo/oracle.hpp"

#include "equigo/error.hpp"
#include "equigo/partitions.hpp"
#include "equigo/series.hpp"

namespace equigo {

std::map<int, Cyclotomic> brute_symmetric_power(const GradedEigenSpace& space, int k) {
    if (k < 0) throw Error(Errc::InvalidArgument, "symmetric power index must be nonnegative");
    std::map<int, Cyclotomic> out;
    const int dim = static_cast<int>(space.size());
    // Multisets as nondecreasing index sequences; an odd index may not repeat.
    auto rec = [&](auto&& self, int start, int remaining, int degree, const Cyclotomic& value) -> void {
        if (remaining == 0) {
            out[degree] += value;
            return;
        }
        for (int i = start; i < dim; ++i) {
            const auto& e = space[i];
            const bool odd = e.degree % 2 != 0;
            Cyclotomic next = value * e.eigenvalue;
            if (odd) next = -next;
            self(self, odd ? i + 1 : i, remaining - 1, degree + e.degree, next);
        }
    };
    rec(rec, 0, k, 0, Cyclotomic(1));
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

bool cell_count_identity_check(int n_max, std::string* diagnostic) {
    if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be positive");
    TruncatedSeries product = TruncatedSeries::one(n_max);
    const Cyclotomic one_minus_x[] = {Cyclotomic(1), Cyclotomic(-1)};
    for (int i = 1; i <= n_max; ++i) product = divide_by_polynomial_in(std::move(product), one_minus_x, {i, i - 1, 0});
    auto fail = [&](const std::string& what) {
        if (diagnostic) *diagnostic = what;
        return false;
    };
    for (int n = 0; n <= n_max; ++n) {
        const UVPoly& layer = product.layer(n);
        if (layer.v_degree() > 0) return fail("t^" + std::to_string(n) + " carries a second variable");
        for (int i = 0; i <= std::max(n, layer.u_degree()); ++i) {
            const Cyclotomic got = layer.at(i, 0);
            const std::int64_t d = n - i;
            const std::int64_t want = d < 0 ? 0 : count_into_exactly_d_parts(n, static_cast<int>(d));
            const std::int64_t cells = d < 0 ? 0 : count_parts_at_most(i, static_cast<int>(d));
            if (!(got == Cyclotomic(want)) || want != cells) {
                return fail("t^" + std::to_string(n) + " z^" + std::to_string(i) + ": product " + got.to_string() +
                            ", p(n,n-i) " + std::to_string(want) + ", P(i,n-i) " + std::to_string(cells));
            }
        }
    }
    if (diagnostic) diagnostic->clear();
    return true;
}

} // namespace equigo
