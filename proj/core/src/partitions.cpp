#include "equigo/partitions.hpp"

#include <numeric>

#include "equigo/error.hpp"

namespace equigo {

namespace {

void require_nonnegative(int x, const char* what) {
    if (x < 0) throw Error(Errc::InvalidArgument, std::string(what) + " must be nonnegative");
}

void require_positive(int x, const char* what) {
    if (x < 1) throw Error(Errc::InvalidArgument, std::string(what) + " must be positive");
}

} // namespace

Partition::Partition(std::vector<int> multiplicities) : alpha_(std::move(multiplicities)) {
    while (!alpha_.empty() && alpha_.back() == 0) alpha_.pop_back();
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (alpha_[i] < 0) throw Error(Errc::InvalidArgument, "negative multiplicity in partition");
        if (alpha_[i] == 0) continue;
        const int part = static_cast<int>(i) + 1;
        n_ += part * alpha_[i];
        num_parts_ += alpha_[i];
        gcd_ = std::gcd(gcd_, part);
    }
}

int Partition::multiplicity(int part) const noexcept {
    if (part < 1 || part > static_cast<int>(alpha_.size())) return 0;
    return alpha_[part - 1];
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    out.reserve(num_parts_);
    for (int i = static_cast<int>(alpha_.size()); i >= 1; --i) out.insert(out.end(), alpha_[i - 1], i);
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    require_nonnegative(n, "partition size");
    std::vector<Partition> out;
    std::vector<int> alpha(static_cast<std::size_t>(n));
    // Fill `remaining` using parts <= largest, largest parts first.
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.emplace_back(alpha);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            ++alpha[part - 1];
            self(self, remaining - part, part);
            --alpha[part - 1];
        }
    };
    rec(rec, n, n);
    return out;
}

std::int64_t count_parts_at_most(int x, int y) {
    require_nonnegative(x, "x");
    require_nonnegative(y, "y");
    std::vector<std::int64_t> ways(static_cast<std::size_t>(x) + 1);
    ways[0] = 1;
    for (int part = 1; part <= std::min(x, y); ++part) {
        for (int s = part; s <= x; ++s) ways[s] += ways[s - part];
    }
    return ways[x];
}

std::int64_t count_into_exactly_d_parts(int n, int d) {
    require_nonnegative(n, "n");
    require_nonnegative(d, "d");
    if (d > n) return 0;
    // p(n, d) = p(n - 1, d - 1) + p(n - d, d): a part equal to 1 or all parts >= 2.
    std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(d) + 1));
    table[0][0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= std::min(m, d); ++k) table[m][k] = table[m - 1][k - 1] + table[m - k][k];
    }
    return table[n][d];
}

int moebius(int d) {
    require_positive(d, "moebius argument");
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
    }
    if (d > 1) result = -result;
    return result;
}

std::vector<int> divisors(int n) {
    require_positive(n, "divisors argument");
    std::vector<int> small;
    std::vector<int> large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t sigma1(int n) {
    std::int64_t total = 0;
    for (int d : divisors(n)) total += d;
    return total;
}

} // namespace equigo
