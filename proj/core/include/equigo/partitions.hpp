#pragma once

#include <cstdint>
#include <vector>

namespace equigo {

/// Partition stored by multiplicities: multiplicities[i - 1] = number of parts equal to i.
/// Trailing zero multiplicities are never stored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> multiplicities);

    const std::vector<int>& multiplicities() const noexcept { return alpha_; }
    /// alpha_i, zero for i beyond the largest part.
    int multiplicity(int part) const noexcept;
    int n() const noexcept { return n_; }
    int num_parts() const noexcept { return num_parts_; }
    /// gcd of the distinct parts; 0 for the empty partition.
    int gcd_parts() const noexcept { return gcd_; }
    /// Parts in descending order.
    std::vector<int> parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> alpha_;
    int n_ = 0;
    int num_parts_ = 0;
    int gcd_ = 0;
};

/// All partitions of n, in reverse lexicographic order of their descending part lists.
std::vector<Partition> enumerate_partitions(int n);

/// p(n, d): partitions of n into exactly d parts.
std::int64_t count_into_exactly_d_parts(int n, int d);
/// P(x, y): partitions of x into parts of size at most y.
std::int64_t count_parts_at_most(int x, int y);

int moebius(int d);
/// Divisors of n in ascending order.
std::vector<int> divisors(int n);
std::int64_t sigma1(int n);

} // namespace equigo
