#include <numeric>

#include "equigo/error.hpp"
#include "equigo/series.hpp"

namespace equigo {

int gcd_tag(int a, int b) {
    if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "tags are nonnegative");
    return std::gcd(a, b);
}

GcdTaggedSeries GcdTaggedSeries::identity(int trunc) {
    GcdTaggedSeries s(trunc);
    s.add_part(0, TruncatedSeries::one(trunc));
    return s;
}

GcdTaggedSeries GcdTaggedSeries::tagged(const TruncatedSeries& s, int tag) {
    GcdTaggedSeries out(s.trunc());
    out.add_part(tag, s);
    return out;
}

void GcdTaggedSeries::add_term(Monomial m, int tag, const Cyclotomic& value) {
    if (tag < 0) throw Error(Errc::InvalidArgument, "tags are nonnegative");
    auto [it, inserted] = parts_.try_emplace(tag, trunc_);
    it->second.add_term(m, value);
    if (it->second.is_zero()) parts_.erase(it);
}

Cyclotomic GcdTaggedSeries::coeff(Monomial m, int tag) const {
    auto it = parts_.find(tag);
    return it == parts_.end() ? Cyclotomic() : it->second.coeff(m);
}

void GcdTaggedSeries::add_part(int tag, const TruncatedSeries& s) {
    if (tag < 0) throw Error(Errc::InvalidArgument, "tags are nonnegative");
    if (s.trunc() != trunc_) throw Error(Errc::TruncationMismatch, "tagged part has a different truncation");
    auto [it, inserted] = parts_.try_emplace(tag, trunc_);
    it->second += s;
    if (it->second.is_zero()) parts_.erase(it);
}

GcdTaggedSeries& GcdTaggedSeries::operator+=(const GcdTaggedSeries& rhs) {
    for (const auto& [tag, s] : rhs.parts_) add_part(tag, s);
    return *this;
}

bool operator==(const GcdTaggedSeries& a, const GcdTaggedSeries& b) {
    return a.trunc_ == b.trunc_ && a.parts_ == b.parts_;
}


GcdTaggedSeries odot_mul(const GcdTaggedSeries& a, const GcdTaggedSeries& b) {
    if (a.trunc() != b.trunc()) throw Error(Errc::TruncationMismatch, "odot operands have different truncations");
    GcdTaggedSeries out(a.trunc());
    for (const auto& [ta, sa] : a.parts()) {
        for (const auto& [tb, sb] : b.parts()) out.add_part(gcd_tag(ta, tb), mul(sa, sb));
    }
    return out;
}

TruncatedSeries euler_w_4_then_collapse(const GcdTaggedSeries& a) {
    TruncatedSeries out(a.trunc());
    for (const auto& [tag, s] : a.parts()) {
        if (tag == 0) continue;
        const std::int64_t l = tag;
        out += s * Cyclotomic(l * l * l * l);
    }
    return out;
}

} // namespace equigo
