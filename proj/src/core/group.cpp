#include "core/group.hpp"

#include <bit>
#include <stdexcept>

namespace cubewalk {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > GroupElement::kMaxDimension)
        throw std::invalid_argument("group dimension must be in [1, " +
                                    std::to_string(GroupElement::kMaxDimension) + "], got " +
                                    std::to_string(n));
}

void check_same_dimension(GroupElement a, GroupElement b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dimension()) +
                                    " vs " + std::to_string(b.dimension()));
}

}  // namespace

GroupElement::GroupElement(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    check_dimension(n);
    if (n < 32 && (bits >> n) != 0)
        throw std::invalid_argument("bit pattern does not fit dimension " + std::to_string(n));
}

GroupElement GroupElement::unit(int n, int position) {
    check_dimension(n);
    if (position < 1 || position > n) throw std::invalid_argument("unit position out of range");
    return {n, std::uint32_t{1} << (n - position)};
}

GroupElement GroupElement::parse(std::string_view text) {
    check_dimension(static_cast<int>(text.size()));
    std::uint32_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("group element must consist of '0'/'1' characters");
        bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return {static_cast<int>(text.size()), bits};
}

bool GroupElement::bit(int position) const {
    if (position < 1 || position > n_) throw std::invalid_argument("bit position out of range");
    return (bits_ >> (n_ - position)) & 1u;
}

std::string GroupElement::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if ((bits_ >> (n_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

GroupElement operator^(GroupElement a, GroupElement b) {
    check_same_dimension(a, b);
    return {a.n_, a.bits_ ^ b.bits_};
}

int hamming_weight(GroupElement x) { return std::popcount(x.index()); }

bool odd_overlap(GroupElement x, GroupElement y) {
    check_same_dimension(x, y);
    return std::popcount(x.index() & y.index()) & 1;
}

std::vector<GroupElement> odd_overlap_set(GroupElement x) {
    std::vector<GroupElement> out;
    const std::uint32_t size = std::uint32_t{1} << x.dimension();
    if (!x.is_zero()) out.reserve(size / 2);
    for (std::uint32_t y = 0; y < size; ++y)
        if (std::popcount(x.index() & y) & 1) out.emplace_back(x.dimension(), y);
    return out;
}

WeightFunction::WeightFunction(int n) : n_(n) { check_dimension(n); }

WeightFunction WeightFunction::from_entries(
    int n, const std::vector<std::pair<std::string, std::int64_t>>& entries) {
    WeightFunction f(n);
    for (const auto& [text, w] : entries) {
        GroupElement x = GroupElement::parse(text);
        if (x.dimension() != n) throw std::invalid_argument("entry '" + text + "' has wrong length");
        if (f.at(x) != 0) throw std::invalid_argument("duplicate entry '" + text + "'");
        f.set(x, w);
    }
    return f;
}

void WeightFunction::set(GroupElement x, std::int64_t w) {
    if (x.dimension() != n_)
        throw std::invalid_argument("weight entry dimension mismatch");
    if (w == 0) {
        entries_.erase(x.index());
        return;
    }
    if (x.is_zero()) throw std::invalid_argument("loop weight not allowed");
    entries_[x.index()] = w;
}

std::int64_t WeightFunction::at(GroupElement x) const {
    if (x.dimension() != n_)
        throw std::invalid_argument("weight lookup dimension mismatch");
    auto it = entries_.find(x.index());
    return it == entries_.end() ? 0 : it->second;
}

std::vector<GroupElement> WeightFunction::support() const {
    std::vector<GroupElement> out;
    out.reserve(entries_.size());
    for (const auto& [bits, w] : entries_) out.emplace_back(n_, bits);
    return out;
}

std::int64_t WeightFunction::total_weight() const {
    std::int64_t sum = 0;
    for (const auto& [bits, w] : entries_) sum += w;
    return sum;
}

GroupElement sigma(const WeightFunction& f) {
    std::uint32_t out = 0;
    for (int b = 0; b < f.dimension(); ++b) {
        std::int64_t sum = 0;
        for (const auto& [bits, w] : f.entries())
            if ((bits >> b) & 1u) sum += w;
        // sum & 1 is the parity for negative values as well
        out |= static_cast<std::uint32_t>(sum & 1) << b;
    }
    return {f.dimension(), out};
}

}  // namespace cubewalk
