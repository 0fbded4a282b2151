#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cubewalk {

// An element of the Boolean group Z_2^n, 1 <= n <= 24. Doubles as a vertex
// label and as the selector of one tensor-product term of the Hamiltonian.
//
// Canonical text form is an n-character '0'/'1' string whose leftmost
// character is position 1 and maps to the most significant bit of index(),
// so "000" -> 0 and "111" -> 7.
class GroupElement {
public:
    static constexpr int kMaxDimension = 24;

    GroupElement(int n, std::uint32_t bits);

    static GroupElement zero(int n) { return {n, 0}; }
    // Standard basis vector e_position: '1' at the given 1-based position
    // counted from the left, '0' elsewhere.
    static GroupElement unit(int n, int position);
    static GroupElement parse(std::string_view text);

    int dimension() const { return n_; }
    std::uint32_t index() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    // 1-based position from the left, matching the text form.
    bool bit(int position) const;
    std::string str() const;

    friend GroupElement operator^(GroupElement a, GroupElement b);

    friend bool operator==(GroupElement a, GroupElement b) = default;
    friend auto operator<=>(GroupElement a, GroupElement b) = default;

private:
    int n_;
    std::uint32_t bits_;
};

int hamming_weight(GroupElement x);

// <x|y> mod 2, the parity of the componentwise product.
bool odd_overlap(GroupElement x, GroupElement y);

// O_x: every y in Z_2^n with <x|y> odd, in ascending index order.
// Empty for x = 0; exactly 2^(n-1) elements otherwise.
std::vector<GroupElement> odd_overlap_set(GroupElement x);

// Integer edge-weight function on Z_2^n \ {0}. Zero-weight entries are absent;
// the identity carries no weight (the graph has no loops).
class WeightFunction {
public:
    explicit WeightFunction(int n);

    static WeightFunction from_entries(
        int n, const std::vector<std::pair<std::string, std::int64_t>>& entries);

    int dimension() const { return n_; }

    // w = 0 erases the entry. Assigning a non-zero weight to the identity throws.
    void set(GroupElement x, std::int64_t w);
    std::int64_t at(GroupElement x) const;

    std::size_t support_size() const { return entries_.size(); }  // Delta
    std::vector<GroupElement> support() const;                    // ascending
    const std::map<std::uint32_t, std::int64_t>& entries() const { return entries_; }
    std::int64_t total_weight() const;

private:
    int n_;
    std::map<std::uint32_t, std::int64_t> entries_;
};

// The transfer/periodicity selector of the weight function: bit i of sigma is
// the parity of the total weight carried by elements with bit i set, i.e.
// sigma_i = sum_{y in O_{e_i}} f(y) mod 2. Parity of a negative weight equals
// the parity of its absolute value.
GroupElement sigma(const WeightFunction& f);

}  // namespace cubewalk
