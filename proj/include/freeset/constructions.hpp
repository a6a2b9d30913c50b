#pragma once

// Explicit t-free sets with provable sizes.

#include <cstdint>
#include <optional>

#include "freeset/zn.hpp"

namespace freeset::constructions {

enum class Method {
    powers,
    closed_form_t1,
    closed_form_t2,
    odd_below_half,
    odd_below_third,
    p_mod_6,
    greedy,
};

const char* method_name(Method m);

struct ConstructionResult {
    zn::ResidueSet set;
    Method method;
    // Size the construction provably attains; always equals set.size().
    std::uint64_t guaranteed_size;
    // For p_mod_6: the divisor p = 6q + 5 used and q.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> case_data;
};

// {1, t, t^2, ..., t^(m-1)} with m maximal subject to t^m <= n - 1; t-free
// because n > t^m.  Requires t >= 2 and n > t.
ConstructionResult powers_construction(std::uint64_t n, std::uint32_t t);

// Maximum t-free sets for t = 1 ({1..n-1}) and t = 2 ({1..floor((n-1)/2)}).
ConstructionResult closed_form(std::uint64_t n, std::uint32_t t);

// A maximum 3-free set: odd residues below n/2 for even n; for odd n with a
// prime divisor p = 6q+5 the set {ip + 2j + 1}; otherwise odd residues below
// n/3.
ConstructionResult three_free_construct(std::uint64_t n);

// Smallest prime divisor of n congruent to 5 mod 6, if any.
std::optional<std::uint64_t> smallest_divisor_5_mod_6(std::uint64_t n);

}  // namespace freeset::constructions
