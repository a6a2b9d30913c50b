#include "freeset/constructions.hpp"

#include <stdexcept>
#include <vector>

#include "freeset/numeric.hpp"

namespace freeset::constructions {

const char* method_name(Method m) {
    switch (m) {
        case Method::powers: return "powers";
        case Method::closed_form_t1: return "closed-form-t1";
        case Method::closed_form_t2: return "closed-form-t2";
        case Method::odd_below_half: return "odd-below-half";
        case Method::odd_below_third: return "odd-below-third";
        case Method::p_mod_6: return "p-mod-6";
        case Method::greedy: return "greedy";
    }
    return "?";
}

ConstructionResult powers_construction(std::uint64_t n, std::uint32_t t) {
    if (t < 2) throw std::invalid_argument("powers construction needs t >= 2");
    if (n <= t) throw std::invalid_argument("powers construction needs n > t");
    std::vector<std::uint64_t> vals;
    std::uint64_t power = 1;
    // Keep 1, t, ..., t^(m-1) while t^m <= n - 1, so every signed sum of at
    // most t elements stays strictly inside (-n, n) and base-t uniqueness
    // rules out collisions.
    for (;;) {
        auto cap = numeric::mul_checked(power, t);
        if (!cap || *cap > n - 1) break;
        vals.push_back(power);
        power = *cap;
    }
    zn::ResidueSet set(n, std::move(vals));
    std::uint64_t size = set.size();
    return {std::move(set), Method::powers, size, std::nullopt};
}

ConstructionResult closed_form(std::uint64_t n, std::uint32_t t) {
    if (t != 1 && t != 2) throw std::invalid_argument("closed form only for t = 1, 2");
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    std::uint64_t hi = (t == 1) ? n - 1 : (n - 1) / 2;
    std::vector<std::uint64_t> vals;
    vals.reserve(hi);
    for (std::uint64_t v = 1; v <= hi; ++v) vals.push_back(v);
    zn::ResidueSet set(n, std::move(vals));
    std::uint64_t size = set.size();
    return {std::move(set), t == 1 ? Method::closed_form_t1 : Method::closed_form_t2, size,
            std::nullopt};
}

std::optional<std::uint64_t> smallest_divisor_5_mod_6(std::uint64_t n) {
    // Enumerate prime divisors in increasing order by trial division and
    // return the first one congruent to 5 mod 6.
    while (n % 2 == 0) n /= 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d) continue;
        if (d % 6 == 5) return d;
        while (n % d == 0) n /= d;
    }
    if (n > 1 && n % 6 == 5) return n;
    return std::nullopt;
}

ConstructionResult three_free_construct(std::uint64_t n) {
    std::vector<std::uint64_t> vals;
    if (n % 2 == 0) {
        // Odd residues below n/2: sums of two are even, sums of three are
        // odd and below 3n/2, so x + y = z and x + y + z = 0 are both
        // unreachable mod n.
        for (std::uint64_t v = 1; 2 * v < n; v += 2) vals.push_back(v);
        zn::ResidueSet set(n, std::move(vals));
        std::uint64_t size = set.size();
        return {std::move(set), Method::odd_below_half, size, std::nullopt};
    }
    if (auto p = smallest_divisor_5_mod_6(n)) {
        std::uint64_t q = (*p - 5) / 6;
        // {ip + 2j + 1 : 0 <= i < n/p, 0 <= j <= q}: reduced mod p these are
        // the odd-type residues {1, 3, ..., 2q+1}, a maximum 3-free set in
        // Z_p, and the lift across the n/p blocks preserves 3-freeness.
        for (std::uint64_t i = 0; i < n / *p; ++i)
            for (std::uint64_t j = 0; j <= q; ++j) vals.push_back(i * *p + 2 * j + 1);
        zn::ResidueSet set(n, std::move(vals));
        std::uint64_t size = set.size();
        return {std::move(set), Method::p_mod_6, size, std::make_pair(*p, q)};
    }
    // Odd residues strictly below n/3: pairwise sums are even, triple sums
    // are odd and below n, so neither equation has a wraparound solution.
    for (std::uint64_t v = 1; 3 * v < n; v += 2) vals.push_back(v);
    zn::ResidueSet set(n, std::move(vals));
    std::uint64_t size = set.size();
    return {std::move(set), Method::odd_below_third, size, std::nullopt};
}

}  // namespace freeset::constructions
