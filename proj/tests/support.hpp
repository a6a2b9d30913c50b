#pragma once

// Independent brute-force reference implementations used to validate the
// library.  Everything here favors obviousness over speed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace freeset::test {

using Multiset = std::vector<std::uint64_t>;  // sorted ascending, repeats allowed

// All non-decreasing k-tuples over elems (given sorted ascending).
inline std::vector<Multiset> all_multisets(const std::vector<std::uint64_t>& elems,
                                           std::size_t k) {
    std::vector<Multiset> out;
    Multiset cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < elems.size(); ++i) {
            cur.push_back(elems[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::uint64_t sum_mod(const Multiset& v, std::uint64_t n) {
    std::uint64_t s = 0;
    for (auto x : v) s = (s + x % n) % n;
    return s;
}

// Reference t-freeness check: literally enumerate every pair of multisets
// with |left| >= |right| and |left| + |right| <= t, and compare sums mod n.
// Returns the canonical witness (smallest total size, then lexicographically
// smallest (left, right)) or nullopt when the set is t-free.
inline std::optional<std::pair<Multiset, Multiset>> naive_violation(
    std::uint64_t n, std::uint32_t t, const std::vector<std::uint64_t>& elems) {
    for (std::uint32_t s = 1; s <= t; ++s) {
        std::optional<std::pair<Multiset, Multiset>> best;
        for (std::uint32_t k = (s + 1) / 2; k <= s; ++k) {
            std::uint32_t l = s - k;
            for (const auto& left : all_multisets(elems, k)) {
                for (const auto& right : all_multisets(elems, l)) {
                    if (k == l && left == right) continue;
                    if (sum_mod(left, n) != sum_mod(right, n)) continue;
                    std::pair<Multiset, Multiset> cand{left, right};
                    if (!best || cand < *best) best = cand;
                }
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

// Reference signed formulation: coefficient vectors c with sum |c_i| <= t,
// c != 0, testing sum c_i * a_i == 0 (mod n).
inline bool naive_signed_free(std::uint64_t n, std::uint32_t t,
                              const std::vector<std::uint64_t>& elems) {
    std::vector<std::int64_t> c(elems.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t budget, bool any) -> bool {
        if (i == elems.size()) {
            if (!any) return true;
            __int128 acc = 0;
            for (std::size_t j = 0; j < elems.size(); ++j)
                acc += static_cast<__int128>(c[j]) * static_cast<__int128>(elems[j] % n);
            auto r = static_cast<std::int64_t>(((acc % n) + n) % n);
            return r != 0;
        }
        for (std::int64_t v = -static_cast<std::int64_t>(budget);
             v <= static_cast<std::int64_t>(budget); ++v) {
            c[i] = v;
            std::uint32_t used = static_cast<std::uint32_t>(v < 0 ? -v : v);
            if (!self(self, i + 1, budget - used, any || v != 0)) return false;
        }
        c[i] = 0;
        return true;
    };
    return rec(rec, 0, t, false);
}

// Exhaustive maximum t-free set by depth-first search over all subsets of
// {0..n-1}, pruning any prefix that already violates (t-freeness is closed
// under taking subsets).  The first maximum found in this order is the
// lexicographically smallest one.
inline std::pair<std::uint64_t, std::vector<std::uint64_t>> naive_max_t_free(std::uint64_t n,
                                                                             std::uint32_t t) {
    std::vector<std::uint64_t> cur, best;
    auto rec = [&](auto&& self, std::uint64_t from) -> void {
        if (cur.size() > best.size()) best = cur;
        for (std::uint64_t v = from; v < n; ++v) {
            cur.push_back(v);
            if (!naive_violation(n, t, cur)) self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return {best.size(), best};
}

// All subsets of {0..n-1} of size <= cap, for exhaustive cross-checks.
inline void for_each_subset(std::uint64_t n, std::size_t cap,
                            const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> cur;
    auto rec = [&](auto&& self, std::uint64_t from) -> void {
        fn(cur);
        if (cur.size() == cap) return;
        for (std::uint64_t v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace freeset::test
