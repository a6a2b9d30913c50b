#include "freeset/zn.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "freeset/bits.hpp"
#include "freeset/numeric.hpp"

namespace freeset::zn {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 62;
// Above this modulus the bitset paths would allocate too much; fall back to
// hashing / meet-in-the-middle.
constexpr std::uint64_t kBitsetLimit = std::uint64_t(1) << 23;
// Cap on enumerated multisets (witness recovery, sigma sums, signed check).
constexpr std::uint64_t kEnumerationCap = 60'000'000;

// Membership test: flat table for small moduli, binary search otherwise.
class Membership {
public:
    Membership(std::uint64_t n, const std::vector<std::uint64_t>& elems)
        : elems_(elems) {
        if (n <= kBitsetLimit) {
            table_.assign(static_cast<std::size_t>(n), 0);
            for (auto e : elems) table_[static_cast<std::size_t>(e)] = 1;
        }
    }
    bool operator()(std::uint64_t r) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(r)] != 0;
        return std::binary_search(elems_.begin(), elems_.end(), r);
    }

private:
    const std::vector<std::uint64_t>& elems_;
    std::vector<std::uint8_t> table_;
};

// ---------------------------------------------------------------------------
// Existence of a violation of exact total size s (left size + right size).

bool exists_size1(const std::vector<std::uint64_t>& elems) {
    // Only (1,0): a single element equal to the empty sum.
    return !elems.empty() && elems.front() == 0;
}

bool exists_size2(std::uint64_t n, const std::vector<std::uint64_t>& elems,
                  const Membership& in) {
    // (1,1) needs two equal distinct residues: impossible.  (2,0): a + b == 0.
    for (auto a : elems) {
        std::uint64_t b = (n - a) % n;
        if (b >= a && in(b)) return true;
    }
    return false;
}

bool exists_size3(std::uint64_t n, const std::vector<std::uint64_t>& elems,
                  const Membership& in) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            std::uint64_t ab = add_mod(elems[i], elems[j], n);
            if (in(ab)) return true;                       // (2,1): a + b == c
            std::uint64_t c = (n - ab) % n;
            if (c >= elems[j] && in(c)) return true;       // (3,0): a + b + c == 0
        }
    }
    return false;
}

// Signed coefficient vector over element indices: strictly increasing
// indices, nonzero coefficients, total absolute weight fixed by context.
using SignedVec = std::vector<std::pair<std::uint32_t, std::int32_t>>;

bool negated_equal(const SignedVec& a, const SignedVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != -b[i].second) return false;
    return true;
}

// Enumerates all signed vectors of exact weight h over elems, calling
// fn(sum mod n, vec).  fn returning true stops the walk.
class SignedEnumerator {
public:
    SignedEnumerator(std::uint64_t n, const std::vector<std::uint64_t>& elems)
        : n_(n), elems_(elems) {}

    template <typename Fn>
    bool walk(std::uint32_t h, Fn&& fn) {
        cur_.clear();
        return step(0, h, 0, fn);
    }

private:
    template <typename Fn>
    bool step(std::uint32_t idx, std::uint32_t left, std::uint64_t sum, Fn& fn) {
        if (left == 0) return fn(sum, cur_);
        if (idx == elems_.size()) return false;
        if (step(idx + 1, left, sum, fn)) return true;
        std::uint64_t add = 0;
        for (std::uint32_t c = 1; c <= left; ++c) {
            add = add_mod(add, elems_[idx], n_);
            cur_.emplace_back(idx, static_cast<std::int32_t>(c));
            if (step(idx + 1, left - c, add_mod(sum, add, n_), fn)) return true;
            cur_.back().second = -static_cast<std::int32_t>(c);
            if (step(idx + 1, left - c, sub_mod(sum, add, n_), fn)) return true;
            cur_.pop_back();
        }
        return false;
    }

    std::uint64_t n_;
    const std::vector<std::uint64_t>& elems_;
    SignedVec cur_;
};

// Meet in the middle: a violation of exact weight s exists iff two signed
// half-vectors of weights ceil(s/2) and floor(s/2) have opposite sums and do
// not cancel to the zero vector.  Buckets keep at most two half-vectors per
// sum: at most one can be the exact negation of a probe.
bool exists_mitm(std::uint64_t n, const std::vector<std::uint64_t>& elems,
                 std::uint32_t s) {
    std::uint32_t h1 = (s + 1) / 2;
    std::uint32_t h2 = s - h1;

    auto shapes = numeric::binomial(elems.size() + h1, h1);
    auto est = shapes ? numeric::mul_checked(*shapes, std::uint64_t(1) << h1) : std::nullopt;
    if (!est || *est > kEnumerationCap)
        throw std::runtime_error("t-free check: set too large for this order");

    struct Bucket {
        std::int32_t ids[2] = {-1, -1};
    };
    std::vector<SignedVec> arena;
    std::unordered_map<std::uint64_t, Bucket> sums;
    sums.reserve(1024);

    SignedEnumerator en(n, elems);
    en.walk(h1, [&](std::uint64_t sum, const SignedVec& v) {
        Bucket& b = sums[sum];
        if (b.ids[0] < 0) {
            b.ids[0] = static_cast<std::int32_t>(arena.size());
            arena.push_back(v);
        } else if (b.ids[1] < 0) {
            b.ids[1] = static_cast<std::int32_t>(arena.size());
            arena.push_back(v);
        }
        return false;
    });

    bool found = false;
    auto probe = [&](std::uint64_t sum, const SignedVec& v) {
        auto it = sums.find((n - sum) % n);
        if (it == sums.end()) return false;
        const Bucket& b = it->second;
        if (b.ids[1] >= 0) {  // two entries: at least one is not -v
            found = true;
            return true;
        }
        if (!negated_equal(arena[static_cast<std::size_t>(b.ids[0])], v)) {
            found = true;
            return true;
        }
        return false;
    };
    if (h2 == 0) {
        probe(0, SignedVec{});
    } else {
        en.walk(h2, probe);
    }
    return found;
}

bool exists_violation_of_size(std::uint64_t n,
                              const std::vector<std::uint64_t>& elems,
                              const Membership& in, std::uint32_t s) {
    switch (s) {
        case 1: return exists_size1(elems);
        case 2: return exists_size2(n, elems, in);
        case 3: return exists_size3(n, elems, in);
        default: return exists_mitm(n, elems, s);
    }
}

// Whole-set check through incremental signed-sum sets: adding x to a t-free S
// stays t-free iff -r*x mod n is outside Gamma^(t-r)(S) for every r in 1..t.
// O(m * t^2 * n/64); only used when the modulus admits bitsets.
bool free_via_gamma(std::uint64_t n, std::uint32_t t,
                    const std::vector<std::uint64_t>& elems) {
    std::vector<bits::Bitset> gam(t);
    for (auto& g : gam) {
        g = bits::Bitset(n);
        g.set(0);
    }
    for (auto x : elems) {
        for (std::uint32_t r = 1; r <= t; ++r) {
            std::uint64_t rx = mul_mod(r % n, x, n);
            if (gam[t - r].test((n - rx) % n)) return false;
        }
        for (std::uint32_t k = t - 1; k >= 1; --k) {
            std::uint64_t rx = 0;
            for (std::uint32_t r = 1; r <= k; ++r) {
                rx = add_mod(rx, x, n);
                gam[k].or_rotated(gam[k - r], rx);
                gam[k].or_rotated(gam[k - r], (n - rx) % n);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical witness recovery at the minimal violation size.

// Enumerates multisets of elems of exact size k as non-decreasing value
// tuples, in lexicographic order.  fn returning true stops the walk.
template <typename Fn>
bool walk_multisets(std::uint64_t n, const std::vector<std::uint64_t>& elems,
                    std::uint32_t k, std::vector<std::uint64_t>& cur,
                    std::size_t start, std::uint64_t sum, Fn& fn) {
    if (cur.size() == k) return fn(sum, cur);
    for (std::size_t i = start; i < elems.size(); ++i) {
        cur.push_back(elems[i]);
        if (walk_multisets(n, elems, k, cur, i, add_mod(sum, elems[i], n), fn))
            return true;
        cur.pop_back();
    }
    return false;
}

std::uint64_t multiset_count(std::size_t m, std::uint32_t k) {
    auto c = numeric::binomial(m + k - 1, k);
    return c ? *c : std::numeric_limits<std::uint64_t>::max();
}

ViolationWitness recover_witness(std::uint64_t n,
                                 const std::vector<std::uint64_t>& elems,
                                 std::uint32_t s) {
    std::optional<ViolationWitness> best;
    auto better = [&](const ViolationWitness& w) {
        if (!best) return true;
        if (w.left != best->left) return w.left < best->left;
        return w.right < best->right;
    };

    for (std::uint32_t k = s; 2 * k >= s; --k) {
        std::uint32_t l = s - k;
        if (multiset_count(elems.size(), k) > kEnumerationCap)
            throw std::runtime_error("t-free witness recovery: set too large");

        // Two lexicographically smallest right sides per sum; two suffice
        // because at most one of them can coincide with a given left side.
        std::unordered_map<std::uint64_t, std::array<std::vector<std::uint64_t>, 2>>
            rights;
        if (l == 0) {
            rights[0];  // the empty sum
        } else {
            std::vector<std::uint64_t> cur;
            auto collect = [&](std::uint64_t sum, const std::vector<std::uint64_t>& v) {
                auto& slot = rights[sum];
                if (slot[0].empty())
                    slot[0] = v;
                else if (slot[1].empty())
                    slot[1] = v;
                return false;
            };
            walk_multisets(n, elems, l, cur, 0, 0, collect);
        }

        std::vector<std::uint64_t> cur;
        auto scan = [&](std::uint64_t sum, const std::vector<std::uint64_t>& v) {
            auto it = rights.find(sum);
            if (it == rights.end()) return false;
            const auto& slot = it->second;
            const std::vector<std::uint64_t>* r = nullptr;
            if (!(k == l && slot[0] == v))
                r = &slot[0];
            else if (!slot[1].empty())
                r = &slot[1];
            if (r == nullptr) return false;
            ViolationWitness w{v, *r};
            if (better(w)) best = std::move(w);
            return true;  // first hit in lex order settles this split
        };
        walk_multisets(n, elems, k, cur, 0, 0, scan);
    }

    if (!best) throw std::logic_error("violation vanished during recovery");
    return *best;
}

}  // namespace

// ---------------------------------------------------------------------------

CyclicContext::CyclicContext(std::uint64_t n_, std::uint32_t t_) : n(n_), t(t_) {
    if (n == 0 || n > kMaxModulus) throw std::invalid_argument("modulus out of range");
    if (t == 0 || t > 64) throw std::invalid_argument("freeness order out of range");
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    std::uint64_t r = a + b;
    if (r >= n) r -= n;
    return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return a >= b ? a - b : a + n - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % n);
}

ResidueSet::ResidueSet(std::uint64_t n) : n_(n) {
    if (n == 0 || n > kMaxModulus) throw std::invalid_argument("modulus out of range");
}

ResidueSet::ResidueSet(std::uint64_t n, std::span<const long long> raw)
    : ResidueSet(n) {
    elems_.reserve(raw.size());
    for (long long v : raw) {
        long long r = v % static_cast<long long>(n);
        if (r < 0) r += static_cast<long long>(n);
        if (r != v) normalized_ = true;
        elems_.push_back(static_cast<std::uint64_t>(r));
    }
    std::sort(elems_.begin(), elems_.end());
    auto last = std::unique(elems_.begin(), elems_.end());
    if (last != elems_.end()) {
        normalized_ = true;
        elems_.erase(last, elems_.end());
    }
}

ResidueSet::ResidueSet(std::uint64_t n, std::vector<std::uint64_t> sorted_unique)
    : ResidueSet(n) {
    for (std::size_t i = 0; i < sorted_unique.size(); ++i) {
        if (sorted_unique[i] >= n ||
            (i > 0 && sorted_unique[i] <= sorted_unique[i - 1]))
            throw std::invalid_argument("residues must be sorted, distinct, in [0, n)");
    }
    elems_ = std::move(sorted_unique);
}

bool ResidueSet::contains(std::uint64_t r) const {
    return std::binary_search(elems_.begin(), elems_.end(), r);
}

std::string ViolationWitness::to_string(std::uint64_t n) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (i) out << " + ";
        out << left[i];
    }
    out << " = ";
    if (right.empty()) {
        out << "(empty)";
    } else {
        for (std::size_t i = 0; i < right.size(); ++i) {
            if (i) out << " + ";
            out << right[i];
        }
    }
    out << " (mod " << n << ")";
    return out.str();
}

TFreeResult is_t_free(const CyclicContext& ctx, const ResidueSet& s) {
    if (s.modulus() != ctx.n)
        throw std::invalid_argument("residue set modulus differs from context");
    const auto& elems = s.elements();
    if (elems.empty()) return {};

    Membership in(ctx.n, elems);

    // Fast whole-set screen for higher orders; the per-size scan below then
    // only runs when a witness actually has to be produced.
    if (ctx.t >= 4 && ctx.n <= kBitsetLimit &&
        free_via_gamma(ctx.n, ctx.t, elems))
        return {};

    for (std::uint32_t size = 1; size <= ctx.t; ++size) {
        if (exists_violation_of_size(ctx.n, elems, in, size))
            return {recover_witness(ctx.n, elems, size)};
    }
    return {};
}

bool is_t_free_signed(const CyclicContext& ctx, const ResidueSet& s) {
    if (s.modulus() != ctx.n)
        throw std::invalid_argument("residue set modulus differs from context");
    const auto& elems = s.elements();
    std::size_t m = elems.size();
    if (m == 0) return true;
    if (auto cnt = numeric::binomial(2 * m + ctx.t, ctx.t); !cnt || *cnt > kEnumerationCap)
        throw std::runtime_error("signed-sum enumeration too large");

    // Multisets of signed terms (element, +1/-1), at most t of them.  A
    // solution is trivial iff every element's + and - counts agree.
    std::vector<std::int32_t> net(m, 0);
    std::uint32_t unbalanced = 0;
    bool violated = false;

    auto rec = [&](auto&& self, std::size_t item, std::uint32_t used,
                   std::uint64_t sum) -> void {
        if (violated) return;
        if (used > 0 && sum == 0 && unbalanced > 0) {
            violated = true;
            return;
        }
        if (used == ctx.t) return;
        for (std::size_t it = item; it < 2 * m && !violated; ++it) {
            std::size_t idx = it >> 1;
            bool plus = (it & 1) == 0;
            std::uint64_t next =
                plus ? add_mod(sum, elems[idx], ctx.n) : sub_mod(sum, elems[idx], ctx.n);
            std::int32_t delta = plus ? 1 : -1;
            if (net[idx] == 0) ++unbalanced;
            net[idx] += delta;
            if (net[idx] == 0) --unbalanced;
            self(self, it, used + 1, next);
            if (net[idx] == 0) ++unbalanced;
            net[idx] -= delta;
            if (net[idx] == 0) --unbalanced;
        }
    };
    rec(rec, 0, 0, 0);
    return !violated;
}

bool SignedSumSet::contains(std::uint64_t r) const {
    return std::binary_search(values.begin(), values.end(), r);
}

SignedSumSet gamma_sums(const CyclicContext& ctx, const ResidueSet& s) {
    if (s.modulus() != ctx.n)
        throw std::invalid_argument("residue set modulus differs from context");
    const auto& elems = s.elements();

    if (ctx.n <= kBitsetLimit) {
        bits::Bitset cur(ctx.n);
        cur.set(0);
        for (std::uint32_t round = 0; round < ctx.t && !elems.empty(); ++round) {
            bits::Bitset next = cur;
            for (auto e : elems) {
                next.or_rotated(cur, e % ctx.n);
                next.or_rotated(cur, (ctx.n - e % ctx.n) % ctx.n);
            }
            cur = std::move(next);
        }
        return {ctx.n, ctx.t, cur.to_values()};
    }

    std::unordered_set<std::uint64_t> cur{0};
    for (std::uint32_t round = 0; round < ctx.t && !elems.empty(); ++round) {
        std::unordered_set<std::uint64_t> next = cur;
        for (auto v : cur) {
            for (auto e : elems) {
                next.insert(add_mod(v, e, ctx.n));
                next.insert(sub_mod(v, e, ctx.n));
            }
            if (next.size() > kEnumerationCap)
                throw std::runtime_error("signed-sum set too large");
        }
        cur = std::move(next);
    }
    std::vector<std::uint64_t> vals(cur.begin(), cur.end());
    std::sort(vals.begin(), vals.end());
    return {ctx.n, ctx.t, std::move(vals)};
}

MultisetSumSet sigma_sums(std::uint64_t n, std::uint32_t h, const ResidueSet& s) {
    if (s.modulus() != n)
        throw std::invalid_argument("residue set modulus differs from context");
    if (h == 0) throw std::invalid_argument("sum length must be at least 1");
    if (s.empty()) throw std::invalid_argument("sigma sums need a nonempty set");

    const auto& elems = s.elements();
    auto total = numeric::binomial(elems.size() + h, h);
    if (!total || *total - 1 > kEnumerationCap)
        throw std::runtime_error("sigma-sum enumeration too large");
    std::uint64_t formal = *total - 1;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(formal, 1 << 20)));
    bool zero_hit = false;

    // Non-decreasing tuples of sizes 1..h; every prefix of a tuple is a
    // formal sum itself, so record sums at every depth.
    auto rec = [&](auto&& self, std::size_t start, std::uint32_t depth,
                   std::uint64_t sum) -> void {
        for (std::size_t i = start; i < elems.size(); ++i) {
            std::uint64_t next = add_mod(sum, elems[i], n);
            if (next == 0) zero_hit = true;
            seen.insert(next);
            if (depth + 1 < h) self(self, i, depth + 1, next);
        }
    };
    rec(rec, 0, 0, 0);

    std::vector<std::uint64_t> vals(seen.begin(), seen.end());
    std::sort(vals.begin(), vals.end());
    bool ok = !zero_hit && vals.size() == formal;
    return {n, h, std::move(vals), formal, ok};
}

}  // namespace freeset::zn
