#pragma once

// Arithmetic of t-free sets in the cyclic group Z_n.
//
// A set S of residues is t-free when no sum of k elements of S (repetition
// allowed) equals a sum of l elements of S modulo n for k + l <= t, except
// identically (k = l and the same multiset on both sides).  Equivalently,
// e_1 x_1 + ... + e_t x_t == 0 (mod n) with e_i in {0,+1,-1} and x_i in S
// has only solutions whose net coefficient vector is zero.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace freeset::zn {

// Modulus plus the freeness order t.  n >= 1, t >= 1.
struct CyclicContext {
    std::uint64_t n;
    std::uint32_t t;

    CyclicContext(std::uint64_t n_, std::uint32_t t_);
};

// Sorted set of distinct residues in [0, n).  Raw input values are reduced
// mod n and deduplicated on ingestion; when that changes anything the
// instance carries a warning flag so callers can surface it.
class ResidueSet {
public:
    explicit ResidueSet(std::uint64_t n);
    ResidueSet(std::uint64_t n, std::span<const long long> raw);
    ResidueSet(std::uint64_t n, std::vector<std::uint64_t> sorted_unique);

    std::uint64_t modulus() const { return n_; }
    const std::vector<std::uint64_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(std::uint64_t r) const;
    // True when ingestion had to reduce mod n or drop duplicates.
    bool normalized_on_ingest() const { return normalized_; }

private:
    std::uint64_t n_ = 1;
    std::vector<std::uint64_t> elems_;
    bool normalized_ = false;
};

// One equation sum(left) == sum(right) (mod n) witnessing a violation.
// Both sides are sorted ascending; |left| >= |right|; |left| + |right| <= t;
// all members belong to the checked set.  Canonical: minimal |left|+|right|,
// then lexicographically smallest (left, right).
struct ViolationWitness {
    std::vector<std::uint64_t> left;
    std::vector<std::uint64_t> right;

    std::string to_string(std::uint64_t n) const;
};

struct TFreeResult {
    std::optional<ViolationWitness> violation;

    bool t_free() const { return !violation.has_value(); }
};

// Decides t-freeness; on failure returns the canonical witness.
TFreeResult is_t_free(const CyclicContext& ctx, const ResidueSet& s);

// Same predicate through the signed-sum formulation (direct enumeration of
// e-assignments).  Exponential in t; meant for small inputs and as a
// cross-check against is_t_free.
bool is_t_free_signed(const CyclicContext& ctx, const ResidueSet& s);

// All signed sums e_1 x_1 + ... + e_k x_k mod n with k <= t.  Contains 0,
// closed under negation, contains S when t >= 1, size <= 3^t * |S|^t.
struct SignedSumSet {
    std::uint64_t n;
    std::uint32_t t;
    std::vector<std::uint64_t> values;  // sorted ascending

    bool contains(std::uint64_t r) const;
};

SignedSumSet gamma_sums(const CyclicContext& ctx, const ResidueSet& s);

// All sums of 1..h elements of S with repetition, mod n.  For a t-free S
// with h = floor(t/2) every formal sum is distinct and nonzero, so
// |values| = C(m+h, h) - 1.
struct MultisetSumSet {
    std::uint64_t n;
    std::uint32_t h;
    std::vector<std::uint64_t> values;   // sorted ascending
    std::uint64_t formal_count;          // number of multisets of size 1..h
    bool all_distinct_nonzero;
};

MultisetSumSet sigma_sums(std::uint64_t n, std::uint32_t h, const ResidueSet& s);

// Modular helpers shared across modules.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

}  // namespace freeset::zn
