#pragma once

// Exhaustive and greedy search for large t-free sets.

#include <cstdint>
#include <string>
#include <vector>

#include "freeset/zn.hpp"

namespace freeset::search {

struct SearchBudget {
    double time_limit_s = 0.0;      // 0 = no time limit
    std::uint64_t node_limit = 0;   // 0 = no node limit
    unsigned workers = 1;
    // Restrict top-level branches to first elements that are minimal in
    // their unit-multiplication orbit (an optional symmetry reduction;
    // affects only how fast the maximum size is proved, not the result).
    bool unit_canonicalization = false;
};

enum class SearchStatus { exact, lower_bound_only };

struct MaxResult {
    std::uint64_t n = 0;
    std::uint32_t t = 0;
    std::uint64_t size = 0;   // largest t-free set size found (exact when status says so)
    zn::ResidueSet witness;   // lexicographically smallest maximum set when exact
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

// Maximum size of a t-free set in Z_n, with the lexicographically smallest
// witness of that size.  Runs a branch-and-bound proof of the maximum
// (parallel over first-element branches), then a sequential first-hit scan
// for the witness.  If the budget runs out the result degrades to a
// verified lower bound.
MaxResult exact_max(std::uint64_t n, std::uint32_t t, const SearchBudget& budget = {});

// Grow a t-free set greedily: start from {1} and repeatedly add the
// smallest j whose small multiples j, 2j, ..., tj all avoid the current
// signed sumset of weight <= t.  Throws if n <= t or if no candidate of the
// requested count can be certified.
zn::ResidueSet greedy_t_free(std::uint64_t n, std::uint32_t t, std::uint64_t m);

struct TaggedBound {
    std::uint64_t value;
    std::string source;
};

struct Bounds {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::vector<TaggedBound> lower_candidates;
    std::vector<TaggedBound> upper_candidates;
    std::string note;
};

// Best known lower and upper bounds for the maximum t-free set size in Z_n,
// from explicit constructions and counting arguments.
Bounds bounds(std::uint64_t n, std::uint32_t t);

}  // namespace freeset::search
