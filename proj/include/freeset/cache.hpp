#pragma once

// Line-delimited JSON result cache for maximum-size computations.  Every
// record carries its own witness, so cached claims are re-proved on load and
// corrupt or stale lines are simply skipped.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freeset::cache {

struct CacheRecord {
    std::uint64_t n = 0;
    std::uint32_t t = 0;
    std::uint64_t s_lower = 0;
    std::uint64_t s_upper = 0;
    bool exact = false;
    std::vector<std::uint64_t> witness;  // a t-free set of size s_lower
    std::string method;
    std::uint64_t elapsed_ms = 0;
};

std::string to_json_line(const CacheRecord& r);

// nullopt when the line is not a JSON object with exactly the expected
// field types.  Validity of the claim itself is verify_record's job.
std::optional<CacheRecord> parse_json_line(const std::string& line);

// The witness must be a strictly increasing list of residues that
// re-verifies as t-free with size s_lower, with s_lower <= s_upper and
// exact implying equality.
bool verify_record(const CacheRecord& r);

struct LoadResult {
    std::map<std::pair<std::uint64_t, std::uint32_t>, CacheRecord> records;  // key (n, t)
    std::size_t skipped = 0;
};

// Later valid lines override earlier ones for the same (n, t).
LoadResult load(std::istream& in);

// Missing file loads as empty.
LoadResult load_file(const std::string& path);

void append_file(const std::string& path, const CacheRecord& r);

}  // namespace freeset::cache
