#pragma once

#include <cstdint>
#include <optional>

namespace freeset {
namespace numeric {

// C(a, b) as uint64, or nullopt on overflow.  C(a, b) = 0 when b > a;
// negative b is represented by callers passing b wrapped (avoided).
std::optional<std::uint64_t> binomial(std::uint64_t a, std::uint64_t b);

// base^exp, or nullopt on overflow.
std::optional<std::uint64_t> pow_checked(std::uint64_t base, std::uint32_t exp);

// a * b, or nullopt on overflow.
std::optional<std::uint64_t> mul_checked(std::uint64_t a, std::uint64_t b);

}  // namespace numeric
}  // namespace freeset
