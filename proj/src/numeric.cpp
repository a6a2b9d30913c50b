#include "freeset/numeric.hpp"

#include <limits>

namespace freeset {
namespace numeric {

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::optional<std::uint64_t> mul_checked(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return std::nullopt;
    return a * b;
}

std::optional<std::uint64_t> pow_checked(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        auto next = mul_checked(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

std::optional<std::uint64_t> binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    constexpr unsigned __int128 kMax128 = ~static_cast<unsigned __int128>(0);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        std::uint64_t f = a - b + i;
        if (r > kMax128 / f) return std::nullopt;
        r = r * f / i;  // exact: r is C(a-b+i, i) after this step
        if (r > kMax) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace numeric
}  // namespace freeset
