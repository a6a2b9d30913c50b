#pragma once

#include <cstdint>
#include <vector>

namespace freeset {
namespace bits {

// Fixed-width bit vector indexed mod n, with the cyclic-shift OR used to
// grow signed-sum sets: dst |= { (i + s) mod n : i in src }.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::uint64_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::uint64_t universe() const { return n_; }

    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void or_assign(const Bitset& other);
    // dst |= src rotated so that bit i lands on (i + s) mod n.
    void or_rotated(const Bitset& src, std::uint64_t s);

    std::vector<std::uint64_t> to_values() const;

private:
    // OR `len` bits of src starting at src_begin into *this at dst_begin.
    void or_range(const Bitset& src, std::uint64_t src_begin,
                  std::uint64_t len, std::uint64_t dst_begin);
    std::uint64_t get_bits(std::uint64_t begin, unsigned count) const;
    void or_bits(std::uint64_t begin, std::uint64_t bits, unsigned count);

    std::uint64_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bits
}  // namespace freeset
