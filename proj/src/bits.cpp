#include "freeset/bits.hpp"

#include <algorithm>
#include <cassert>

namespace freeset {
namespace bits {

void Bitset::or_assign(const Bitset& other) {
    assert(n_ == other.n_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
}

std::uint64_t Bitset::get_bits(std::uint64_t begin, unsigned count) const {
    // count in [1, 64]; reads may straddle two words.
    std::uint64_t wi = begin >> 6;
    unsigned off = begin & 63;
    std::uint64_t lo = words_[wi] >> off;
    if (off != 0 && wi + 1 < words_.size()) lo |= words_[wi + 1] << (64 - off);
    if (count < 64) lo &= (std::uint64_t(1) << count) - 1;
    return lo;
}

void Bitset::or_bits(std::uint64_t begin, std::uint64_t bits, unsigned count) {
    if (count < 64) bits &= (std::uint64_t(1) << count) - 1;
    std::uint64_t wi = begin >> 6;
    unsigned off = begin & 63;
    words_[wi] |= bits << off;
    if (off != 0 && off + count > 64) words_[wi + 1] |= bits >> (64 - off);
}

void Bitset::or_range(const Bitset& src, std::uint64_t src_begin,
                      std::uint64_t len, std::uint64_t dst_begin) {
    for (std::uint64_t done = 0; done < len; done += 64) {
        unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(64, len - done));
        std::uint64_t bits = src.get_bits(src_begin + done, take);
        if (bits != 0) or_bits(dst_begin + done, bits, take);
    }
}

void Bitset::or_rotated(const Bitset& src, std::uint64_t s) {
    assert(n_ == src.n_);
    s %= n_;
    if (s == 0) {
        or_assign(src);
        return;
    }
    or_range(src, 0, n_ - s, s);
    or_range(src, n_ - s, s, 0);
}

std::vector<std::uint64_t> Bitset::to_values() const {
    std::vector<std::uint64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word != 0) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
            out.push_back((std::uint64_t(w) << 6) | b);
            word &= word - 1;
        }
    }
    return out;
}

}  // namespace bits
}  // namespace freeset
