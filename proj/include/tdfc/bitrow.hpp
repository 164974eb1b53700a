#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace tdfc {

/// Fixed-width bit vector packed into 64-bit words, with the GF(2) row
/// operations needed by the distribution matrix and the stabilizer tableau.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t n_bits)
        : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_bits_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void toggle(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// this ^= other (rows must have equal width).
    void xor_in(const BitRow& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Parity of the AND of two rows; the symplectic bookkeeping primitive.
    static bool and_parity(const BitRow& a, const BitRow& b) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) {
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return n_bits_;
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tdfc
