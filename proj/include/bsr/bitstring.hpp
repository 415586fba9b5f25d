#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsr/errors.hpp"

namespace bsr {

/// Fixed-length binary string packed into 64-bit words.
///
/// The length is immutable after construction and padding bits past it are
/// kept at zero, so whole-word operations (AND, OR, popcount, comparison)
/// need no per-bit masking. Bit positions are 0-based here; user-facing
/// layers (index sets, file formats, reports) are 1-based.
class BitString {
  public:
    static constexpr std::size_t kWordBits = 64;

    /// All-zero string of the given length (length 0 is allowed; it only
    /// arises as the degenerate output of column normalization).
    explicit BitString(std::size_t length = 0)
        : length_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

    static BitString zeros(std::size_t length) { return BitString(length); }

    static BitString ones(std::size_t length) {
        BitString s(length);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    /// Parses a '0'/'1' literal; leftmost character is bit position 1.
    static BitString parse(std::string_view text);

    std::size_t length() const { return length_; }

    bool test(std::size_t pos) const { return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u; }

    void set(std::size_t pos, bool value) {
        const std::uint64_t bit = std::uint64_t{1} << (pos % kWordBits);
        if (value)
            words_[pos / kWordBits] |= bit;
        else
            words_[pos / kWordBits] &= ~bit;
    }

    std::size_t count_ones() const;
    bool all_zero() const;
    bool all_one() const { return count_ones() == length_; }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    BitString operator&(const BitString& other) const;
    BitString operator|(const BitString& other) const;
    BitString operator~() const;

    BitString& operator&=(const BitString& other);
    BitString& operator|=(const BitString& other);

    bool operator==(const BitString& other) const = default;

    /// Lexicographic by character, i.e. position 1 is the most significant.
    bool operator<(const BitString& other) const;

    std::string to_string() const;

    std::size_t hash() const;

  private:
    void mask_tail() {
        if (length_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (length_ % kWordBits)) - 1;
    }

    void require_same_length(const BitString& other) const {
        if (length_ != other.length_)
            raise(ErrorKind::length_mismatch,
                  "operands have lengths " + std::to_string(length_) + " and " +
                      std::to_string(other.length_));
    }

    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& s) const { return s.hash(); }
};

/// 1-based bit positions, sorted ascending. Zero(x) and One(x) partition 1..m.
using IndexSet = std::vector<int>;

IndexSet zero_set(const BitString& x);
IndexSet one_set(const BitString& x);

}  // namespace bsr
