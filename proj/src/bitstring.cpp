#include "bsr/bitstring.hpp"

#include <bit>

namespace bsr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::length_mismatch: return "length_mismatch";
        case ErrorKind::empty_set: return "empty_set";
        case ErrorKind::zero_width: return "zero_width";
        case ErrorKind::limit_exceeded: return "limit_exceeded";
        case ErrorKind::index_out_of_range: return "index_out_of_range";
        case ErrorKind::size_explosion: return "size_explosion";
        case ErrorKind::too_large: return "too_large";
        case ErrorKind::not_representable: return "not_representable";
        case ErrorKind::uncoverable: return "uncoverable";
        case ErrorKind::invalid_element: return "invalid_element";
        case ErrorKind::internal_invariant: return "internal_invariant";
        case ErrorKind::parse_error: return "parse_error";
    }
    return "unknown";
}

BitString BitString::parse(std::string_view text) {
    BitString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            s.set(i, true);
        else if (text[i] != '0')
            raise(ErrorKind::parse_error,
                  std::string("invalid character '") + text[i] + "' in bit string");
    }
    return s;
}

std::size_t BitString::count_ones() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitString::all_zero() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

BitString BitString::operator&(const BitString& other) const {
    BitString r = *this;
    r &= other;
    return r;
}

BitString BitString::operator|(const BitString& other) const {
    BitString r = *this;
    r |= other;
    return r;
}

BitString& BitString::operator&=(const BitString& other) {
    require_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitString& BitString::operator|=(const BitString& other) {
    require_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitString BitString::operator~() const {
    BitString r = *this;
    for (auto& w : r.words_) w = ~w;
    r.mask_tail();
    return r;
}

bool BitString::operator<(const BitString& other) const {
    if (length_ != other.length_) return length_ < other.length_;
    // Position 1 lives in the low bit of word 0, so compare bit-reversed words.
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t a = words_[i], b = other.words_[i];
        if (a != b) {
            const int diff = std::countr_zero(a ^ b);
            return ((a >> diff) & 1u) < ((b >> diff) & 1u);
        }
    }
    return false;
}

std::string BitString::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (test(i)) out[i] = '1';
    return out;
}

std::size_t BitString::hash() const {
    // FNV-1a over the packed words plus the length.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(length_);
    for (std::uint64_t w : words_) mix(w);
    return static_cast<std::size_t>(h);
}

IndexSet zero_set(const BitString& x) {
    IndexSet out;
    out.reserve(x.length() - x.count_ones());
    for (std::size_t i = 0; i < x.length(); ++i)
        if (!x.test(i)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

IndexSet one_set(const BitString& x) {
    IndexSet out;
    out.reserve(x.count_ones());
    for (std::size_t i = 0; i < x.length(); ++i)
        if (x.test(i)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

}  // namespace bsr
