#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bsr/bitstring.hpp"

namespace bsr {

/// Ordered collection of equal-length bit strings. Every string keeps its
/// 0-based position in the input; duplicates are retained (minimization
/// answers refer to input indices) and only stripped where multiplicity is
/// irrelevant (closure, counting).
class StringSet {
  public:
    /// Throws empty_set for n = 0 and length_mismatch on ragged input.
    /// Width 0 is legal only for the degenerate output of normalize().
    explicit StringSet(std::vector<BitString> strings);

    std::size_t width() const { return width_; }
    std::size_t size() const { return strings_.size(); }

    const BitString& operator[](std::size_t i) const { return strings_[i]; }
    const std::vector<BitString>& strings() const { return strings_; }

    /// Member strings at the given indices, in the given order.
    StringSet subset(const std::vector<int>& indices) const;

    /// Distinct strings, first occurrence kept, order preserved.
    StringSet deduplicated() const;

    bool operator==(const StringSet& other) const = default;

  private:
    std::size_t width_;
    std::vector<BitString> strings_;
};

/// A set extended with the complement of every member, deduplicated.
/// leaves[i] tells which original string (and orientation) backs augmented
/// index i.
struct AugmentedSet {
    struct Leaf {
        int index;
        bool negated;
    };
    StringSet set;
    std::vector<Leaf> leaves;
};

AugmentedSet with_complements(const StringSet& w);

/// Records which columns normalize() kept and the constant value of every
/// dropped one, so original-width strings can be reconstructed exactly.
struct NormalizationMap {
    IndexSet kept_columns;          // 1-based original positions, ascending
    std::map<int, bool> forced_bits;  // dropped position -> constant value

    /// Inverse transform: widen a kept-width string back to the original width.
    BitString reinsert(const BitString& reduced) const;
};

struct Normalized {
    StringSet set;
    NormalizationMap map;
};

/// Drops every constant column. The result has no all-zero and no all-one
/// column; if every column was constant the width collapses to 0 (n empty
/// strings), which only the counting layer accepts as input.
Normalized normalize(const StringSet& w);

/// Text format: one '0'/'1' string per line, '#' comments and blank lines
/// ignored, all data lines of equal length, leftmost character = position 1.
StringSet parse_string_set(std::istream& in);
StringSet load_string_set(const std::string& path);
void write_string_set(std::ostream& out, const StringSet& w);

}  // namespace bsr
