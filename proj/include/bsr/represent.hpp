#pragma once

#include <optional>

#include "bsr/formula.hpp"
#include "bsr/kernels.hpp"
#include "bsr/stringset.hpp"

namespace bsr {

/// For every bit position of a set: which strings have a 0 there, and the
/// bitwise OR of exactly those strings. The join for a position is only
/// defined when its member list is nonempty.
class ZeroFamily {
  public:
    ZeroFamily(std::size_t width, kernels::FamilySlice slice)
        : width_(width), slice_(std::move(slice)) {}

    std::size_t width() const { return width_; }

    /// Indices (0-based) of strings whose bit at 1-based `position` is 0.
    const std::vector<std::int32_t>& members(int position) const {
        return slice_.members[static_cast<std::size_t>(position - 1)];
    }

    /// OR over members(position); nullopt when no string has a 0 there.
    std::optional<BitString> join(int position) const {
        if (members(position).empty()) return std::nullopt;
        return slice_.joins[static_cast<std::size_t>(position - 1)];
    }

  private:
    std::size_t width_;
    kernels::FamilySlice slice_;
};

/// Outcome of a representability query. The witness is present exactly when
/// the target is representable and evaluates to the target bit for bit.
struct Verdict {
    bool representable;
    std::optional<CnfFormula> witness;
};

/// Member lists and joins for all positions 1..width.
ZeroFamily build_family(const StringSet& w, kernels::Policy policy = kernels::Policy::parallel);

/// Decides whether the target is generable from the set under bitwise
/// AND/OR and extracts a CNF witness when it is. O(m^2 n) bit operations,
/// word-packed.
Verdict decide(const StringSet& w, const BitString& target,
               kernels::Policy policy = kernels::Policy::parallel);

/// Same decision with NOT allowed, via the set extended with all member
/// complements; witness leaves that refer to a complement are reported as
/// negated leaves of the original index.
Verdict decide_with_negation(const StringSet& w, const BitString& target,
                             kernels::Policy policy = kernels::Policy::parallel);

}  // namespace bsr
