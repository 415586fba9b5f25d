#pragma once

#include <cstddef>
#include <vector>

#include "bsr/stringset.hpp"

namespace bsr {

inline constexpr std::size_t kDefaultClosureLimit = std::size_t{1} << 20;

/// Brute-force fixpoint of the string set under bitwise AND and OR; with
/// `allow_negation` the complements of the members are seeded as well, which
/// makes the result closed under NOT too. Every returned string is generable
/// by some formula over the set and vice versa; the seeds themselves are
/// members because formulas have at least one operand.
///
/// This is the ground-truth oracle the fast paths are tested against, so it
/// stays deliberately simple. Throws limit_exceeded once the fixpoint grows
/// past `limit`.
std::vector<BitString> closure(const StringSet& w, bool allow_negation = false,
                               std::size_t limit = kDefaultClosureLimit);

/// Membership in the closure without materializing it (still exhaustive).
bool closure_contains(const StringSet& w, const BitString& target, bool allow_negation = false,
                      std::size_t limit = kDefaultClosureLimit);

}  // namespace bsr
