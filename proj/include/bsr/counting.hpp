#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bsr/stringset.hpp"

namespace bsr {

/// Counting results are arbitrary-precision: antichain counts outgrow 64
/// bits quickly and the negation-enabled count is a plain power of two.
using BigCount = boost::multiprecision::cpp_int;

/// Enumeration bound for the exact counters; the memo table is keyed by
/// element bitmask, so this also caps memory.
inline constexpr int kDefaultCountingBound = 30;

/// Finite poset given as a reflexive-transitive "less or equal" relation.
/// Construction closes the input pairs transitively and rejects
/// antisymmetry violations.
class AbstractPoset {
  public:
    /// `relations` holds 0-based (a, b) pairs meaning a <= b.
    AbstractPoset(int size, const std::vector<std::pair<int, int>>& relations);

    int size() const { return static_cast<int>(up_.size()); }
    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)] >> b & 1u; }

    /// Bitmask of {b : a <= b}, including a itself.
    std::uint64_t up_mask(int a) const { return up_[static_cast<std::size_t>(a)]; }
    std::uint64_t down_mask(int a) const { return down_[static_cast<std::size_t>(a)]; }

  private:
    std::vector<std::uint64_t> up_;
    std::vector<std::uint64_t> down_;
};

/// Bit positions of a normalized set grouped by identical zero-member sets,
/// ordered by inclusion of those sets. This is the structure whose upper
/// sets are in bijection with the generable strings.
struct ClassPoset {
    /// classes[c]: 1-based original positions sharing one member set,
    /// ascending; classes ordered by smallest member position.
    std::vector<std::vector<int>> classes;
    /// The common zero-member set of each class (0-based indices into the
    /// deduplicated string list).
    std::vector<std::vector<std::int32_t>> class_members;
    /// leq[a * classes.size() + b]: members of class a form a subset of
    /// members of class b.
    std::vector<bool> leq;

    int size() const { return static_cast<int>(classes.size()); }
    bool less_equal(int a, int b) const {
        return leq[static_cast<std::size_t>(a) * classes.size() + static_cast<std::size_t>(b)];
    }

    /// Forgets the positions, keeping only the order structure.
    AbstractPoset to_abstract() const;
};

/// Deduplicates the strings, strips constant columns, then groups the
/// surviving positions by identical zero-member sets.
ClassPoset build_poset(const StringSet& w);

/// Exact antichain count by pivot decomposition (antichains avoiding the
/// pivot plus antichains containing it), memoized on the surviving-element
/// bitmask. Throws too_large past `bound` elements.
BigCount count_antichains(const AbstractPoset& p, int bound = kDefaultCountingBound);
BigCount count_antichains(const ClassPoset& p, int bound = kDefaultCountingBound);

/// Exact upper-set count by the dual decomposition (upper sets avoiding the
/// pivot exclude its down-set; those containing it include its up-set).
/// Equals count_antichains on every poset.
BigCount count_upper_sets(const AbstractPoset& p, int bound = kDefaultCountingBound);
BigCount count_upper_sets(const ClassPoset& p, int bound = kDefaultCountingBound);

/// Number of distinct strings generable from the set under AND/OR: the
/// upper-set count of its class poset.
BigCount count_representable(const StringSet& w, int bound = kDefaultCountingBound);

/// Number of distinct strings generable when NOT is allowed as well:
/// 2^(class count of the complement-extended set). All classes of that
/// poset are pairwise incomparable; this is asserted and a violation
/// reported as internal_invariant.
BigCount count_with_negation(const StringSet& w);

/// The class count |U| behind count_with_negation, for reporting.
int negation_class_count(const StringSet& w);

/// Builds a string set whose generable-string count equals the antichain
/// count of the poset: one string per element with zeros exactly on the
/// elements above it, plus one all-ones string. The extra string keeps every
/// column non-constant (a poset with a global maximum would otherwise pin an
/// all-zero column) without touching any zero-member set.
StringSet poset_to_instance(const AbstractPoset& p);

/// Text format: first line "p", then lines "i j" asserting i <= j
/// (1-based); the reflexive-transitive closure is taken on load and
/// antisymmetry violations are load errors.
AbstractPoset parse_poset(std::istream& in);
AbstractPoset load_poset(const std::string& path);

}  // namespace bsr
