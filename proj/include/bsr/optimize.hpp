#pragma once

#include <iosfwd>
#include <vector>

#include "bsr/stringset.hpp"

namespace bsr {

/// Exact searches enumerate subsets by increasing size; past this many
/// strings/items they refuse with too_large.
inline constexpr int kDefaultExactBound = 20;

/// Abstract set-cover instance. Elements are arbitrary ints; each subset
/// carries the index of the string (or other object) it came from, which is
/// what the greedy reports and ties are broken on.
struct CoverInstance {
    struct TaggedSubset {
        int tag;
        std::vector<int> elements;
    };
    std::vector<int> universe;
    std::vector<TaggedSubset> subsets;
};

/// Abstract compare-set instance: `item_count` items (0-based) and a family
/// of subsets over them. A compare set is an item subset whose intersections
/// preserve every inclusion and non-inclusion among the family.
class CompareInstance {
  public:
    /// Subsets are normalized (sorted, unique); out-of-range items are
    /// rejected with invalid_element. Empty subsets are legal.
    CompareInstance(int item_count, std::vector<std::vector<int>> subsets);

    int item_count() const { return item_count_; }
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }

  private:
    int item_count_;
    std::vector<std::vector<int>> subsets_;
};

/// Chosen indices (ascending) plus whether the relevant ground-truth checker
/// accepted the answer.
struct SubsetAnswer {
    std::vector<int> chosen;
    bool certified = false;
};

/// Classic greedy cover: repeatedly take the subset covering the most
/// uncovered elements, lowest tag on ties. Throws uncoverable when the
/// subsets cannot cover the universe at all.
SubsetAnswer greedy_set_cover(const CoverInstance& instance);

/// Approximate minimum subset of the strings that still generates the
/// target, by reduction to set cover over zero/one-position pairs (whole
/// position ranges for the all-ones and all-zero targets). With negation a
/// chosen string contributes both orientations, since its complement comes
/// for free. The answer is re-validated by the decision procedure.
/// Throws not_representable when the full set cannot generate the target.
SubsetAnswer min_rep_subset_greedy(const StringSet& w, const BitString& target,
                                   bool allow_negation = false);

/// Exact minimum by increasing-size subset enumeration (first hit in
/// lexicographic index order). Exponential by nature; bounded by
/// `exact_bound`.
SubsetAnswer min_rep_subset_exact(const StringSet& w, const BitString& target,
                                  bool allow_negation = false,
                                  int exact_bound = kDefaultExactBound);

/// Greedy compare set via hitting set: every nonempty difference b_i \ b_j
/// over ordered subset pairs must be hit; repeatedly take the item hitting
/// the most unhit differences, lowest item on ties. Validated by a direct
/// scan of all inclusion relations.
SubsetAnswer greedy_compare_set(const CompareInstance& instance);

/// Approximate minimum subset of the strings that generates every member of
/// the set, as a compare-set problem over the distinct zero-member sets of
/// the normalized instance. Two virtual subsets join the family when the
/// normalized set contains the all-zero / all-one string: the empty set
/// (forcing a hit inside every class) and the full item set (forcing a hit
/// outside every class); without them those two extreme members can be lost
/// even though every inclusion relation survives. Certified by running the
/// decision procedure for every member.
SubsetAnswer min_spanning_subset_greedy(const StringSet& w);

/// Exact minimum spanning subset by increasing-size enumeration.
SubsetAnswer min_spanning_subset_exact(const StringSet& w, int exact_bound = kDefaultExactBound);

/// Set-cover instance as consumed by msc_to_mcs: universe 1..universe_size
/// and a family of subsets.
struct MscInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> family;
};

/// Cover-to-compare reduction: with m = universe_size and n = |family|, the
/// result has m+n items (item i < m stands for universe element i+1, item
/// m+j for family subset j) and 2m subsets: b_i = {a_i} united with the
/// family subsets containing element i, then the m singletons {a_i}. The
/// instance has a compare set of size m+k exactly when the cover instance
/// has a cover of size k.
CompareInstance msc_to_mcs(const MscInstance& instance);

/// Text format: first line "m n", then n lines, each the space-separated
/// 1-based elements of one subset (an empty line is the empty subset).
MscInstance parse_msc_instance(std::istream& in);
void write_msc_instance(std::ostream& out, const MscInstance& instance);

}  // namespace bsr
