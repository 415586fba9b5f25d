#include "bsr/optimize.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bsr/represent.hpp"

namespace bsr {

CompareInstance::CompareInstance(int item_count, std::vector<std::vector<int>> subsets)
    : item_count_(item_count), subsets_(std::move(subsets)) {
    if (item_count_ < 0) raise(ErrorKind::invalid_element, "negative item count");
    for (auto& b : subsets_) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int item : b)
            if (item < 0 || item >= item_count_)
                raise(ErrorKind::invalid_element, "item " + std::to_string(item) +
                                                      " outside 0.." +
                                                      std::to_string(item_count_ - 1));
    }
}

SubsetAnswer greedy_set_cover(const CoverInstance& instance) {
    // Dense element ids to keep the covered map flat.
    std::unordered_map<int, int> dense;
    dense.reserve(instance.universe.size());
    for (int e : instance.universe) dense.emplace(e, static_cast<int>(dense.size()));

    std::vector<std::vector<int>> subsets(instance.subsets.size());
    std::vector<char> coverable(dense.size(), 0);
    for (std::size_t i = 0; i < instance.subsets.size(); ++i) {
        for (int e : instance.subsets[i].elements)
            if (auto it = dense.find(e); it != dense.end()) {
                subsets[i].push_back(it->second);
                coverable[static_cast<std::size_t>(it->second)] = 1;
            }
        // Repeated elements must not inflate gains.
        std::sort(subsets[i].begin(), subsets[i].end());
        subsets[i].erase(std::unique(subsets[i].begin(), subsets[i].end()), subsets[i].end());
    }
    if (std::find(coverable.begin(), coverable.end(), 0) != coverable.end())
        raise(ErrorKind::uncoverable, "the subsets do not cover the universe");

    std::vector<char> covered(dense.size(), 0);
    std::size_t remaining = dense.size();
    std::vector<int> chosen;
    while (remaining > 0) {
        std::size_t best = subsets.size();
        std::size_t best_gain = 0;
        int best_tag = 0;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            std::size_t gain = 0;
            for (int e : subsets[i])
                if (!covered[static_cast<std::size_t>(e)]) ++gain;
            const int tag = instance.subsets[i].tag;
            if (gain > best_gain || (gain == best_gain && gain > 0 && tag < best_tag)) {
                best = i;
                best_gain = gain;
                best_tag = tag;
            }
        }
        for (int e : subsets[best])
            if (!covered[static_cast<std::size_t>(e)]) {
                covered[static_cast<std::size_t>(e)] = 1;
                --remaining;
            }
        chosen.push_back(instance.subsets[best].tag);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    return {std::move(chosen), true};
}

namespace {

Verdict run_decide(const StringSet& w, const BitString& target, bool allow_negation) {
    return allow_negation ? decide_with_negation(w, target) : decide(w, target);
}

/// Pair (zero position, one position) encoded densely against the target's
/// zero/one index sets.
struct PairCodec {
    std::vector<int> zero_rank;  // per 0-based column, rank within Zero(target) or -1
    std::vector<int> one_rank;
    int one_count = 0;

    explicit PairCodec(const BitString& target)
        : zero_rank(target.length(), -1), one_rank(target.length(), -1) {
        int zr = 0, orank = 0;
        for (std::size_t i = 0; i < target.length(); ++i)
            if (target.test(i))
                one_rank[i] = orank++;
            else
                zero_rank[i] = zr++;
        one_count = orank;
    }

    int encode(std::size_t zero_pos, std::size_t one_pos) const {
        return zero_rank[zero_pos] * one_count + one_rank[one_pos];
    }
};

/// Elements of Zero(s_i) x One(s_i) clipped to the universe of the target.
void append_pair_elements(std::vector<int>& out, const PairCodec& codec, const BitString& target,
                          const BitString& s) {
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (s.test(i) || target.test(i)) continue;  // need a 0 in s at a 0 of the target
        for (std::size_t j = 0; j < s.length(); ++j)
            if (s.test(j) && target.test(j)) out.push_back(codec.encode(i, j));
    }
}

CoverInstance minrep_cover_instance(const StringSet& w, const BitString& target,
                                    bool allow_negation) {
    CoverInstance instance;
    const bool ones_target = target.all_one();
    const bool zeros_target = target.all_zero();
    if (ones_target || zeros_target) {
        // Position cover: the all-ones target needs every position hit by a
        // 1, the all-zero target a 1 of the complemented strings (i.e. a 0).
        for (std::size_t i = 0; i < target.length(); ++i)
            instance.universe.push_back(static_cast<int>(i) + 1);
        for (std::size_t k = 0; k < w.size(); ++k) {
            IndexSet elements = ones_target ? one_set(w[k]) : zero_set(w[k]);
            if (allow_negation) {
                // The complement contributes the other orientation, which
                // together spans every position.
                elements = instance.universe;
            }
            instance.subsets.push_back({static_cast<int>(k), std::move(elements)});
        }
        return instance;
    }

    const PairCodec codec(target);
    for (std::size_t i = 0; i < target.length(); ++i) {
        if (target.test(i)) continue;
        for (std::size_t j = 0; j < target.length(); ++j)
            if (target.test(j))
                instance.universe.push_back(codec.encode(i, j));
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<int> elements;
        append_pair_elements(elements, codec, target, w[k]);
        if (allow_negation) append_pair_elements(elements, codec, target, ~w[k]);
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        instance.subsets.push_back({static_cast<int>(k), std::move(elements)});
    }
    return instance;
}

}  // namespace

SubsetAnswer min_rep_subset_greedy(const StringSet& w, const BitString& target,
                                   bool allow_negation) {
    if (!run_decide(w, target, allow_negation).representable)
        raise(ErrorKind::not_representable,
              "target " + target.to_string() + " is not generable from the set");

    SubsetAnswer answer = greedy_set_cover(minrep_cover_instance(w, target, allow_negation));
    answer.certified = run_decide(w.subset(answer.chosen), target, allow_negation).representable;
    return answer;
}

namespace {

/// Calls `visit` on every size-k index combination in lexicographic order
/// until it returns true; reports whether any did.
template <typename Visit>
bool for_each_combination(int n, int k, Visit visit) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(combo)) return true;
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void check_exact_bound(std::size_t n, int exact_bound) {
    if (n > static_cast<std::size_t>(exact_bound))
        raise(ErrorKind::too_large, "exact search over " + std::to_string(n) +
                                        " strings exceeds the bound " +
                                        std::to_string(exact_bound));
}

}  // namespace

SubsetAnswer min_rep_subset_exact(const StringSet& w, const BitString& target,
                                  bool allow_negation, int exact_bound) {
    check_exact_bound(w.size(), exact_bound);
    if (!run_decide(w, target, allow_negation).representable)
        raise(ErrorKind::not_representable,
              "target " + target.to_string() + " is not generable from the set");

    const int n = static_cast<int>(w.size());
    for (int k = 1; k <= n; ++k) {
        SubsetAnswer answer;
        const bool found = for_each_combination(n, k, [&](const std::vector<int>& combo) {
            if (!run_decide(w.subset(combo), target, allow_negation).representable) return false;
            answer = {combo, true};
            return true;
        });
        if (found) return answer;
    }
    raise(ErrorKind::internal_invariant, "the full set must generate a representable target");
}

namespace {

bool is_sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

std::vector<std::vector<int>> pairwise_differences(const std::vector<std::vector<int>>& subsets) {
    std::set<std::vector<int>> demands;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            if (i == j) continue;
            std::vector<int> diff;
            std::set_difference(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                                subsets[j].end(), std::back_inserter(diff));
            if (!diff.empty()) demands.insert(std::move(diff));
        }
    return {demands.begin(), demands.end()};
}

bool subset_after_pick(const std::vector<int>& a, const std::vector<int>& b,
                       const std::vector<char>& picked) {
    // a * X subset of b * X, both sorted.
    std::size_t j = 0;
    for (int x : a) {
        if (!picked[static_cast<std::size_t>(x)]) continue;
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

}  // namespace

SubsetAnswer greedy_compare_set(const CompareInstance& instance) {
    const auto demands = pairwise_differences(instance.subsets());

    std::vector<char> picked(static_cast<std::size_t>(instance.item_count()), 0);
    std::vector<char> hit(demands.size(), 0);
    std::size_t unhit = demands.size();
    std::vector<int> chosen;
    while (unhit > 0) {
        int best = -1;
        std::size_t best_gain = 0;
        for (int item = 0; item < instance.item_count(); ++item) {
            if (picked[static_cast<std::size_t>(item)]) continue;
            std::size_t gain = 0;
            for (std::size_t d = 0; d < demands.size(); ++d)
                if (!hit[d] && std::binary_search(demands[d].begin(), demands[d].end(), item))
                    ++gain;
            if (gain > best_gain) {
                best = item;
                best_gain = gain;
            }
        }
        picked[static_cast<std::size_t>(best)] = 1;
        chosen.push_back(best);
        for (std::size_t d = 0; d < demands.size(); ++d)
            if (!hit[d] && std::binary_search(demands[d].begin(), demands[d].end(), best)) {
                hit[d] = 1;
                --unhit;
            }
    }
    std::sort(chosen.begin(), chosen.end());

    // Ground truth: every inclusion and non-inclusion must survive the
    // intersection with the chosen items.
    bool certified = true;
    const auto& subsets = instance.subsets();
    for (std::size_t i = 0; i < subsets.size() && certified; ++i)
        for (std::size_t j = 0; j < subsets.size() && certified; ++j) {
            const bool full = is_sorted_subset(subsets[i], subsets[j]);
            const bool reduced = subset_after_pick(subsets[i], subsets[j], picked);
            certified = (full == reduced);
        }
    return {std::move(chosen), certified};
}

namespace {

bool spans(const StringSet& w, const std::vector<int>& indices) {
    if (indices.empty()) return false;  // formulas need at least one operand
    const StringSet candidate = w.subset(indices);
    for (const auto& s : w.strings())
        if (!decide(candidate, s).representable) return false;
    return true;
}

}  // namespace

SubsetAnswer min_spanning_subset_greedy(const StringSet& w) {
    if (w.width() == 0)
        raise(ErrorKind::zero_width, "width-0 sets are only valid as normalize() output");
    const Normalized norm = normalize(w);
    std::vector<std::vector<int>> family;

    if (norm.set.width() > 0) {
        std::set<std::vector<int>> distinct;
        for (std::size_t col = 0; col < norm.set.width(); ++col) {
            std::vector<int> members;
            for (std::size_t k = 0; k < norm.set.size(); ++k)
                if (!norm.set[k].test(col)) members.push_back(static_cast<int>(k));
            distinct.insert(std::move(members));
        }
        family.assign(distinct.begin(), distinct.end());

        bool has_bottom = false, has_top = false;
        for (const auto& s : norm.set.strings()) {
            has_bottom = has_bottom || s.all_zero();
            has_top = has_top || s.all_one();
        }
        if (has_bottom) family.push_back({});
        if (has_top) {
            std::vector<int> all(w.size());
            std::iota(all.begin(), all.end(), 0);
            family.push_back(std::move(all));
        }
    }

    SubsetAnswer answer = greedy_compare_set(CompareInstance(static_cast<int>(w.size()), family));
    if (answer.chosen.empty()) answer.chosen = {0};
    answer.certified = spans(w, answer.chosen);
    return answer;
}

SubsetAnswer min_spanning_subset_exact(const StringSet& w, int exact_bound) {
    if (w.width() == 0)
        raise(ErrorKind::zero_width, "width-0 sets are only valid as normalize() output");
    check_exact_bound(w.size(), exact_bound);
    const int n = static_cast<int>(w.size());
    for (int k = 1; k <= n; ++k) {
        SubsetAnswer answer;
        const bool found = for_each_combination(n, k, [&](const std::vector<int>& combo) {
            if (!spans(w, combo)) return false;
            answer = {combo, true};
            return true;
        });
        if (found) return answer;
    }
    raise(ErrorKind::internal_invariant, "a set always spans itself");
}

CompareInstance msc_to_mcs(const MscInstance& instance) {
    const int m = instance.universe_size;
    const int n = static_cast<int>(instance.family.size());
    for (const auto& f : instance.family)
        for (int u : f)
            if (u < 1 || u > m)
                raise(ErrorKind::invalid_element,
                      "element " + std::to_string(u) + " outside 1.." + std::to_string(m));

    std::vector<std::vector<int>> subsets;
    subsets.reserve(2 * static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        std::vector<int> b{i - 1};
        for (int j = 0; j < n; ++j) {
            const auto& f = instance.family[static_cast<std::size_t>(j)];
            if (std::find(f.begin(), f.end(), i) != f.end()) b.push_back(m + j);
        }
        subsets.push_back(std::move(b));
    }
    for (int i = 1; i <= m; ++i) subsets.push_back({i - 1});
    return CompareInstance(m + n, std::move(subsets));
}

MscInstance parse_msc_instance(std::istream& in) {
    MscInstance instance;
    std::string line;
    if (!std::getline(in, line)) raise(ErrorKind::parse_error, "missing the \"m n\" line");
    std::istringstream header(line);
    int n = 0;
    if (!(header >> instance.universe_size >> n) || instance.universe_size < 0 || n < 0)
        raise(ErrorKind::parse_error, "first line must be \"m n\"");
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            raise(ErrorKind::parse_error, "expected " + std::to_string(n) + " subset lines");
        std::istringstream fields(line);
        std::vector<int> subset;
        int u = 0;
        while (fields >> u) {
            if (u < 1 || u > instance.universe_size)
                raise(ErrorKind::parse_error, "element " + std::to_string(u) + " outside 1.." +
                                                  std::to_string(instance.universe_size));
            subset.push_back(u);
        }
        instance.family.push_back(std::move(subset));
    }
    return instance;
}

void write_msc_instance(std::ostream& out, const MscInstance& instance) {
    out << instance.universe_size << ' ' << instance.family.size() << '\n';
    for (const auto& subset : instance.family) {
        for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? " " : "") << subset[i];
        out << '\n';
    }
}

}  // namespace bsr
