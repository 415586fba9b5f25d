#include "bsr/counting.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "bsr/kernels.hpp"

namespace bsr {

AbstractPoset::AbstractPoset(int size, const std::vector<std::pair<int, int>>& relations) {
    if (size < 0 || size > 64)
        raise(ErrorKind::too_large, "poset size " + std::to_string(size) + " outside 0..64");
    up_.assign(static_cast<std::size_t>(size), 0);
    down_.assign(static_cast<std::size_t>(size), 0);
    for (int a = 0; a < size; ++a) up_[static_cast<std::size_t>(a)] = std::uint64_t{1} << a;
    for (auto [a, b] : relations) {
        if (a < 0 || a >= size || b < 0 || b >= size)
            raise(ErrorKind::invalid_element,
                  "relation (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
        up_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    }

    // Transitive closure by sweeping until the up-masks stop growing.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < size; ++a) {
            std::uint64_t acc = up_[static_cast<std::size_t>(a)];
            std::uint64_t rest = acc;
            while (rest != 0) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                acc |= up_[static_cast<std::size_t>(b)];
            }
            if (acc != up_[static_cast<std::size_t>(a)]) {
                up_[static_cast<std::size_t>(a)] = acc;
                changed = true;
            }
        }
    }

    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (a != b && leq(a, b) && leq(b, a))
                raise(ErrorKind::invalid_element, "antisymmetry violation between " +
                                                      std::to_string(a + 1) + " and " +
                                                      std::to_string(b + 1));
            if (leq(a, b)) down_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
}

AbstractPoset ClassPoset::to_abstract() const {
    std::vector<std::pair<int, int>> relations;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != b && less_equal(a, b)) relations.emplace_back(a, b);
    return AbstractPoset(size(), relations);
}

namespace {

bool is_subset(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    if (a.size() > b.size()) return false;
    std::size_t j = 0;
    for (std::int32_t x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

}  // namespace

ClassPoset build_poset(const StringSet& w) {
    const StringSet distinct = w.deduplicated();
    const Normalized norm = normalize(distinct);

    ClassPoset poset;
    if (norm.set.width() == 0) return poset;

    std::vector<int> columns(norm.set.width());
    std::iota(columns.begin(), columns.end(), 0);
    kernels::FamilySlice slice = kernels::zero_family(norm.set, columns);

    // Group kept positions by identical member sets, in position order.
    std::map<std::vector<std::int32_t>, int> class_of;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const int original = norm.map.kept_columns[k];
        auto [it, inserted] = class_of.try_emplace(slice.members[k], poset.size());
        if (inserted) {
            poset.classes.push_back({original});
            poset.class_members.push_back(slice.members[k]);
        } else {
            poset.classes[static_cast<std::size_t>(it->second)].push_back(original);
        }
    }

    const std::size_t p = static_cast<std::size_t>(poset.size());
    poset.leq.assign(p * p, false);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            poset.leq[a * p + b] = is_subset(poset.class_members[a], poset.class_members[b]);
    return poset;
}

namespace {

struct MaskCounter {
    const AbstractPoset& poset;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;

    /// Pivot with the most comparabilities left, lowest index on ties.
    int pick_pivot(std::uint64_t mask) const {
        int best = -1, best_links = -1;
        std::uint64_t rest = mask;
        while (rest != 0) {
            const int x = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint64_t comparable =
                (poset.up_mask(x) | poset.down_mask(x)) & mask & ~(std::uint64_t{1} << x);
            const int links = std::popcount(comparable);
            if (links > best_links) {
                best = x;
                best_links = links;
            }
        }
        return best;
    }

    std::uint64_t antichains(std::uint64_t mask) {
        if (mask == 0) return 1;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int x = pick_pivot(mask);
        const std::uint64_t self = std::uint64_t{1} << x;
        const std::uint64_t comparable = (poset.up_mask(x) | poset.down_mask(x)) & mask;
        const std::uint64_t result =
            antichains(mask & ~self) + antichains(mask & ~(comparable | self));
        memo.emplace(mask, result);
        return result;
    }

    std::uint64_t upper_sets(std::uint64_t mask) {
        if (mask == 0) return 1;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int x = pick_pivot(mask);
        // An upper set avoiding x excludes its whole down-set; one containing
        // x includes its whole up-set. Both halves drop x itself.
        const std::uint64_t result = upper_sets(mask & ~(poset.down_mask(x) & mask)) +
                                     upper_sets(mask & ~(poset.up_mask(x) & mask));
        memo.emplace(mask, result);
        return result;
    }
};

std::uint64_t full_mask(const AbstractPoset& p) {
    return p.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.size()) - 1;
}

void check_bound(const AbstractPoset& p, int bound) {
    if (bound > 63) raise(ErrorKind::too_large, "counting bound must stay below 64");
    if (p.size() > bound)
        raise(ErrorKind::too_large, "poset has " + std::to_string(p.size()) +
                                        " elements, enumeration bound is " +
                                        std::to_string(bound));
}

}  // namespace

BigCount count_antichains(const AbstractPoset& p, int bound) {
    check_bound(p, bound);
    MaskCounter counter{p, {}};
    return BigCount(counter.antichains(full_mask(p)));
}

BigCount count_antichains(const ClassPoset& p, int bound) {
    return count_antichains(p.to_abstract(), bound);
}

BigCount count_upper_sets(const AbstractPoset& p, int bound) {
    check_bound(p, bound);
    MaskCounter counter{p, {}};
    return BigCount(counter.upper_sets(full_mask(p)));
}

BigCount count_upper_sets(const ClassPoset& p, int bound) {
    return count_upper_sets(p.to_abstract(), bound);
}

BigCount count_representable(const StringSet& w, int bound) {
    return count_upper_sets(build_poset(w), bound);
}

namespace {

ClassPoset negation_poset(const StringSet& w) {
    if (w.width() == 0)
        raise(ErrorKind::zero_width, "width-0 sets are only valid as normalize() output");
    return build_poset(with_complements(w).set);
}

}  // namespace

int negation_class_count(const StringSet& w) { return negation_poset(w).size(); }

BigCount count_with_negation(const StringSet& w) {
    const ClassPoset poset = negation_poset(w);
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            if (a != b && poset.less_equal(a, b))
                raise(ErrorKind::internal_invariant,
                      "complement-extended poset has comparable distinct classes");
    return BigCount(1) << poset.size();
}

StringSet poset_to_instance(const AbstractPoset& p) {
    if (p.size() == 0) raise(ErrorKind::empty_set, "poset has no elements");
    const std::size_t m = static_cast<std::size_t>(p.size());
    std::vector<BitString> strings;
    strings.reserve(m + 1);
    for (int i = 0; i < p.size(); ++i) {
        BitString s = BitString::ones(m);
        std::uint64_t above = p.up_mask(i);
        while (above != 0) {
            const int j = std::countr_zero(above);
            above &= above - 1;
            s.set(static_cast<std::size_t>(j), false);
        }
        strings.push_back(std::move(s));
    }
    strings.push_back(BitString::ones(m));
    return StringSet(std::move(strings));
}

AbstractPoset parse_poset(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int size = -1;
    std::vector<std::pair<int, int>> relations;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        if (size < 0) {
            if (!(fields >> size) || size < 0)
                raise(ErrorKind::parse_error,
                      "line " + std::to_string(lineno) + ": expected the element count");
            continue;
        }
        int a = 0, b = 0;
        if (!(fields >> a >> b) || a < 1 || a > size || b < 1 || b > size)
            raise(ErrorKind::parse_error, "line " + std::to_string(lineno) +
                                              ": expected a relation \"i j\" with 1-based "
                                              "elements up to " +
                                              std::to_string(size));
        relations.emplace_back(a - 1, b - 1);
    }
    if (size < 0) raise(ErrorKind::parse_error, "missing the element-count line");
    try {
        return AbstractPoset(size, relations);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::invalid_element)
            raise(ErrorKind::parse_error, e.what());
        throw;
    }
}

AbstractPoset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::parse_error, "cannot open '" + path + "'");
    return parse_poset(in);
}

}  // namespace bsr
