#include "bsr/represent.hpp"

#include <numeric>
#include <set>

namespace bsr {

namespace {

void require_usable(const StringSet& w, const BitString& target) {
    if (w.width() == 0)
        raise(ErrorKind::zero_width, "width-0 sets are only valid as normalize() output");
    if (target.length() != w.width())
        raise(ErrorKind::length_mismatch, "target length " + std::to_string(target.length()) +
                                              " differs from set width " +
                                              std::to_string(w.width()));
}

/// Identity mapping for the plain decision; decide_with_negation swaps in
/// the augmented-set leaves.
std::vector<CnfLiteral> identity_leaves(std::size_t n) {
    std::vector<CnfLiteral> leaves(n);
    for (std::size_t i = 0; i < n; ++i) leaves[i] = {static_cast<std::int32_t>(i), false};
    return leaves;
}

Verdict decide_core(const StringSet& w, const BitString& target,
                    const std::vector<CnfLiteral>& leaves, kernels::Policy policy) {
    if (target.all_one()) {
        // The all-ones target is generable iff the OR of the whole set hits
        // every position; the witness is that single big clause.
        if (kernels::or_all(w, policy) != target) return {false, std::nullopt};
        std::vector<CnfLiteral> clause(leaves);
        return {true, CnfFormula{{std::move(clause)}}};
    }

    std::vector<int> columns;
    columns.reserve(target.length());
    for (std::size_t i = 0; i < target.length(); ++i)
        if (!target.test(i)) columns.push_back(static_cast<int>(i));

    kernels::FamilySlice slice = kernels::zero_family(w, columns, policy);

    // No string has a 0 at this position, so neither does anything the set
    // generates; the empty join has no formula and must not default to 0.
    for (const auto& members : slice.members)
        if (members.empty()) return {false, std::nullopt};

    BitString acc = slice.joins[0];
    for (std::size_t j = 1; j < slice.joins.size(); ++j) acc &= slice.joins[j];
    if (acc != target) return {false, std::nullopt};

    // One clause per zero position in ascending order, duplicates (positions
    // sharing one member list) folded away: AND is idempotent.
    CnfFormula witness;
    std::set<std::vector<std::int32_t>> seen;
    for (const auto& members : slice.members) {
        if (!seen.insert(members).second) continue;
        std::vector<CnfLiteral> clause;
        clause.reserve(members.size());
        for (std::int32_t k : members) clause.push_back(leaves[static_cast<std::size_t>(k)]);
        witness.clauses.push_back(std::move(clause));
    }
    return {true, std::move(witness)};
}

}  // namespace

ZeroFamily build_family(const StringSet& w, kernels::Policy policy) {
    if (w.width() == 0)
        raise(ErrorKind::zero_width, "width-0 sets are only valid as normalize() output");
    std::vector<int> columns(w.width());
    std::iota(columns.begin(), columns.end(), 0);
    return ZeroFamily(w.width(), kernels::zero_family(w, columns, policy));
}

Verdict decide(const StringSet& w, const BitString& target, kernels::Policy policy) {
    require_usable(w, target);
    return decide_core(w, target, identity_leaves(w.size()), policy);
}

Verdict decide_with_negation(const StringSet& w, const BitString& target,
                             kernels::Policy policy) {
    require_usable(w, target);
    auto augmented = with_complements(w);
    std::vector<CnfLiteral> leaves;
    leaves.reserve(augmented.leaves.size());
    for (const auto& leaf : augmented.leaves) leaves.push_back({leaf.index, leaf.negated});
    return decide_core(augmented.set, target, leaves, policy);
}

}  // namespace bsr
