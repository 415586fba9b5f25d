#include "bsr/kernels.hpp"

namespace bsr::kernels {

namespace {

void fill_column(const StringSet& w, int column, std::vector<std::int32_t>& members,
                 BitString& join) {
    const std::size_t col = static_cast<std::size_t>(column);
    join = BitString(w.width());
    auto acc = join.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].test(col)) continue;
        members.push_back(static_cast<std::int32_t>(k));
        auto src = w[k].words();
        for (std::size_t word = 0; word < acc.size(); ++word) acc[word] |= src[word];
    }
}

}  // namespace

FamilySlice zero_family(const StringSet& w, std::span<const int> columns, Policy policy) {
    FamilySlice out;
    out.members.resize(columns.size());
    out.joins.resize(columns.size());
    const std::int64_t count = static_cast<std::int64_t>(columns.size());
    if (policy == Policy::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t j = 0; j < count; ++j)
            fill_column(w, columns[static_cast<std::size_t>(j)],
                        out.members[static_cast<std::size_t>(j)],
                        out.joins[static_cast<std::size_t>(j)]);
    } else {
        for (std::int64_t j = 0; j < count; ++j)
            fill_column(w, columns[static_cast<std::size_t>(j)],
                        out.members[static_cast<std::size_t>(j)],
                        out.joins[static_cast<std::size_t>(j)]);
    }
    return out;
}

namespace {

template <typename Fold>
BitString fold_all(const StringSet& w, Policy policy, std::uint64_t init, Fold fold) {
    BitString result(w.width());
    auto acc = result.words();
    for (auto& word : acc) word = init;
    const std::int64_t words = static_cast<std::int64_t>(acc.size());
    if (policy == Policy::parallel && words >= 64) {
        // Word-sliced so each thread owns a disjoint range of the accumulator.
#pragma omp parallel for schedule(static)
        for (std::int64_t word = 0; word < words; ++word) {
            std::uint64_t v = init;
            for (std::size_t k = 0; k < w.size(); ++k)
                v = fold(v, w[k].words()[static_cast<std::size_t>(word)]);
            acc[static_cast<std::size_t>(word)] = v;
        }
    } else {
        for (std::size_t k = 0; k < w.size(); ++k) {
            auto src = w[k].words();
            for (std::size_t word = 0; word < acc.size(); ++word)
                acc[word] = fold(acc[word], src[word]);
        }
    }
    return result;
}

}  // namespace

BitString or_all(const StringSet& w, Policy policy) {
    return fold_all(w, policy, 0, [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

BitString and_all(const StringSet& w, Policy policy) {
    // n >= 1, and member padding bits are zero, so the all-ones init cannot
    // survive the fold in the padding.
    return fold_all(w, policy, ~std::uint64_t{0},
                    [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

}  // namespace bsr::kernels
