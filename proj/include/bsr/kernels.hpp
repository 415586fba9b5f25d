#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsr/stringset.hpp"

namespace bsr::kernels {

/// Execution policy for the packed-word kernels. `parallel` uses OpenMP when
/// the build has it and falls back to the serial path otherwise; both produce
/// bit-identical results, and the serial path is the reference the tests
/// compare against.
enum class Policy { serial, parallel };

/// Per-position slice of the zero family: for each requested 0-based column,
/// the indices of strings with a 0 there and the bitwise OR of exactly those
/// strings. joins[j] is meaningful only when members[j] is nonempty.
struct FamilySlice {
    std::vector<std::vector<std::int32_t>> members;
    std::vector<BitString> joins;
};

FamilySlice zero_family(const StringSet& w, std::span<const int> columns,
                        Policy policy = Policy::parallel);

/// Bitwise OR over all member strings.
BitString or_all(const StringSet& w, Policy policy = Policy::parallel);

/// Bitwise AND over all member strings.
BitString and_all(const StringSet& w, Policy policy = Policy::parallel);

}  // namespace bsr::kernels
