#include "bsr/closure.hpp"

#include <unordered_set>

namespace bsr {

std::vector<BitString> closure(const StringSet& w, bool allow_negation, std::size_t limit) {
    if (limit < w.size())
        raise(ErrorKind::limit_exceeded,
              "limit " + std::to_string(limit) + " below seed count " + std::to_string(w.size()));

    std::vector<BitString> members;
    std::unordered_set<BitString, BitStringHash> seen;
    auto insert = [&](BitString s) {
        if (!seen.insert(s).second) return;
        if (seen.size() > limit)
            raise(ErrorKind::limit_exceeded,
                  "closure exceeds " + std::to_string(limit) + " elements");
        members.push_back(std::move(s));
    };

    for (const auto& s : w.strings()) insert(s);
    if (allow_negation)
        for (const auto& s : w.strings()) insert(~s);

    // Pairwise worklist: when slot i is processed, every pair (i, j <= i) is
    // combined; elements appended later pick up the earlier ones when their
    // own turn comes, so all pairs of the final set are covered.
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            insert(members[i] & members[j]);
            insert(members[i] | members[j]);
        }
    }
    return members;
}

bool closure_contains(const StringSet& w, const BitString& target, bool allow_negation,
                      std::size_t limit) {
    if (target.length() != w.width())
        raise(ErrorKind::length_mismatch, "target length " + std::to_string(target.length()) +
                                              " differs from set width " +
                                              std::to_string(w.width()));
    for (const auto& s : closure(w, allow_negation, limit))
        if (s == target) return true;
    return false;
}

}  // namespace bsr
