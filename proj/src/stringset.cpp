#include "bsr/stringset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace bsr {

StringSet::StringSet(std::vector<BitString> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) raise(ErrorKind::empty_set, "a string set needs at least one string");
    width_ = strings_[0].length();
    for (std::size_t i = 1; i < strings_.size(); ++i)
        if (strings_[i].length() != width_)
            raise(ErrorKind::length_mismatch,
                  "string " + std::to_string(i) + " has length " +
                      std::to_string(strings_[i].length()) + ", expected " + std::to_string(width_));
}

StringSet StringSet::subset(const std::vector<int>& indices) const {
    std::vector<BitString> picked;
    picked.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= strings_.size())
            raise(ErrorKind::index_out_of_range, "string index " + std::to_string(i));
        picked.push_back(strings_[static_cast<std::size_t>(i)]);
    }
    return StringSet(std::move(picked));
}

StringSet StringSet::deduplicated() const {
    std::vector<BitString> kept;
    std::unordered_set<BitString, BitStringHash> seen;
    for (const auto& s : strings_)
        if (seen.insert(s).second) kept.push_back(s);
    return StringSet(std::move(kept));
}

AugmentedSet with_complements(const StringSet& w) {
    std::vector<BitString> kept;
    std::vector<AugmentedSet::Leaf> leaves;
    std::unordered_set<BitString, BitStringHash> seen;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (seen.insert(w[i]).second) {
            kept.push_back(w[i]);
            leaves.push_back({static_cast<int>(i), false});
        }
    for (std::size_t i = 0; i < w.size(); ++i) {
        BitString c = ~w[i];
        if (seen.insert(c).second) {
            kept.push_back(std::move(c));
            leaves.push_back({static_cast<int>(i), true});
        }
    }
    return {StringSet(std::move(kept)), std::move(leaves)};
}

BitString NormalizationMap::reinsert(const BitString& reduced) const {
    const std::size_t full = kept_columns.size() + forced_bits.size();
    BitString out(full);
    for (std::size_t k = 0; k < kept_columns.size(); ++k)
        out.set(static_cast<std::size_t>(kept_columns[k]) - 1, reduced.test(k));
    for (const auto& [pos, value] : forced_bits) out.set(static_cast<std::size_t>(pos) - 1, value);
    return out;
}

Normalized normalize(const StringSet& w) {
    // A column is constant iff the OR-fold misses it (all zero) or the
    // AND-fold keeps it (all one).
    BitString any = w[0];
    BitString all = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
        any |= w[i];
        all &= w[i];
    }

    NormalizationMap map;
    for (std::size_t col = 0; col < w.width(); ++col) {
        if (!any.test(col))
            map.forced_bits.emplace(static_cast<int>(col) + 1, false);
        else if (all.test(col))
            map.forced_bits.emplace(static_cast<int>(col) + 1, true);
        else
            map.kept_columns.push_back(static_cast<int>(col) + 1);
    }

    std::vector<BitString> reduced;
    reduced.reserve(w.size());
    for (const auto& s : w.strings()) {
        BitString r(map.kept_columns.size());
        for (std::size_t k = 0; k < map.kept_columns.size(); ++k)
            r.set(k, s.test(static_cast<std::size_t>(map.kept_columns[k]) - 1));
        reduced.push_back(std::move(r));
    }
    return {StringSet(std::move(reduced)), std::move(map)};
}

StringSet parse_string_set(std::istream& in) {
    std::vector<BitString> strings;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        BitString s = BitString::parse(line);
        if (!strings.empty() && s.length() != strings[0].length())
            raise(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": length " +
                                              std::to_string(s.length()) + " differs from " +
                                              std::to_string(strings[0].length()));
        strings.push_back(std::move(s));
    }
    if (strings.empty()) raise(ErrorKind::empty_set, "no data lines in input");
    return StringSet(std::move(strings));
}

StringSet load_string_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::parse_error, "cannot open '" + path + "'");
    return parse_string_set(in);
}

void write_string_set(std::ostream& out, const StringSet& w) {
    for (const auto& s : w.strings()) out << s.to_string() << '\n';
}

}  // namespace bsr
