#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bsr/closure.hpp"
#include "bsr/kernels.hpp"
#include "bsr/stringset.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bsr;

namespace {

StringSet make_set(std::initializer_list<const char*> strings) {
    std::vector<BitString> parsed;
    for (const char* s : strings) parsed.push_back(BitString::parse(s));
    return StringSet(std::move(parsed));
}

std::set<std::string> as_text(const std::vector<BitString>& strings) {
    std::set<std::string> out;
    for (const auto& s : strings) out.insert(s.to_string());
    return out;
}

}  // namespace

TEST_CASE("bitwise operations match direct evaluation") {
    CHECK((BitString::parse("1100") & BitString::parse("0110")).to_string() == "0100");
    CHECK((BitString::parse("1100") | BitString::parse("0011")).to_string() == "1111");
    CHECK((~BitString::parse("0011")).to_string() == "1100");
    CHECK_THROWS_AS((void)(BitString::parse("10") & BitString::parse("100")), Error);
}

TEST_CASE("zero and one index sets") {
    CHECK(zero_set(BitString::parse("0110")) == IndexSet{1, 4});
    CHECK(one_set(BitString::parse("0110")) == IndexSet{2, 3});
    CHECK(zero_set(BitString::parse("1111")).empty());

    // The two sets partition 1..m.
    testing::Rng rng(3);
    for (int round = 0; round < 50; ++round) {
        const std::size_t m = 1 + rng() % 100;
        const BitString x = testing::random_bitstring(rng, m);
        const IndexSet zeros = zero_set(x);
        const IndexSet ones = one_set(x);
        IndexSet merged(zeros);
        merged.insert(merged.end(), ones.begin(), ones.end());
        std::sort(merged.begin(), merged.end());
        IndexSet everything(m);
        std::iota(everything.begin(), everything.end(), 1);
        CHECK(merged == everything);
    }
}

TEST_CASE("algebraic laws on random pairs") {
    testing::Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        const std::size_t m = 1 + rng() % 130;
        const BitString a = testing::random_bitstring(rng, m);
        const BitString b = testing::random_bitstring(rng, m);
        const BitString c = testing::random_bitstring(rng, m);
        CHECK((a & b) == (b & a));
        CHECK((a | b) == (b | a));
        CHECK(((a & b) & c) == (a & (b & c)));
        CHECK(((a | b) | c) == (a | (b | c)));
        CHECK((a & a) == a);
        CHECK((a | a) == a);
        CHECK((a & (a | b)) == a);  // absorption
        CHECK(~~a == a);
        CHECK(~(a & b) == (~a | ~b));
        CHECK(~(a | b) == (~a & ~b));
    }
}

TEST_CASE("word boundary behavior") {
    // Lengths straddling the 64-bit packing.
    for (std::size_t m : {63u, 64u, 65u, 128u, 129u}) {
        const BitString ones = BitString::ones(m);
        CHECK(ones.count_ones() == m);
        CHECK((~ones).all_zero());
        CHECK((~BitString::zeros(m)) == ones);
        CHECK(zero_set(ones).empty());
    }
}

TEST_CASE("string set construction rules") {
    CHECK_THROWS_AS(StringSet(std::vector<BitString>{}), Error);
    CHECK_THROWS_AS(make_set({"10", "100"}), Error);
    const StringSet w = make_set({"10", "01", "10"});
    CHECK(w.size() == 3);
    CHECK(w.deduplicated().size() == 2);
    CHECK(w.subset({2, 0}).strings() ==
          std::vector<BitString>{BitString::parse("10"), BitString::parse("10")});
    CHECK_THROWS_AS(w.subset({3}), Error);
    CHECK_THROWS_AS(w.subset({-1}), Error);
}

TEST_CASE("text format round trip and rejects") {
    std::istringstream in("# comment\n1100\n\n0110\n");
    const StringSet w = parse_string_set(in);
    CHECK(w.size() == 2);
    CHECK(w[1].to_string() == "0110");

    std::ostringstream out;
    write_string_set(out, w);
    CHECK(out.str() == "1100\n0110\n");

    std::istringstream ragged("10\n011\n");
    CHECK_THROWS_AS(parse_string_set(ragged), Error);
    std::istringstream junk("10x0\n");
    CHECK_THROWS_AS(parse_string_set(junk), Error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_string_set(empty), Error);
}

TEST_CASE("normalize drops exactly the constant columns") {
    SUBCASE("mixed constants") {
        // Columns 1 (all one) and 3 (all zero) are constant.
        const auto [reduced, map] = normalize(make_set({"110", "100"}));
        CHECK(reduced.width() == 1);
        CHECK(as_text(reduced.strings()) == std::set<std::string>{"1", "0"});
        CHECK(map.kept_columns == IndexSet{2});
        CHECK(map.forced_bits == std::map<int, bool>{{1, true}, {3, false}});
    }
    SUBCASE("no constant column") {
        const auto [reduced, map] = normalize(make_set({"10", "01"}));
        CHECK(reduced == make_set({"10", "01"}));
        CHECK(map.forced_bits.empty());
    }
    SUBCASE("fully constant collapses to width 0") {
        const auto [reduced, map] = normalize(make_set({"11", "11"}));
        CHECK(reduced.width() == 0);
        CHECK(reduced.size() == 2);
        CHECK(map.kept_columns.empty());
        CHECK(map.forced_bits == std::map<int, bool>{{1, true}, {2, true}});
    }
}

TEST_CASE("reinserting forced bits is the identity on members") {
    testing::Rng rng(11);
    for (int round = 0; round < 100; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 9, 1 + rng() % 6);
        const auto [reduced, map] = normalize(w);
        for (std::size_t k = 0; k < w.size(); ++k) CHECK(map.reinsert(reduced[k]) == w[k]);
    }
}

TEST_CASE("closure fixtures") {
    CHECK(as_text(closure(make_set({"10", "01"}))) ==
          std::set<std::string>{"10", "01", "11", "00"});

    const auto c9 = closure(make_set({"1100", "0110", "0011"}));
    CHECK(as_text(c9) == std::set<std::string>{"1111", "0111", "0011", "1110", "1100", "0110",
                                               "0010", "0100", "0000"});
    CHECK(c9.size() == 9);

    CHECK(as_text(closure(make_set({"1100"}), true)) ==
          std::set<std::string>{"1100", "0011", "1111", "0000"});
}

TEST_CASE("closure contains the seeds and is a fixpoint") {
    testing::Rng rng(23);
    for (int round = 0; round < 30; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 6, 1 + rng() % 4);
        const bool negation = (round % 2) == 0;
        const auto members = closure(w, negation);
        const auto text = as_text(members);
        for (const auto& s : w.strings()) CHECK(text.count(s.to_string()) == 1);
        for (const auto& a : members)
            for (const auto& b : members) {
                CHECK(text.count((a & b).to_string()) == 1);
                CHECK(text.count((a | b).to_string()) == 1);
            }
        if (negation)
            for (const auto& a : members) CHECK(text.count((~a).to_string()) == 1);
    }
}

TEST_CASE("closure of the normalized set is in bijection with the original") {
    testing::Rng rng(31);
    for (int round = 0; round < 50; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 7, 1 + rng() % 5);
        const auto [reduced, map] = normalize(w);
        std::set<std::string> widened;
        for (const auto& s : closure(reduced)) widened.insert(map.reinsert(s).to_string());
        CHECK(widened == as_text(closure(w)));
    }
}

TEST_CASE("closure ignores multiplicity") {
    CHECK(as_text(closure(make_set({"10", "10", "10"}))) == as_text(closure(make_set({"10"}))));
    CHECK(as_text(closure(make_set({"1100", "1100", "0011"}), true)) ==
          as_text(closure(make_set({"1100", "0011"}), true)));
}

TEST_CASE("closure limit") {
    const StringSet w = make_set({"1100", "0110", "0011"});
    CHECK_THROWS_AS(closure(w, false, 5), Error);
    CHECK_THROWS_AS(closure(w, false, 2), Error);  // below the seed count
    CHECK(closure(w, false, 9).size() == 9);       // exactly at the fixpoint size
}

TEST_CASE("kernel policies agree") {
    testing::Rng rng(41);
    for (int round = 0; round < 40; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 200, 1 + rng() % 24);
        std::vector<int> columns;
        for (std::size_t i = 0; i < w.width(); ++i)
            if (rng() % 3 != 0) columns.push_back(static_cast<int>(i));
        const auto serial = kernels::zero_family(w, columns, kernels::Policy::serial);
        const auto parallel = kernels::zero_family(w, columns, kernels::Policy::parallel);
        CHECK(serial.members == parallel.members);
        CHECK(serial.joins == parallel.joins);
        CHECK(kernels::or_all(w, kernels::Policy::serial) ==
              kernels::or_all(w, kernels::Policy::parallel));
        CHECK(kernels::and_all(w, kernels::Policy::serial) ==
              kernels::and_all(w, kernels::Policy::parallel));
    }
}

TEST_CASE("whole-set folds match definitional loops") {
    testing::Rng rng(47);
    for (int round = 0; round < 30; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 150, 1 + rng() % 10);
        BitString ors(w.width());
        BitString ands = BitString::ones(w.width());
        for (const auto& s : w.strings()) {
            ors |= s;
            ands &= s;
        }
        CHECK(kernels::or_all(w) == ors);
        CHECK(kernels::and_all(w) == ands);
    }
}

TEST_CASE("parser accepts CRLF line endings") {
    std::istringstream in("10\r\n01\r\n");
    CHECK(parse_string_set(in).size() == 2);
}

TEST_CASE("kernel joins match the per-column fold oracle") {
    testing::Rng rng(43);
    for (int round = 0; round < 40; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 70, 1 + rng() % 10);
        std::vector<int> columns(w.width());
        for (std::size_t i = 0; i < w.width(); ++i) columns[i] = static_cast<int>(i);
        const auto slice = kernels::zero_family(w, columns);
        for (std::size_t i = 0; i < w.width(); ++i) {
            const int position1 = static_cast<int>(i) + 1;
            CHECK(slice.members[i] == testing::column_members_brute(w, position1));
            if (!slice.members[i].empty())
                CHECK(slice.joins[i] == testing::column_join_brute(w, position1));
        }
    }
}
