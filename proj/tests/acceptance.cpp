// Acceptance suite: each case checks one release criterion end to end and
// prints a single PASS/FAIL line. Run via ctest or directly; the CLI
// criterion needs BSR_CLI pointing at the built binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "bsr/closure.hpp"
#include "bsr/counting.hpp"
#include "bsr/optimize.hpp"
#include "bsr/represent.hpp"
#include "support/cli_runner.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bsr;

namespace {

StringSet make_set(std::initializer_list<const char*> strings) {
    std::vector<BitString> parsed;
    for (const char* s : strings) parsed.push_back(BitString::parse(s));
    return StringSet(std::move(parsed));
}

void report(int criterion, bool ok, const char* description) {
    std::printf("criterion %d: %s - %s\n", criterion, ok ? "PASS" : "FAIL", description);
    std::fflush(stdout);
}

std::unordered_set<std::string> closure_text(const StringSet& w, bool negation = false) {
    std::unordered_set<std::string> out;
    for (const auto& s : closure(w, negation)) out.insert(s.to_string());
    return out;
}

double time_decide(const StringSet& w, const BitString& target, kernels::Policy policy,
                   int reps) {
    using Clock = std::chrono::steady_clock;
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        const Verdict v = decide(w, target, policy);
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        best = std::min(best, elapsed.count());
        volatile bool sink = v.representable;  // keep the call observable
        (void)sink;
    }
    return best;
}

}  // namespace

TEST_CASE("criterion 1: decision oracle equivalence") {
    int mismatches = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t m = 1; m <= 4; ++m) {
        const auto targets = testing::all_bitstrings(m);
        for (std::size_t n = 1; n <= 3; ++n)
            for (const StringSet& w : testing::all_distinct_sets(m, n)) {
                const auto plain = closure_text(w);
                const auto negated = closure_text(w, true);
                for (const BitString& target : targets) {
                    if (decide(w, target).representable != (plain.count(target.to_string()) > 0))
                        ++mismatches;
                    if (decide_with_negation(w, target).representable !=
                        (negated.count(target.to_string()) > 0))
                        ++mismatches;
                }
            }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const bool ok = mismatches == 0 && elapsed.count() < 60.0;
    report(1, ok, "decide / decide_with_negation match closure membership exhaustively "
                  "(m <= 4, n <= 3, all targets)");
    CHECK(mismatches == 0);
    CHECK(elapsed.count() < 60.0);
}

TEST_CASE("criterion 2: counting oracle equivalence") {
    int mismatches = 0;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            for (const StringSet& w : testing::all_distinct_sets(m, n))
                if (count_representable(w) != BigCount(closure(w).size())) ++mismatches;

    testing::Rng rng(2024);
    for (int round = 0; round < 200; ++round) {
        const StringSet w = testing::random_set(rng, 1 + rng() % 10, 1 + rng() % 8);
        if (count_representable(w) != BigCount(closure(w).size())) ++mismatches;
        if (count_with_negation(w) != BigCount(closure(w, true).size())) ++mismatches;
    }

    // Fixtures, recomputed by the oracle in-test.
    const StringSet two = make_set({"10", "01"});
    const StringSet w1 = make_set({"1100", "0110", "0011"});
    const StringSet constant = make_set({"00", "10"});
    bool fixtures = count_representable(two) == 4 && closure(two).size() == 4;
    fixtures = fixtures && count_representable(w1) == 9 && closure(w1).size() == 9;
    fixtures = fixtures && count_representable(constant) == 2 && closure(constant).size() == 2;
    fixtures = fixtures && count_with_negation(w1) == 16 && closure(w1, true).size() == 16;

    const bool ok = mismatches == 0 && fixtures;
    report(2, ok, "count_representable / count_with_negation equal closure sizes "
                  "(exhaustive sweep + 200 random, fixtures 4/9/2/16)");
    CHECK(mismatches == 0);
    CHECK(fixtures);
}

TEST_CASE("criterion 3: parsimonious poset reduction") {
    int mismatches = 0;
    testing::Rng rng(3033);
    for (int round = 0; round < 100; ++round) {
        const int p = 1 + static_cast<int>(rng() % 10);
        const AbstractPoset poset = testing::random_poset(rng, p, 0.35, round % 3 == 0);
        if (count_representable(poset_to_instance(poset)) !=
            BigCount(testing::antichain_count_brute(poset)))
            ++mismatches;
    }

    const AbstractPoset two_chain(2, {{0, 1}});
    const BigCount regression = count_representable(poset_to_instance(two_chain));
    const bool ok = mismatches == 0 && regression == 3;
    report(3, ok, "count(poset_to_instance(p)) equals the antichain count on 100 random "
                  "posets incl. global maxima; 2-chain gives 3");
    CHECK(mismatches == 0);
    CHECK(regression == 3);
}

TEST_CASE("criterion 4: antichain / upper-set bijection") {
    int mismatches = 0;
    testing::Rng rng(4044);
    for (int round = 0; round < 200; ++round) {
        const int p = 1 + static_cast<int>(rng() % 12);
        const AbstractPoset poset = testing::random_poset(rng, p);
        const BigCount ac = count_antichains(poset);
        const BigCount us = count_upper_sets(poset);
        if (ac != us) ++mismatches;
        if (ac != BigCount(testing::antichain_count_brute(poset))) ++mismatches;
        if (us != BigCount(testing::upper_set_count_brute(poset))) ++mismatches;
    }
    report(4, mismatches == 0,
           "count_antichains == count_upper_sets == subset-scan brute force on 200 random "
           "posets (p <= 12)");
    CHECK(mismatches == 0);
}

TEST_CASE("criterion 5: optimization soundness and bounds") {
    int failures = 0;
    testing::Rng rng(5055);
    for (int round = 0; round < 300; ++round) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = 1 + rng() % 8;
        const StringSet w = testing::random_set(rng, m, n);

        const SubsetAnswer span_greedy = min_spanning_subset_greedy(w);
        const SubsetAnswer span_exact = min_spanning_subset_exact(w);
        if (!span_greedy.certified || !span_exact.certified) ++failures;
        if (span_greedy.chosen.size() < span_exact.chosen.size()) ++failures;

        // Sample generable targets from the oracle; the all-ones target is
        // always included when reachable so the tighter bound gets exercised.
        auto generable = closure(w);
        const BitString ones = BitString::ones(m);
        std::vector<BitString> targets;
        for (int pick = 0; pick < 3; ++pick) targets.push_back(generable[rng() % generable.size()]);
        if (std::find(generable.begin(), generable.end(), ones) != generable.end())
            targets.push_back(ones);
        const double general_bound = std::log(std::ceil(static_cast<double>(m * m) / 4.0)) + 1.0;
        const double ones_bound = std::log(static_cast<double>(m)) + 1.0;
        for (const BitString& target : targets) {
            const SubsetAnswer greedy = min_rep_subset_greedy(w, target);
            const SubsetAnswer exact = min_rep_subset_exact(w, target);
            if (!greedy.certified || !exact.certified) ++failures;
            const auto greedy_size = static_cast<double>(greedy.chosen.size());
            const auto exact_size = static_cast<double>(exact.chosen.size());
            if (greedy_size > general_bound * exact_size + 1e-9) ++failures;
            if (target.all_one() && greedy_size > ones_bound * exact_size + 1e-9) ++failures;

            const SubsetAnswer negated = min_rep_subset_greedy(w, target, true);
            if (!negated.certified) ++failures;
        }
    }

    // Worked cover-to-compare table and its brute-force optimum.
    const MscInstance msc{4, {{1, 3, 4}, {1, 2}, {2, 3}}};
    const CompareInstance mcs = msc_to_mcs(msc);
    const std::vector<std::vector<int>> expected{
        {0, 4, 5}, {1, 5, 6}, {2, 4, 6}, {3, 4}, {0}, {1}, {2}, {3},
    };
    const bool table_ok = mcs.item_count() == 7 && mcs.subsets() == expected &&
                          testing::min_compare_set_brute(mcs) == 6;

    const bool ok = failures == 0 && table_ok;
    report(5, ok, "greedy minrep/minspan certified on 300 random instances within the "
                  "set-cover bounds; worked compare-set table reproduced, optimum 6");
    CHECK(failures == 0);
    CHECK(table_ok);
}

TEST_CASE("criterion 6: formula transformation laws") {
    int failures = 0;
    testing::Rng rng(6066);
    int checked = 0;
    while (checked < 500) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = 1 + rng() % 5;
        const StringSet w = testing::random_set(rng, m, n);
        const Formula f = testing::random_formula(rng, static_cast<int>(n), 6);

        const Formula nnf = push_negations(f);
        if (nnf.has_negation_nodes()) ++failures;
        if (eval(nnf, w) != eval(f, w)) ++failures;

        CnfFormula cnf;
        try {
            cnf = to_cnf(nnf);
        } catch (const Error&) {
            continue;
        }
        if (eval(cnf, w) != eval(f, w)) ++failures;

        std::set<std::pair<int, bool>> allowed;
        struct Walk {
            static void leaves(const Formula& g, std::set<std::pair<int, bool>>& out) {
                switch (g.kind()) {
                    case Formula::Kind::variable: out.emplace(g.index(), false); return;
                    case Formula::Kind::neg_variable: out.emplace(g.index(), true); return;
                    case Formula::Kind::negation: leaves(g.child(), out); return;
                    default:
                        leaves(g.left(), out);
                        leaves(g.right(), out);
                }
            }
        };
        Walk::leaves(nnf, allowed);
        for (const auto& clause : cnf.clauses)
            for (const auto& lit : clause)
                if (!allowed.count({lit.index, lit.negated})) ++failures;
        ++checked;
    }
    report(6, failures == 0,
           "500 random formulas: push_negations and to_cnf preserve evaluation bit-exactly "
           "and introduce no operands");
    CHECK(failures == 0);
}

TEST_CASE("criterion 7: word-packed decision at desk scale") {
    testing::Rng rng(7077);
    const std::vector<std::size_t> sizes = {256, 512, 1024, 2048};
    std::vector<double> serial_times;
    double parallel_large = 0.0;
    for (std::size_t m : sizes) {
        const StringSet w = testing::random_set(rng, m, m);
        const BitString target = testing::random_bitstring(rng, m);
        const int reps = m >= 2048 ? 3 : (m >= 1024 ? 7 : 15);
        serial_times.push_back(time_decide(w, target, kernels::Policy::serial, reps));
        if (m == 2048) parallel_large = time_decide(w, target, kernels::Policy::parallel, 3);
    }

    const bool under_budget = parallel_large < 2.0 && serial_times.back() < 2.0;

    // Cubic fit: some constant c must put every measurement within a factor
    // of 3 of c * m^3, i.e. the per-m^3 rates may spread at most 9x. The
    // best c is the geometric midpoint of the extreme rates.
    double rate_min = 1e100, rate_max = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const double rate = serial_times[i] / std::pow(static_cast<double>(sizes[i]), 3.0);
        rate_min = std::min(rate_min, rate);
        rate_max = std::max(rate_max, rate);
    }
    const bool cubic = rate_max <= 9.0 * rate_min;
    std::printf("  cubic-fit rate spread: %.2fx (limit 9x for a factor-3 fit)\n",
                rate_max / rate_min);

    std::printf("  decide timings (serial, best-of): 256 -> %.3f ms, 512 -> %.3f ms, "
                "1024 -> %.3f ms, 2048 -> %.3f ms (parallel 2048 -> %.3f ms)\n",
                serial_times[0] * 1e3, serial_times[1] * 1e3, serial_times[2] * 1e3,
                serial_times[3] * 1e3, parallel_large * 1e3);
    const bool ok = under_budget && cubic;
    report(7, ok, "decide at m = n = 2048 under 2 s; growth across 256..2048 within 3x of "
                  "cubic");
    CHECK(under_budget);
    CHECK(cubic);
}

TEST_CASE("criterion 8: CLI snapshot and exit codes") {
    if (testing::cli_path() == nullptr) {
        report(8, false, "BSR_CLI not set; run through ctest or export the binary path");
        FAIL("BSR_CLI environment variable missing");
        return;
    }
    const std::string w1 = testing::write_scratch("acc_w1.txt", "1100\n0110\n0011\n").string();
    const std::string two = testing::write_scratch("acc_two.txt", "10\n01\n").string();
    const std::string poset = testing::write_scratch("acc_chain.poset", "3\n1 2\n2 3\n").string();
    const std::string ragged = testing::write_scratch("acc_bad.txt", "10\n011\n").string();

    int failures = 0;
    auto snapshot = [&failures](const std::string& args, int want_exit) {
        const auto first = testing::run_cli(args);
        const auto second = testing::run_cli(args);
        if (first.exit_code != want_exit || second.exit_code != want_exit) ++failures;
        if (first.out != second.out || first.err != second.err) ++failures;
        return first;
    };

    const auto decide_yes = snapshot("decide " + w1 + " --target 0100", 0);
    if (decide_yes.out.find("\"representable\":true") == std::string::npos) ++failures;
    const auto decide_no = snapshot("decide " + w1 + " --target 1000", 0);
    if (decide_no.out.find("\"representable\":false") == std::string::npos) ++failures;

    snapshot("count " + two, 0);
    snapshot("count " + w1 + " --negation", 0);
    snapshot("minrep " + w1 + " --target 0100", 0);
    snapshot("minrep " + w1 + " --target 0100 --exact", 0);
    snapshot("minspan " + w1, 0);
    snapshot("closure " + w1, 0);
    const auto generated = snapshot("from-poset " + poset, 0);
    if (generated.out != "000\n100\n110\n111\n") ++failures;

    snapshot("decide " + ragged + " --target 10", 2);
    snapshot("closure " + w1 + " --limit 5", 3);
    snapshot("minrep " + w1 + " --target 1000", 4);

    report(8, failures == 0,
           "fixed CLI inputs byte-identical across consecutive runs; exit codes 0/2/3/4 as "
           "documented");
    CHECK(failures == 0);
}
