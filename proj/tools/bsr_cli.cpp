// Command-line front end: file ingestion, subcommand dispatch, JSON (or
// plain) reports on stdout, machine-parsable errors on stderr.
//
// Exit codes: 0 success (a negative decision is still a successful query),
// 2 malformed input, 3 resource bound exceeded, 4 target not generable
// (minrep only), 1 internal failure.

#include <algorithm>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsr/closure.hpp"
#include "bsr/counting.hpp"
#include "bsr/errors.hpp"
#include "bsr/json_io.hpp"
#include "bsr/optimize.hpp"
#include "bsr/represent.hpp"
#include "bsr/stringset.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kClosurePrintCap = 4096;

int exit_code_for(bsr::ErrorKind kind) {
    switch (kind) {
        case bsr::ErrorKind::too_large:
        case bsr::ErrorKind::limit_exceeded:
        case bsr::ErrorKind::size_explosion: return 3;
        case bsr::ErrorKind::not_representable: return 4;
        case bsr::ErrorKind::internal_invariant: return 1;
        default: return 2;
    }
}

[[noreturn]] void fail(const std::string& code, const std::string& detail, int exit_code) {
    std::cerr << ordered_json{{"error", code}, {"detail", detail}}.dump() << '\n';
    std::exit(exit_code);
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << '\n'; }

std::string witness_text(const bsr::CnfFormula& cnf) {
    std::string out;
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        out += c ? " & (" : "(";
        for (std::size_t i = 0; i < cnf.clauses[c].size(); ++i) {
            if (i) out += " | ";
            if (cnf.clauses[c][i].negated) out += "~";
            out += "x" + std::to_string(cnf.clauses[c][i].index);
        }
        out += ")";
    }
    return out;
}

void report_decision(const bsr::Verdict& verdict, const std::string& output) {
    if (output == "plain") {
        std::cout << "representable: " << (verdict.representable ? "true" : "false") << '\n';
        if (verdict.witness) std::cout << "witness: " << witness_text(*verdict.witness) << '\n';
        return;
    }
    ordered_json doc{{"representable", verdict.representable}, {"witness", nullptr}};
    if (verdict.witness) doc["witness"] = bsr::cnf_to_json(*verdict.witness);
    emit(doc);
}

void report_subset(const bsr::SubsetAnswer& answer, bool exact, const std::string& output) {
    const char* method = exact ? "exact" : "greedy";
    if (output == "plain") {
        std::cout << "indices:";
        for (int i : answer.chosen) std::cout << ' ' << i;
        std::cout << '\n'
                  << "size: " << answer.chosen.size() << '\n'
                  << "method: " << method << '\n'
                  << "certified: " << (answer.certified ? "true" : "false") << '\n';
        return;
    }
    emit(ordered_json{{"indices", answer.chosen},
                      {"size", answer.chosen.size()},
                      {"method", method},
                      {"certified", answer.certified}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generability of binary strings under bitwise AND/OR (and NOT)"};
    app.require_subcommand(1);

    std::string input_path;
    std::string target_text;
    std::string output = "json";
    bool negation = false;
    bool exact = false;
    std::size_t limit = bsr::kDefaultClosureLimit;

    auto add_common = [&](CLI::App* cmd, bool with_target) {
        cmd->add_option("input", input_path, "string-set file")->required();
        if (with_target)
            cmd->add_option("--target", target_text, "target bit string ('0'/'1' literal)")
                ->required();
        cmd->add_option("--output", output, "output format")
            ->check(CLI::IsMember({"json", "plain"}));
    };

    auto* cmd_decide = app.add_subcommand("decide", "is the target generable from the set?");
    add_common(cmd_decide, true);
    cmd_decide->add_flag("--negation", negation, "allow NOT");

    auto* cmd_count = app.add_subcommand("count", "count the generable strings");
    add_common(cmd_count, false);
    cmd_count->add_flag("--negation", negation, "allow NOT");

    auto* cmd_minrep =
        app.add_subcommand("minrep", "minimum subset that still generates the target");
    add_common(cmd_minrep, true);
    cmd_minrep->add_flag("--negation", negation, "allow NOT");
    cmd_minrep->add_flag("--exact", exact, "exhaustive optimum instead of greedy");

    auto* cmd_minspan =
        app.add_subcommand("minspan", "minimum subset that generates every member");
    add_common(cmd_minspan, false);
    cmd_minspan->add_flag("--exact", exact, "exhaustive optimum instead of greedy");

    auto* cmd_closure = app.add_subcommand("closure", "materialize all generable strings");
    add_common(cmd_closure, false);
    cmd_closure->add_flag("--negation", negation, "allow NOT");
    cmd_closure->add_option("--limit", limit, "abort past this many strings");

    auto* cmd_from_poset =
        app.add_subcommand("from-poset", "emit a string set whose count equals the poset's "
                                         "antichain count");
    cmd_from_poset->add_option("input", input_path, "poset file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what(), 2);
    }

    try {
        if (cmd_from_poset->parsed()) {
            bsr::write_string_set(std::cout, bsr::poset_to_instance(bsr::load_poset(input_path)));
            return 0;
        }

        const bsr::StringSet w = bsr::load_string_set(input_path);

        if (cmd_decide->parsed()) {
            const bsr::BitString target = bsr::BitString::parse(target_text);
            report_decision(
                negation ? bsr::decide_with_negation(w, target) : bsr::decide(w, target), output);
        } else if (cmd_count->parsed()) {
            bsr::BigCount count;
            std::size_t classes = 0;
            if (negation) {
                count = bsr::count_with_negation(w);
                classes = static_cast<std::size_t>(bsr::negation_class_count(w));
            } else {
                const bsr::ClassPoset poset = bsr::build_poset(w);
                count = bsr::count_upper_sets(poset);
                classes = static_cast<std::size_t>(poset.size());
            }
            if (output == "plain")
                std::cout << "count: " << count.str() << '\n' << "classes: " << classes << '\n';
            else
                emit(ordered_json{{"count", count.str()}, {"classes", classes}});
        } else if (cmd_minrep->parsed()) {
            const bsr::BitString target = bsr::BitString::parse(target_text);
            report_subset(exact ? bsr::min_rep_subset_exact(w, target, negation)
                                : bsr::min_rep_subset_greedy(w, target, negation),
                          exact, output);
        } else if (cmd_minspan->parsed()) {
            report_subset(exact ? bsr::min_spanning_subset_exact(w)
                                : bsr::min_spanning_subset_greedy(w),
                          exact, output);
        } else if (cmd_closure->parsed()) {
            std::vector<bsr::BitString> members = bsr::closure(w, negation, limit);
            std::sort(members.begin(), members.end());
            if (output == "plain") {
                std::cout << "size: " << members.size() << '\n';
                if (members.size() <= kClosurePrintCap)
                    for (const auto& s : members) std::cout << s.to_string() << '\n';
            } else {
                ordered_json doc{{"size", members.size()}};
                if (members.size() <= kClosurePrintCap) {
                    ordered_json strings = ordered_json::array();
                    for (const auto& s : members) strings.push_back(s.to_string());
                    doc["strings"] = std::move(strings);
                }
                emit(doc);
            }
        }
    } catch (const bsr::Error& e) {
        fail(bsr::to_string(e.kind()), e.what(), exit_code_for(e.kind()));
    } catch (const std::exception& e) {
        fail("internal", e.what(), 1);
    }
    return 0;
}
