#pragma once

#include <json.hpp>

#include "bsr/formula.hpp"

namespace bsr {

/// Canonical witness serialization, shared between the CLI and tests:
/// {"type":"cnf","clauses":[[...],...]} where a plain leaf is its string
/// index and a complemented one the token "~<index>".
inline nlohmann::ordered_json cnf_to_json(const CnfFormula& cnf) {
    nlohmann::ordered_json clauses = nlohmann::ordered_json::array();
    for (const auto& clause : cnf.clauses) {
        nlohmann::ordered_json tokens = nlohmann::ordered_json::array();
        for (const auto& lit : clause) {
            if (lit.negated)
                tokens.push_back("~" + std::to_string(lit.index));
            else
                tokens.push_back(lit.index);
        }
        clauses.push_back(std::move(tokens));
    }
    return {{"type", "cnf"}, {"clauses", std::move(clauses)}};
}

}  // namespace bsr
