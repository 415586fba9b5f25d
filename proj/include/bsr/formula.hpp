#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bsr/stringset.hpp"

namespace bsr {

/// Immutable operator tree over string indices. Leaves are a plain index
/// (`variable`) or a complemented one (`neg_variable`); a negation-free tree
/// whose leaves may be neg_variable is exactly a formula over the set
/// extended with its complements. Handles share nodes, so copies are cheap
/// and concurrent reads are safe.
class Formula {
  public:
    enum class Kind { variable, neg_variable, conjunction, disjunction, negation };

    static Formula var(int index);
    static Formula neg_var(int index);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);
    static Formula negate(Formula child);

    Kind kind() const { return node_->kind; }
    int index() const { return node_->index; }
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }
    Formula child() const { return Formula(node_->left); }

    std::size_t leaf_count() const;
    bool has_negation_nodes() const;

    /// Infix rendering with x<i> / ~x<i> leaves, for diagnostics.
    std::string to_string() const;

  private:
    struct Node {
        Kind kind;
        int index = -1;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// One CNF leaf: string index, possibly complemented.
struct CnfLiteral {
    std::int32_t index;
    bool negated = false;

    bool operator==(const CnfLiteral&) const = default;
    auto operator<=>(const CnfLiteral&) const = default;
};

/// Conjunction over clauses of disjunctions over leaves; no negation nodes
/// exist at this level. Both lists are nonempty.
struct CnfFormula {
    std::vector<std::vector<CnfLiteral>> clauses;

    bool operator==(const CnfFormula&) const = default;
};

inline constexpr std::size_t kDefaultClauseCap = std::size_t{1} << 16;

/// Bitwise evaluation against a string set; neg_variable leaves evaluate to
/// the complement of the indexed string. Throws index_out_of_range.
BitString eval(const Formula& f, const StringSet& w);
BitString eval(const CnfFormula& f, const StringSet& w);

/// De Morgan rewrite: the result has no negation nodes, every negation is
/// absorbed into the leaves, and evaluation is unchanged for every set.
Formula push_negations(const Formula& f);

/// Distributes disjunctions over conjunctions until the tree is a pure
/// conjunction of disjunctive clauses. Requires a negation-free input (run
/// push_negations first); every output leaf occurs as an input leaf. No
/// clause deduplication or absorption is applied. Throws size_explosion once
/// the clause count would pass `clause_cap`.
CnfFormula to_cnf(const Formula& f, std::size_t clause_cap = kDefaultClauseCap);

}  // namespace bsr
