#include "bsr/formula.hpp"

namespace bsr {

Formula Formula::var(int index) {
    return Formula(std::make_shared<const Node>(Node{Kind::variable, index, nullptr, nullptr}));
}

Formula Formula::neg_var(int index) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::neg_variable, index, nullptr, nullptr}));
}

Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::conjunction, -1, std::move(left.node_), std::move(right.node_)}));
}

Formula Formula::disj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::disjunction, -1, std::move(left.node_), std::move(right.node_)}));
}

Formula Formula::negate(Formula child) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::negation, -1, std::move(child.node_), nullptr}));
}

std::size_t Formula::leaf_count() const {
    switch (kind()) {
        case Kind::variable:
        case Kind::neg_variable: return 1;
        case Kind::negation: return child().leaf_count();
        default: return left().leaf_count() + right().leaf_count();
    }
}

bool Formula::has_negation_nodes() const {
    switch (kind()) {
        case Kind::variable:
        case Kind::neg_variable: return false;
        case Kind::negation: return true;
        default: return left().has_negation_nodes() || right().has_negation_nodes();
    }
}

std::string Formula::to_string() const {
    switch (kind()) {
        case Kind::variable: return "x" + std::to_string(index());
        case Kind::neg_variable: return "~x" + std::to_string(index());
        case Kind::negation: return "~(" + child().to_string() + ")";
        case Kind::conjunction: return "(" + left().to_string() + " & " + right().to_string() + ")";
        case Kind::disjunction: return "(" + left().to_string() + " | " + right().to_string() + ")";
    }
    return "?";
}

namespace {

const BitString& leaf_operand(const StringSet& w, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= w.size())
        raise(ErrorKind::index_out_of_range,
              "leaf index " + std::to_string(index) + " with n = " + std::to_string(w.size()));
    return w[static_cast<std::size_t>(index)];
}

}  // namespace

BitString eval(const Formula& f, const StringSet& w) {
    switch (f.kind()) {
        case Formula::Kind::variable: return leaf_operand(w, f.index());
        case Formula::Kind::neg_variable: return ~leaf_operand(w, f.index());
        case Formula::Kind::negation: return ~eval(f.child(), w);
        case Formula::Kind::conjunction: return eval(f.left(), w) & eval(f.right(), w);
        case Formula::Kind::disjunction: return eval(f.left(), w) | eval(f.right(), w);
    }
    raise(ErrorKind::internal_invariant, "unreachable formula kind");
}

BitString eval(const CnfFormula& f, const StringSet& w) {
    BitString acc = BitString::ones(w.width());
    for (const auto& clause : f.clauses) {
        BitString or_acc(w.width());
        for (const auto& lit : clause) {
            const BitString& s = leaf_operand(w, lit.index);
            or_acc |= lit.negated ? ~s : s;
        }
        acc &= or_acc;
    }
    return acc;
}

namespace {

Formula to_nnf(const Formula& f, bool negated) {
    switch (f.kind()) {
        case Formula::Kind::variable:
            return negated ? Formula::neg_var(f.index()) : Formula::var(f.index());
        case Formula::Kind::neg_variable:
            return negated ? Formula::var(f.index()) : Formula::neg_var(f.index());
        case Formula::Kind::negation: return to_nnf(f.child(), !negated);
        case Formula::Kind::conjunction:
            return negated
                       ? Formula::disj(to_nnf(f.left(), true), to_nnf(f.right(), true))
                       : Formula::conj(to_nnf(f.left(), false), to_nnf(f.right(), false));
        case Formula::Kind::disjunction:
            return negated
                       ? Formula::conj(to_nnf(f.left(), true), to_nnf(f.right(), true))
                       : Formula::disj(to_nnf(f.left(), false), to_nnf(f.right(), false));
    }
    raise(ErrorKind::internal_invariant, "unreachable formula kind");
}

using ClauseList = std::vector<std::vector<CnfLiteral>>;

ClauseList cnf_clauses(const Formula& f, std::size_t clause_cap) {
    switch (f.kind()) {
        case Formula::Kind::variable:
            return {{CnfLiteral{f.index(), false}}};
        case Formula::Kind::neg_variable:
            return {{CnfLiteral{f.index(), true}}};
        case Formula::Kind::negation:
            throw std::logic_error("to_cnf requires a negation-free formula; run push_negations");
        case Formula::Kind::conjunction: {
            ClauseList out = cnf_clauses(f.left(), clause_cap);
            ClauseList rhs = cnf_clauses(f.right(), clause_cap);
            if (out.size() + rhs.size() > clause_cap)
                raise(ErrorKind::size_explosion,
                      "clause count exceeds " + std::to_string(clause_cap));
            out.insert(out.end(), std::make_move_iterator(rhs.begin()),
                       std::make_move_iterator(rhs.end()));
            return out;
        }
        case Formula::Kind::disjunction: {
            ClauseList lhs = cnf_clauses(f.left(), clause_cap);
            ClauseList rhs = cnf_clauses(f.right(), clause_cap);
            if (lhs.size() > clause_cap / rhs.size())
                raise(ErrorKind::size_explosion,
                      "clause count exceeds " + std::to_string(clause_cap));
            ClauseList out;
            out.reserve(lhs.size() * rhs.size());
            for (const auto& a : lhs)
                for (const auto& b : rhs) {
                    std::vector<CnfLiteral> merged = a;
                    merged.insert(merged.end(), b.begin(), b.end());
                    out.push_back(std::move(merged));
                }
            return out;
        }
    }
    raise(ErrorKind::internal_invariant, "unreachable formula kind");
}

}  // namespace

Formula push_negations(const Formula& f) { return to_nnf(f, false); }

CnfFormula to_cnf(const Formula& f, std::size_t clause_cap) {
    return CnfFormula{cnf_clauses(f, clause_cap)};
}

}  // namespace bsr
