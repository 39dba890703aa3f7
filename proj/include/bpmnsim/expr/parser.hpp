#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/ast.hpp"
#include "bpmnsim/expr/lexer.hpp"

namespace bpmnsim {

namespace detail {

class TokenParser {
public:
    explicit TokenParser(const std::vector<CriterionToken>& tokens) : tokens_(tokens) {}

    ExprPtr parse_all() {
        ExprPtr e = or_expr();
        if (pos_ != tokens_.size()) throw ParseError(pos_, "end of input");
        return e;
    }

private:
    const std::vector<CriterionToken>& tokens_;
    std::size_t pos_ = 0;

    bool at_connective(Connective c) const {
        return pos_ < tokens_.size() &&
               tokens_[pos_].kind == CriterionToken::Kind::Connective &&
               tokens_[pos_].connective == c;
    }
    bool at_kind(CriterionToken::Kind k) const {
        return pos_ < tokens_.size() && tokens_[pos_].kind == k;
    }

    ExprPtr or_expr() {
        ExprPtr left = and_expr();
        while (at_connective(Connective::Or)) {
            ++pos_;
            left = make_or(left, and_expr());
        }
        return left;
    }

    ExprPtr and_expr() {
        ExprPtr left = unary();
        while (at_connective(Connective::And)) {
            ++pos_;
            left = make_and(left, unary());
        }
        return left;
    }

    // "not" applies to parenthesized groups only; bare "not x >= 5" does
    // not parse.
    ExprPtr unary() {
        if (at_connective(Connective::Not)) {
            ++pos_;
            if (!at_kind(CriterionToken::Kind::GroupOpen))
                throw ParseError(pos_, "'(' after not");
            return make_not(group());
        }
        if (at_kind(CriterionToken::Kind::GroupOpen)) return group();
        if (at_kind(CriterionToken::Kind::Predicate)) return tokens_[pos_++].predicate;
        throw ParseError(pos_, "expression");
    }

    ExprPtr group() {
        ++pos_; // GroupOpen
        ExprPtr inner = or_expr();
        if (!at_kind(CriterionToken::Kind::GroupClose)) throw ParseError(pos_, "')'");
        ++pos_;
        return inner;
    }
};

} // namespace detail

// Parses a token list with standard precedence: not > comparison > and > or,
// and/or left-associative, parentheses override.
inline ExprPtr parse(const std::vector<CriterionToken>& tokens) {
    return detail::TokenParser(tokens).parse_all();
}

inline ExprPtr parse_expression(const std::string& text) {
    return parse(tokenize(text));
}

// How a parenthesis-free mixed and/or token stream should be scoped when the
// source document gives a formatting cue. Absent a hint the conjunctive
// (narrower) reading wins.
enum class GroupingHint { Conjunctive, Disjunctive };

// Resolves scope for an ambiguous flat criterion: predicates joined by
// connectives with no parentheses. The default (no hint) nests OR-groups
// under the AND spine, so "A and B or C" reads as A and (B or C) — the
// narrower interpretation. A Disjunctive hint selects standard precedence
// instead: (A and B) or C.
inline ExprPtr resolve_scope(const std::vector<CriterionToken>& tokens,
                             std::optional<GroupingHint> grouping_hint = std::nullopt) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (t.kind == CriterionToken::Kind::GroupOpen ||
            t.kind == CriterionToken::Kind::GroupClose)
            throw ParseError(i, "flat token stream without parentheses");
        if (t.kind == CriterionToken::Kind::Connective && t.connective == Connective::Not)
            throw ParseError(i, "predicate-level negation only");
        bool expect_predicate = (i % 2 == 0);
        if (expect_predicate && t.kind != CriterionToken::Kind::Predicate)
            throw ParseError(i, "predicate");
        if (!expect_predicate && t.kind != CriterionToken::Kind::Connective)
            throw ParseError(i, "connective");
    }
    if (tokens.empty() || tokens.size() % 2 == 0)
        throw ParseError(tokens.size(), "predicate");

    if (grouping_hint == GroupingHint::Disjunctive) return parse(tokens);

    // Conjunctive default: split on AND, OR-join each segment, AND-join the
    // segments. Both joins left-associative.
    std::vector<ExprPtr> segments;
    ExprPtr current;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        ExprPtr pred = tokens[i].predicate;
        current = current ? make_or(current, pred) : pred;
        bool at_end = i + 1 >= tokens.size();
        if (at_end || tokens[i + 1].connective == Connective::And) {
            segments.push_back(current);
            current = nullptr;
        }
    }
    ExprPtr result;
    for (const auto& seg : segments) result = result ? make_and(result, seg) : seg;
    return result;
}

} // namespace bpmnsim
