#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "bpmnsim/value.hpp"

namespace bpmnsim {

enum class CmpOp : std::uint8_t { Eq, Ne, Ge, Le, Gt, Lt };

inline const char* cmp_op_text(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "==";
        case CmpOp::Ne: return "!=";
        case CmpOp::Ge: return ">=";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        default: return "<";
    }
}

enum class ExprKind : std::uint8_t { Literal, Variable, Compare, Not, And, Or };

// Immutable expression tree node. Trees are shared freely (shared_ptr to
// const); rewrites build new trees.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Value literal;          // Literal
    std::string name;       // Variable
    CmpOp op = CmpOp::Eq;   // Compare
    ExprPtr left;           // Compare/And/Or left, Not child
    ExprPtr right;          // Compare/And/Or right
};

inline bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    unsigned char c0 = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(c0) && name[0] != '_') return false;
    for (char ch : name) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && ch != '_') return false;
    }
    return true;
}

inline ExprPtr make_literal(Value v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Literal;
    e->literal = std::move(v);
    return e;
}

inline ExprPtr make_variable(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Variable;
    e->name = std::move(name);
    return e;
}

inline ExprPtr make_compare(ExprPtr left, CmpOp op, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Compare;
    e->op = op;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

inline ExprPtr make_not(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Not;
    e->left = std::move(child);
    return e;
}

inline ExprPtr make_and(ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::And;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

inline ExprPtr make_or(ExprPtr left, ExprPtr right) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Or;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Literal: return a->literal == b->literal;
        case ExprKind::Variable: return a->name == b->name;
        case ExprKind::Compare:
            return a->op == b->op && structurally_equal(a->left, b->left) &&
                   structurally_equal(a->right, b->right);
        case ExprKind::Not: return structurally_equal(a->left, b->left);
        default:
            return structurally_equal(a->left, b->left) &&
                   structurally_equal(a->right, b->right);
    }
}

// Number of conjuncts: AND nodes + 1. The rule-R5 generality measure; OR
// structure is deliberately ignored.
inline int count_conjuncts(const ExprPtr& e) {
    if (!e) return 0;
    int ands = 0;
    auto walk = [&](auto&& self, const ExprPtr& n) -> void {
        if (!n) return;
        if (n->kind == ExprKind::And) ++ands;
        self(self, n->left);
        self(self, n->right);
    };
    walk(walk, e);
    return ands + 1;
}

// Calls fn for every Variable node in the tree.
template <typename Fn>
inline void for_each_variable(const ExprPtr& e, Fn&& fn) {
    if (!e) return;
    if (e->kind == ExprKind::Variable) fn(*e);
    for_each_variable(e->left, fn);
    for_each_variable(e->right, fn);
}

} // namespace bpmnsim
