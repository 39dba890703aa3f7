#pragma once

#include <string>

#include "bpmnsim/expr/ast.hpp"

namespace bpmnsim {

namespace detail {

inline std::string emit(const ExprPtr& e);

// Children of and/or are parenthesized when they are the other connective
// (mixed scopes) or a right-nested chain of the same one, so the printed
// text re-parses to a structurally identical tree.
inline std::string emit_operand(const ExprPtr& child, ExprKind parent, bool is_right) {
    bool needs_parens = (child->kind == ExprKind::And || child->kind == ExprKind::Or) &&
                        (child->kind != parent || is_right);
    std::string text = emit(child);
    return needs_parens ? "(" + text + ")" : text;
}

inline std::string emit(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Literal: return value_repr(e->literal);
        case ExprKind::Variable: return e->name;
        case ExprKind::Compare:
            return emit(e->left) + " " + cmp_op_text(e->op) + " " + emit(e->right);
        case ExprKind::Not: return "not (" + emit(e->left) + ")";
        case ExprKind::And:
            return emit_operand(e->left, ExprKind::And, false) + " and " +
                   emit_operand(e->right, ExprKind::And, true);
        default:
            return emit_operand(e->left, ExprKind::Or, false) + " or " +
                   emit_operand(e->right, ExprKind::Or, true);
    }
}

} // namespace detail

// Depth-first emission in the condition surface syntax. The output
// re-tokenizes and re-parses to a tree structurally equal to the input.
inline std::string generate_expression_text(const ExprPtr& ast) {
    return detail::emit(ast);
}

} // namespace bpmnsim
