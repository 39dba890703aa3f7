#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bpmnsim/expr/ast.hpp"

namespace bpmnsim {

namespace detail {

inline std::string canonical(const ExprPtr& e);

// Flattens an associative and/or chain into its operand list.
inline void flatten(const ExprPtr& e, ExprKind kind, std::vector<ExprPtr>& out) {
    if (e->kind == kind) {
        flatten(e->left, kind, out);
        flatten(e->right, kind, out);
    } else {
        out.push_back(e);
    }
}

inline std::string canonical(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Literal: return value_repr(e->literal);
        case ExprKind::Variable: return e->name;
        case ExprKind::Compare:
            return "(" + canonical(e->left) + " " + cmp_op_text(e->op) + " " +
                   canonical(e->right) + ")";
        case ExprKind::Not: return "(not " + canonical(e->left) + ")";
        case ExprKind::And:
        case ExprKind::Or: {
            std::vector<ExprPtr> operands;
            flatten(e, e->kind, operands);
            std::vector<std::string> parts;
            parts.reserve(operands.size());
            for (const auto& op : operands) parts.push_back(canonical(op));
            std::sort(parts.begin(), parts.end());
            const char* join = e->kind == ExprKind::And ? " and " : " or ";
            std::string out = "(" + parts[0];
            for (std::size_t i = 1; i < parts.size(); ++i) out += join + parts[i];
            return out + ")";
        }
    }
    return {};
}

} // namespace detail

// Canonical form: fully parenthesized, single-spaced, associative and/or
// chains flattened with operands sorted lexicographically. Two trees that
// differ only in whitespace, redundant parentheses, or commutative operand
// order normalize to the same string; the engine compares these byte-wise.
inline std::string normalize(const ExprPtr& ast) {
    return detail::canonical(ast);
}

} // namespace bpmnsim
