#pragma once

#include <map>
#include <string>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/ast.hpp"
#include "bpmnsim/schema.hpp"
#include "bpmnsim/value.hpp"

namespace bpmnsim {

using Bindings = std::map<std::string, Value>;

namespace detail {

inline bool compare_ordered(CmpOp op, int cmp) {
    switch (op) {
        case CmpOp::Eq: return cmp == 0;
        case CmpOp::Ne: return cmp != 0;
        case CmpOp::Ge: return cmp >= 0;
        case CmpOp::Le: return cmp <= 0;
        case CmpOp::Gt: return cmp > 0;
        default: return cmp < 0;
    }
}

// Resolves the grade ordering for a category comparison: one side must be a
// variable whose schema column declares grade_order covering both grades.
inline int category_cmp(const Expr& node, const std::string& lhs, const std::string& rhs,
                        const PatientSchema* schema) {
    const SchemaColumn* col = nullptr;
    if (schema) {
        if (node.left->kind == ExprKind::Variable) col = schema->find(node.left->name);
        if (!col && node.right->kind == ExprKind::Variable) col = schema->find(node.right->name);
    }
    if (col) {
        auto lr = col->grade_rank(lhs);
        auto rr = col->grade_rank(rhs);
        if (lr && rr) return *lr < *rr ? -1 : (*lr > *rr ? 1 : 0);
    }
    throw TypeMismatch(cmp_op_text(node.op), "category (unordered)", "category (unordered)");
}

inline Value eval_node(const Expr& e, const Bindings& bindings, const PatientSchema* schema) {
    switch (e.kind) {
        case ExprKind::Literal:
            return e.literal;
        case ExprKind::Variable: {
            auto it = bindings.find(e.name);
            if (it == bindings.end()) throw UnboundVariable(e.name);
            return it->second;
        }
        case ExprKind::Compare: {
            Value lhs = eval_node(*e.left, bindings, schema);
            Value rhs = eval_node(*e.right, bindings, schema);
            ValueKind lk = kind_of(lhs), rk = kind_of(rhs);
            if (lk != rk) throw TypeMismatch(cmp_op_text(e.op), kind_name(lk), kind_name(rk));
            switch (lk) {
                case ValueKind::Number: {
                    double a = std::get<double>(lhs), b = std::get<double>(rhs);
                    // exact double comparison: thresholds are policy constants
                    switch (e.op) {
                        case CmpOp::Eq: return Value(a == b);
                        case CmpOp::Ne: return Value(a != b);
                        case CmpOp::Ge: return Value(a >= b);
                        case CmpOp::Le: return Value(a <= b);
                        case CmpOp::Gt: return Value(a > b);
                        default: return Value(a < b);
                    }
                }
                case ValueKind::Boolean: {
                    if (e.op != CmpOp::Eq && e.op != CmpOp::Ne)
                        throw TypeMismatch(cmp_op_text(e.op), "boolean", "boolean");
                    bool eq = std::get<bool>(lhs) == std::get<bool>(rhs);
                    return Value(e.op == CmpOp::Eq ? eq : !eq);
                }
                default: {
                    const auto& a = std::get<std::string>(lhs);
                    const auto& b = std::get<std::string>(rhs);
                    if (e.op == CmpOp::Eq) return Value(a == b);
                    if (e.op == CmpOp::Ne) return Value(a != b);
                    return Value(compare_ordered(e.op, category_cmp(e, a, b, schema)));
                }
            }
        }
        case ExprKind::Not: {
            Value v = eval_node(*e.left, bindings, schema);
            if (kind_of(v) != ValueKind::Boolean)
                throw TypeMismatch("not", kind_name(v), "");
            return Value(!std::get<bool>(v));
        }
        case ExprKind::And:
        case ExprKind::Or: {
            // strict semantics: both operands always evaluated
            Value lhs = eval_node(*e.left, bindings, schema);
            Value rhs = eval_node(*e.right, bindings, schema);
            const char* op = e.kind == ExprKind::And ? "and" : "or";
            if (kind_of(lhs) != ValueKind::Boolean || kind_of(rhs) != ValueKind::Boolean)
                throw TypeMismatch(op, kind_name(lhs), kind_name(rhs));
            bool a = std::get<bool>(lhs), b = std::get<bool>(rhs);
            return Value(e.kind == ExprKind::And ? (a && b) : (a || b));
        }
    }
    throw Error("unreachable expression kind");
}

} // namespace detail

inline Value evaluate(const ExprPtr& ast, const Bindings& bindings,
                      const PatientSchema* schema = nullptr) {
    return detail::eval_node(*ast, bindings, schema);
}

inline Value evaluate(const ExprPtr& ast, const PatientRecord& record,
                      const PatientSchema* schema = nullptr) {
    return detail::eval_node(*ast, record.values, schema);
}

// Evaluates an expression expected to yield a Boolean (gateway conditions).
inline bool evaluate_condition(const ExprPtr& ast, const Bindings& bindings,
                               const PatientSchema* schema = nullptr) {
    Value v = evaluate(ast, bindings, schema);
    if (kind_of(v) != ValueKind::Boolean)
        throw TypeMismatch("condition", kind_name(v), "boolean expected");
    return std::get<bool>(v);
}

} // namespace bpmnsim
