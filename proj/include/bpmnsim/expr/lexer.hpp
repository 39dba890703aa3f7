#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/ast.hpp"

// Lexer for the condition surface syntax (Python-style Boolean expressions):
//
//   expr     := or_expr
//   or_expr  := and_expr ( "or" and_expr )*
//   and_expr := unary ( "and" unary )*
//   unary    := "not" "(" expr ")" | "(" expr ")" | atom
//   atom     := operand [ cmp operand ]
//   operand  := identifier | number | string | "True" | "False"
//   cmp      := "==" | "!=" | ">=" | "<=" | ">" | "<"
//
// Tokenization folds each atom into a single Predicate token, so the token
// stream is predicate-granular: predicates, connectives, and parentheses.

namespace bpmnsim {

enum class Connective : std::uint8_t { And, Or, Not };

struct CriterionToken {
    enum class Kind : std::uint8_t { Predicate, Connective, GroupOpen, GroupClose };
    Kind kind;
    ExprPtr predicate;             // Predicate only: Compare, Variable, Literal,
                                   // or a negation of a Compare
    Connective connective = Connective::And;
    std::size_t position = 0;      // source offset (or token index for built streams)
};

inline CriterionToken predicate_token(ExprPtr e, std::size_t pos = 0) {
    return {CriterionToken::Kind::Predicate, std::move(e), Connective::And, pos};
}
inline CriterionToken connective_token(Connective c, std::size_t pos = 0) {
    return {CriterionToken::Kind::Connective, nullptr, c, pos};
}
inline CriterionToken group_open_token(std::size_t pos = 0) {
    return {CriterionToken::Kind::GroupOpen, nullptr, Connective::And, pos};
}
inline CriterionToken group_close_token(std::size_t pos = 0) {
    return {CriterionToken::Kind::GroupClose, nullptr, Connective::And, pos};
}

namespace detail {

enum class LexKind : std::uint8_t {
    Ident, Number, String, True_, False_, And, Or, Not, Cmp, Assign, LParen, RParen, End
};

struct Lexeme {
    LexKind kind;
    std::string text;
    double number = 0.0;
    CmpOp op = CmpOp::Eq;
    std::size_t pos = 0;
};

// Raw scan shared by condition tokenization and script parsing ("=" is a
// lexeme here so scripts can use it; conditions reject it).
inline std::vector<Lexeme> scan(const std::string& text) {
    std::vector<Lexeme> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_ident_start = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto is_ident = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < n) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_ident_start(c)) {
            while (i < n && is_ident(text[i])) ++i;
            std::string word = text.substr(start, i - start);
            if (word == "and") out.push_back({LexKind::And, word, 0, CmpOp::Eq, start});
            else if (word == "or") out.push_back({LexKind::Or, word, 0, CmpOp::Eq, start});
            else if (word == "not") out.push_back({LexKind::Not, word, 0, CmpOp::Eq, start});
            else if (word == "True") out.push_back({LexKind::True_, word, 0, CmpOp::Eq, start});
            else if (word == "False") out.push_back({LexKind::False_, word, 0, CmpOp::Eq, start});
            else out.push_back({LexKind::Ident, word, 0, CmpOp::Eq, start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            ++i; // sign or first digit
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < n && text[i] == '.') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw LexError(start, text.substr(start, i - start));
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            if (i < n && (text[i] == 'e' || text[i] == 'E')) {
                ++i;
                if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw LexError(start, text.substr(start, i - start));
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            std::string num = text.substr(start, i - start);
            double value = 0.0;
            auto res = std::from_chars(num.data(), num.data() + num.size(), value);
            if (res.ec != std::errc() || res.ptr != num.data() + num.size())
                throw LexError(start, num);
            out.push_back({LexKind::Number, num, value, CmpOp::Eq, start});
            continue;
        }
        if (c == '"' || c == '\'') {
            char quote = c;
            ++i;
            std::size_t body = i;
            while (i < n && text[i] != quote && text[i] != '\n') ++i;
            if (i >= n || text[i] != quote)
                throw LexError(start, text.substr(start, i - start));
            out.push_back({LexKind::String, text.substr(body, i - body), 0, CmpOp::Eq, start});
            ++i;
            continue;
        }
        switch (c) {
            case '(': out.push_back({LexKind::LParen, "(", 0, CmpOp::Eq, start}); ++i; continue;
            case ')': out.push_back({LexKind::RParen, ")", 0, CmpOp::Eq, start}); ++i; continue;
            case '=':
                if (i + 1 < n && text[i + 1] == '=') {
                    out.push_back({LexKind::Cmp, "==", 0, CmpOp::Eq, start});
                    i += 2;
                } else {
                    out.push_back({LexKind::Assign, "=", 0, CmpOp::Eq, start});
                    ++i;
                }
                continue;
            case '!':
                if (i + 1 < n && text[i + 1] == '=') {
                    out.push_back({LexKind::Cmp, "!=", 0, CmpOp::Ne, start});
                    i += 2;
                    continue;
                }
                throw LexError(start, "!");
            case '>':
                if (i + 1 < n && text[i + 1] == '=') {
                    out.push_back({LexKind::Cmp, ">=", 0, CmpOp::Ge, start});
                    i += 2;
                } else {
                    out.push_back({LexKind::Cmp, ">", 0, CmpOp::Gt, start});
                    ++i;
                }
                continue;
            case '<':
                if (i + 1 < n && text[i + 1] == '=') {
                    out.push_back({LexKind::Cmp, "<=", 0, CmpOp::Le, start});
                    i += 2;
                } else {
                    out.push_back({LexKind::Cmp, "<", 0, CmpOp::Lt, start});
                    ++i;
                }
                continue;
            default:
                throw LexError(start, std::string(1, c));
        }
    }
    out.push_back({LexKind::End, "", 0, CmpOp::Eq, n});
    return out;
}

inline bool is_operand(LexKind k) {
    return k == LexKind::Ident || k == LexKind::Number || k == LexKind::String ||
           k == LexKind::True_ || k == LexKind::False_;
}

inline ExprPtr operand_expr(const Lexeme& lx) {
    switch (lx.kind) {
        case LexKind::Ident: return make_variable(lx.text);
        case LexKind::Number: return make_literal(Value(lx.number));
        case LexKind::String: return make_literal(Value(lx.text));
        case LexKind::True_: return make_literal(Value(true));
        default: return make_literal(Value(false));
    }
}

// Folds a lexeme stream (a slice ending at End or at `stop`) into criterion
// tokens. Comparison operators are consumed here, so predicates come out as
// single tokens.
inline std::vector<CriterionToken> fold_lexemes(const std::vector<Lexeme>& lx,
                                                std::size_t begin = 0) {
    std::vector<CriterionToken> tokens;
    std::size_t i = begin;
    while (lx[i].kind != LexKind::End) {
        const Lexeme& cur = lx[i];
        switch (cur.kind) {
            case LexKind::LParen: tokens.push_back(group_open_token(cur.pos)); ++i; break;
            case LexKind::RParen: tokens.push_back(group_close_token(cur.pos)); ++i; break;
            case LexKind::And: tokens.push_back(connective_token(Connective::And, cur.pos)); ++i; break;
            case LexKind::Or: tokens.push_back(connective_token(Connective::Or, cur.pos)); ++i; break;
            case LexKind::Not: tokens.push_back(connective_token(Connective::Not, cur.pos)); ++i; break;
            case LexKind::Cmp:
            case LexKind::Assign:
                throw LexError(cur.pos, cur.text);
            default: {
                ExprPtr left = operand_expr(cur);
                ++i;
                if (lx[i].kind == LexKind::Cmp) {
                    CmpOp op = lx[i].op;
                    std::size_t op_pos = lx[i].pos;
                    ++i;
                    if (!is_operand(lx[i].kind))
                        throw LexError(lx[i].kind == LexKind::End ? op_pos : lx[i].pos,
                                       lx[i].kind == LexKind::End ? lx[i - 1].text : lx[i].text);
                    ExprPtr right = operand_expr(lx[i]);
                    ++i;
                    tokens.push_back(predicate_token(make_compare(left, op, right), cur.pos));
                } else {
                    tokens.push_back(predicate_token(left, cur.pos));
                }
            }
        }
    }
    return tokens;
}

} // namespace detail

// Tokenizes criterion text into predicates, connectives, and parentheses.
// Numeric literals round-trip exactly through shortest-form printing.
inline std::vector<CriterionToken> tokenize(const std::string& criterion_text) {
    return detail::fold_lexemes(detail::scan(criterion_text));
}

} // namespace bpmnsim
