#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bpmnsim/expr/ast.hpp"
#include "bpmnsim/schema.hpp"

namespace bpmnsim {

namespace detail {

// Lowercases, splits on non-alphanumeric boundaries and camelCase humps,
// and strips simple plural 's'. "Type_2_Diabetes_Prior" and "type 2
// diabetes prior" produce the same token set.
inline std::vector<std::string> name_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto push = [&]() {
        if (cur.empty()) return;
        if (cur.size() > 3 && cur.back() == 's' && cur[cur.size() - 2] != 's')
            cur.pop_back();
        tokens.push_back(cur);
        cur.clear();
    };
    char prev = '\0';
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            bool hump = std::isupper(c) &&
                        (std::islower(static_cast<unsigned char>(prev)) ||
                         std::isdigit(static_cast<unsigned char>(prev)));
            if (hump) push();
            cur += static_cast<char>(std::tolower(c));
        } else {
            push();
        }
        prev = ch;
    }
    push();
    return tokens;
}

inline std::set<std::string> token_set(const std::string& text) {
    auto v = name_tokens(text);
    return {v.begin(), v.end()};
}

inline bool subset(const std::set<std::string>& small, const std::set<std::string>& big) {
    for (const auto& t : small)
        if (!big.count(t)) return false;
    return true;
}

inline bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
    for (const auto& t : a)
        if (b.count(t)) return true;
    return false;
}

} // namespace detail

struct GroundingResult {
    std::vector<std::string> columns; // all columns at the winning tier, schema order
    int tier = 3;                     // 1 = concept + qualifier, 2 = exact concept, 3 = keyword
};

// Deterministic three-tier lexical matcher from a policy concept (plus
// qualifying terms) to schema columns.
//
//   tier 1: column tokens cover the concept tokens and share at least one
//           qualifier token (e.g. Type_2_Diabetes_Prior for "Type 2
//           diabetes" qualified by "prior");
//   tier 2: column tokens equal the concept tokens exactly (Diabetes for
//           "diabetes");
//   tier 3: column shares at least one keyword token with the concept.
//
// All columns at the best tier are returned; callers OR-combine them.
// Absence means the criterion should be omitted, never invented.
inline std::optional<GroundingResult> ground_criterion(const std::string& concept_text,
                                                       const std::vector<std::string>& qualifiers,
                                                       const PatientSchema& schema) {
    std::set<std::string> concept_tokens = detail::token_set(concept_text);
    if (concept_tokens.empty()) return std::nullopt;
    std::set<std::string> qualifier_tokens;
    for (const auto& q : qualifiers)
        for (const auto& t : detail::name_tokens(q)) qualifier_tokens.insert(t);

    GroundingResult best;
    int best_tier = 4;
    for (const auto& col : schema.columns) {
        std::set<std::string> col_tokens = detail::token_set(col.name);
        int tier = 4;
        if (!qualifier_tokens.empty() && detail::subset(concept_tokens, col_tokens) &&
            detail::intersects(qualifier_tokens, col_tokens)) {
            tier = 1;
        } else if (col_tokens == concept_tokens) {
            tier = 2;
        } else if (detail::intersects(concept_tokens, col_tokens)) {
            tier = 3;
        }
        if (tier < best_tier) {
            best_tier = tier;
            best.columns.clear();
        }
        if (tier == best_tier && tier < 4) best.columns.push_back(col.name);
    }
    if (best_tier == 4) return std::nullopt;
    best.tier = best_tier;
    return best;
}

struct PlausibilityWarning {
    std::string column;
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::string message;
};

// Flags comparisons whose numeric literal lies outside the column's declared
// plausible range (e.g. HbA1c >= 65 against a [3, 20] range — a likely
// extraction artifact). Advisory only; the tree is never modified.
inline std::vector<PlausibilityWarning> check_threshold_plausibility(const ExprPtr& ast,
                                                                     const PatientSchema& schema) {
    std::vector<PlausibilityWarning> warnings;
    auto walk = [&](auto&& self, const ExprPtr& e) -> void {
        if (!e) return;
        if (e->kind == ExprKind::Compare) {
            const Expr* var = nullptr;
            const Expr* lit = nullptr;
            if (e->left->kind == ExprKind::Variable && e->right->kind == ExprKind::Literal) {
                var = e->left.get();
                lit = e->right.get();
            } else if (e->right->kind == ExprKind::Variable &&
                       e->left->kind == ExprKind::Literal) {
                var = e->right.get();
                lit = e->left.get();
            }
            if (var && lit && kind_of(lit->literal) == ValueKind::Number) {
                const SchemaColumn* col = schema.find(var->name);
                if (col && col->plausible_range) {
                    double v = std::get<double>(lit->literal);
                    auto [lo, hi] = *col->plausible_range;
                    if (v < lo || v > hi) {
                        warnings.push_back({var->name, v, lo, hi,
                                            var->name + " compared against " + number_repr(v) +
                                            " outside plausible range [" + number_repr(lo) +
                                            ", " + number_repr(hi) + "]"});
                    }
                }
            }
        }
        self(self, e->left);
        self(self, e->right);
    };
    walk(walk, ast);
    return warnings;
}

} // namespace bpmnsim
