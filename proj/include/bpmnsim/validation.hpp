#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpmnsim/bpmn/model.hpp"
#include "bpmnsim/expr/entities.hpp"
#include "bpmnsim/schema.hpp"

namespace bpmnsim {

enum class RuleId : std::uint8_t { R1, R2, R3, R4, R5, R6, R7, R8 };

inline const char* rule_name(RuleId r) {
    static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};
    return names[static_cast<int>(r)];
}

constexpr RuleId kAllRules[] = {RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4,
                                RuleId::R5, RuleId::R6, RuleId::R7, RuleId::R8};

// A single rule violation. `data` carries the rule-specific payload repair
// acts on (a case tag, offending flow ids, the unknown variable name).
struct Violation {
    RuleId rule;
    std::string subject; // node or flow id; process id for model-level findings
    std::string detail;
    std::vector<std::string> data;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool passed = true;
};

namespace detail {

// Gateways with two or more outgoing flows are splits; R5/R6 quantify over
// these only.
inline bool is_split_gateway(const ProcessModel& m, const FlowNode& n) {
    return n.kind == NodeKind::ExclusiveGateway && m.outgoing(n.id).size() >= 2;
}

inline std::vector<Violation> check_r1(const ProcessModel& m) {
    std::vector<Violation> out;
    std::vector<const FlowNode*> starts;
    for (const auto& n : m.nodes)
        if (n.kind == NodeKind::StartEvent) starts.push_back(&n);
    if (starts.empty()) {
        out.push_back({RuleId::R1, m.process_id, "model has no start event", {"none"}});
        return out;
    }
    for (std::size_t i = 1; i < starts.size(); ++i)
        out.push_back({RuleId::R1, starts[i]->id, "surplus start event", {"surplus"}});
    for (const auto* s : starts) {
        auto in = m.incoming(s->id);
        if (!in.empty()) {
            Violation v{RuleId::R1, s->id, "start event has incoming flows", {"incoming"}};
            v.data.insert(v.data.end(), in.begin(), in.end());
            out.push_back(std::move(v));
        }
    }
    return out;
}

inline std::vector<Violation> check_r2(const ProcessModel& m) {
    for (const auto& n : m.nodes)
        if (n.kind == NodeKind::EndEvent) return {};
    return {{RuleId::R2, m.process_id, "model has no end event", {}}};
}

inline std::vector<Violation> check_r3(const ProcessModel& m) {
    std::vector<Violation> out;
    for (const auto& n : m.nodes) {
        if (!is_task(n.kind)) continue;
        std::size_t in = m.incoming(n.id).size();
        std::size_t outn = m.outgoing(n.id).size();
        if (in != 1)
            out.push_back({RuleId::R3, n.id,
                           "task has " + std::to_string(in) + " incoming flows",
                           {"incoming"}});
        if (outn != 1)
            out.push_back({RuleId::R3, n.id,
                           "task has " + std::to_string(outn) + " outgoing flows",
                           {"outgoing"}});
    }
    return out;
}

inline std::vector<Violation> check_r4(const ProcessModel& m) {
    std::vector<Violation> out;
    for (const auto& n : m.nodes) {
        if (n.kind != NodeKind::ExclusiveGateway) continue;
        std::size_t in = m.incoming(n.id).size();
        std::size_t outn = m.outgoing(n.id).size();
        bool split = in == 1 && outn >= 2;
        bool merge = in >= 2 && outn == 1;
        if (split || merge) continue;
        if (in >= 2 && outn >= 2)
            out.push_back({RuleId::R4, n.id, "gateway acts as both merge and split", {"mixed"}});
        else if (in == 1 && outn == 1)
            out.push_back({RuleId::R4, n.id, "gateway is a pass-through", {"pass-through"}});
        else
            out.push_back({RuleId::R4, n.id,
                           "gateway has " + std::to_string(in) + " incoming and " +
                               std::to_string(outn) + " outgoing flows",
                           {"disconnected"}});
    }
    return out;
}

inline std::vector<Violation> check_r5(const ProcessModel& m) {
    std::vector<Violation> out;
    for (const auto& n : m.nodes) {
        if (!is_split_gateway(m, n)) continue;
        if (!n.default_flow)
            out.push_back({RuleId::R5, n.id, "split gateway has no default flow", {}});
    }
    return out;
}

inline std::vector<Violation> check_r6(const ProcessModel& m) {
    std::vector<Violation> out;
    // which flows are the non-default outgoing flows of a split gateway
    std::set<std::string> must_carry;
    for (const auto& n : m.nodes) {
        if (!is_split_gateway(m, n)) continue;
        for (const auto& fid : m.outgoing(n.id))
            if (!n.default_flow || *n.default_flow != fid) must_carry.insert(fid);
    }
    for (const auto& f : m.flows) {
        if (f.condition_text) {
            if (!f.condition)
                out.push_back({RuleId::R6, f.id, "condition does not parse", {"unparsable"}});
            else if (!is_entity_encoded(*f.condition_text))
                out.push_back({RuleId::R6, f.id, "condition is not XML entity encoded", {"encoding"}});
        } else if (must_carry.count(f.id)) {
            out.push_back({RuleId::R6, f.id, "non-default gateway flow carries no condition", {"missing"}});
        }
    }
    return out;
}

inline std::vector<Violation> check_r7(const ProcessModel& m) {
    std::vector<Violation> out;
    for (const auto& n : m.nodes) {
        if (n.kind != NodeKind::ExclusiveGateway) continue;
        std::map<std::string, std::vector<std::string>> by_target;
        for (const auto& fid : m.outgoing(n.id)) by_target[m.find_flow(fid)->target].push_back(fid);
        for (const auto& f : m.flows) { // document order over targets
            if (f.source != n.id) continue;
            auto it = by_target.find(f.target);
            if (it == by_target.end() || it->second.size() < 2) continue;
            Violation v{RuleId::R7, n.id,
                        "multiple flows from gateway target '" + f.target + "'",
                        {f.target}};
            // duplicates = second and later flows to this target
            v.data.insert(v.data.end(), it->second.begin() + 1, it->second.end());
            out.push_back(std::move(v));
            by_target.erase(it);
        }
    }
    return out;
}

// Identifiers a condition may legally reference: schema columns plus
// variables some script task assigns (decision outcomes such as
// "eligible"). Reads of script outcomes before assignment surface at run
// time, not here.
inline std::set<std::string> allowed_variables(const ProcessModel& m, const PatientSchema& schema);

inline std::vector<Violation> check_r8(const ProcessModel& m, const PatientSchema& schema) {
    std::vector<Violation> out;
    std::set<std::string> allowed = allowed_variables(m, schema);
    auto check_expr = [&](const ExprPtr& e, const std::string& subject, const char* where) {
        std::set<std::string> reported;
        for_each_variable(e, [&](const Expr& var) {
            if (allowed.count(var.name) || reported.count(var.name)) return;
            reported.insert(var.name);
            out.push_back({RuleId::R8, subject,
                           std::string(where) + " references unknown variable '" + var.name + "'",
                           {var.name}});
        });
    };
    for (const auto& n : m.nodes) {
        if (n.kind != NodeKind::ScriptTask || !n.script || n.script->empty()) continue;
        // statement-by-statement; unparsable scripts are the engine's problem
        std::string text = *n.script;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find_first_of(";\n", pos);
            std::string stmt = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            pos = end == std::string::npos ? text.size() + 1 : end + 1;
            try {
                auto lexemes = detail::scan(stmt);
                if (lexemes.size() < 3 || lexemes[0].kind != LexKind::Ident ||
                    lexemes[1].kind != LexKind::Assign)
                    continue;
                ExprPtr rhs = parse(fold_lexemes(lexemes, 2));
                check_expr(rhs, n.id, "script");
            } catch (const Error&) {
                continue;
            }
        }
    }
    for (const auto& f : m.flows)
        if (f.condition) check_expr(f.condition, f.id, "condition");
    return out;
}

inline std::set<std::string> allowed_variables(const ProcessModel& m, const PatientSchema& schema) {
    std::set<std::string> allowed;
    for (const auto& col : schema.columns) allowed.insert(col.name);
    for (const auto& n : m.nodes) {
        if (n.kind != NodeKind::ScriptTask || !n.script) continue;
        const std::string& text = *n.script;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find_first_of(";\n", pos);
            std::string stmt = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            pos = end == std::string::npos ? text.size() + 1 : end + 1;
            try {
                auto lexemes = detail::scan(stmt);
                if (lexemes.size() >= 2 && lexemes[0].kind == LexKind::Ident &&
                    lexemes[1].kind == LexKind::Assign)
                    allowed.insert(lexemes[0].text);
            } catch (const Error&) {
                continue;
            }
        }
    }
    return allowed;
}

inline void sort_by_document_order(const ProcessModel& m, std::vector<Violation>& vs) {
    std::stable_sort(vs.begin(), vs.end(), [&](const Violation& a, const Violation& b) {
        return m.document_position(a.subject) < m.document_position(b.subject);
    });
}

} // namespace detail

inline std::vector<Violation> check_rule(const ProcessModel& model, const PatientSchema& schema,
                                         RuleId rule) {
    std::vector<Violation> out;
    switch (rule) {
        case RuleId::R1: out = detail::check_r1(model); break;
        case RuleId::R2: out = detail::check_r2(model); break;
        case RuleId::R3: out = detail::check_r3(model); break;
        case RuleId::R4: out = detail::check_r4(model); break;
        case RuleId::R5: out = detail::check_r5(model); break;
        case RuleId::R6: out = detail::check_r6(model); break;
        case RuleId::R7: out = detail::check_r7(model); break;
        case RuleId::R8: out = detail::check_r8(model, schema); break;
    }
    detail::sort_by_document_order(model, out);
    return out;
}

// Checks all eight structural rules and reports every violation, ordered by
// (rule, document order). Problems are violations, never exceptions.
inline ValidationReport validate(const ProcessModel& model, const PatientSchema& schema) {
    ValidationReport report;
    for (RuleId rule : kAllRules) {
        auto vs = check_rule(model, schema, rule);
        report.violations.insert(report.violations.end(), vs.begin(), vs.end());
    }
    report.passed = report.violations.empty();
    return report;
}

inline nlohmann::json violation_to_json(const Violation& v) {
    return {{"rule", rule_name(v.rule)}, {"subject", v.subject}, {"detail", v.detail}, {"data", v.data}};
}

inline nlohmann::json report_to_json(const ValidationReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : report.violations) arr.push_back(violation_to_json(v));
    return {{"passed", report.passed}, {"violations", arr}};
}

} // namespace bpmnsim
