#pragma once

#include <string>
#include <vector>

#include "bpmnsim/bpmn/model.hpp"
#include "bpmnsim/bpmn/xml_reader.hpp"
#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/entities.hpp"
#include "bpmnsim/expr/parser.hpp"

namespace bpmnsim {

inline constexpr const char* kBpmnModelNs = "http://www.omg.org/spec/BPMN/20100524/MODEL";
inline constexpr const char* kBpmnDiNs = "http://www.omg.org/spec/BPMN/20100524/DI";
inline constexpr const char* kOmgDcNs = "http://www.omg.org/spec/DD/20100524/DC";
inline constexpr const char* kOmgDiNs = "http://www.omg.org/spec/DD/20100524/DI";

namespace detail {

inline bool is_di_ns(const std::string& ns) {
    return ns == kBpmnDiNs || ns == kOmgDcNs || ns == kOmgDiNs;
}

inline std::string require_id(const xml::Element& el) {
    const std::string* id = el.attr("id");
    if (!id || id->empty()) throw MalformedXml(el.pos, "<" + el.qname + "> missing id");
    return *id;
}

// Attempts to parse a raw condition body into an AST; ill-formed text leaves
// the AST empty for rule R6 to flag.
inline ExprPtr try_parse_condition(const std::string& raw) {
    try {
        return parse_expression(decode_entities(raw));
    } catch (const Error&) {
        return nullptr;
    }
}

inline FlowNode parse_flow_node(const xml::Element& el, NodeKind kind) {
    FlowNode node;
    node.id = require_id(el);
    node.kind = kind;
    if (const std::string* name = el.attr("name")) node.name = *name;
    if (kind == NodeKind::ScriptTask) {
        node.script = std::string();
        for (const auto& child : el.children) {
            if (child.ns_uri == kBpmnModelNs && child.local == "script")
                node.script = child.text;
            else
                throw UnsupportedElement(child.qname);
        }
    } else if (!el.children.empty()) {
        throw UnsupportedElement(el.children.front().qname);
    }
    if (kind == NodeKind::ExclusiveGateway) {
        if (const std::string* def = el.attr("default"); def && !def->empty())
            node.default_flow = *def;
    }
    return node;
}

inline SequenceFlow parse_sequence_flow(const xml::Element& el) {
    SequenceFlow flow;
    flow.id = require_id(el);
    const std::string* source = el.attr("sourceRef");
    const std::string* target = el.attr("targetRef");
    if (!source || !target)
        throw MalformedXml(el.pos, "<" + el.qname + "> missing sourceRef/targetRef");
    flow.source = *source;
    flow.target = *target;
    if (flow.source.empty() || flow.target.empty()) throw DanglingFlowEndpoint(flow.id);
    for (const auto& child : el.children) {
        if (child.ns_uri == kBpmnModelNs && child.local == "conditionExpression") {
            flow.condition_text = child.raw_text; // verbatim, entities intact
            flow.condition = try_parse_condition(child.raw_text);
        } else {
            throw UnsupportedElement(child.qname);
        }
    }
    return flow;
}

} // namespace detail

// Parses BPMN 2.0 XML restricted to the construct palette. Any prefix bound
// to the BPMN model namespace is accepted; diagram-interchange elements are
// ignored; everything else outside the palette is rejected, never dropped.
// Only the first process of a definitions file is read (a warning records
// any others).
inline ProcessModel parse_bpmn(const std::string& xml_text, std::vector<std::string>* warnings = nullptr) {
    xml::Element root = xml::parse(xml_text);
    if (root.ns_uri != kBpmnModelNs || root.local != "definitions")
        throw UnsupportedElement(root.qname);

    const xml::Element* process = nullptr;
    for (const auto& child : root.children) {
        if (detail::is_di_ns(child.ns_uri)) continue; // diagram data carries no semantics here
        if (child.ns_uri == kBpmnModelNs && child.local == "process") {
            if (!process) {
                process = &child;
            } else if (warnings) {
                const std::string* id = child.attr("id");
                warnings->push_back("ignoring additional process '" + (id ? *id : "?") +
                                    "': only the first process is read");
            }
            continue;
        }
        throw UnsupportedElement(child.qname);
    }
    if (!process) throw MalformedXml(root.pos, "definitions contains no process");

    ProcessModel model;
    model.process_id = detail::require_id(*process);

    for (const auto& el : process->children) {
        if (el.ns_uri != kBpmnModelNs) throw UnsupportedElement(el.qname);
        if (el.local == "startEvent")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::StartEvent));
        else if (el.local == "endEvent")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::EndEvent));
        else if (el.local == "exclusiveGateway")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::ExclusiveGateway));
        else if (el.local == "scriptTask")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::ScriptTask));
        else if (el.local == "serviceTask")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::ServiceTask));
        else if (el.local == "userTask")
            model.nodes.push_back(detail::parse_flow_node(el, NodeKind::UserTask));
        else if (el.local == "sequenceFlow")
            model.flows.push_back(detail::parse_sequence_flow(el));
        else
            throw UnsupportedElement(el.qname);
    }

    model.check_invariants();
    return model;
}

} // namespace bpmnsim
