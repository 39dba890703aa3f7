#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "bpmnsim/bpmn/model.hpp"
#include "bpmnsim/bpmn/parse.hpp"
#include "bpmnsim/expr/entities.hpp"

namespace bpmnsim {

namespace detail {

// Raw condition bodies are emitted verbatim; only constructs that would
// break XML well-formedness ('<' and a '&' that does not begin an entity
// reference) are escaped.
inline std::string sanitize_raw_content(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (c == '<') {
            out += "&lt;";
        } else if (c == '&') {
            std::size_t semi = raw.find(';', i);
            bool valid = false;
            if (semi != std::string::npos && semi > i + 1) {
                std::string name = raw.substr(i + 1, semi - i - 1);
                valid = name == "amp" || name == "lt" || name == "gt" || name == "quot" ||
                        name == "apos" || name[0] == '#';
            }
            out += valid ? "&" : "&amp;";
        } else {
            out += c;
        }
    }
    return out;
}

inline std::string attr_text(const std::string& value) { return encode_entities(value); }

struct NodeGeometry {
    double x = 0, y = 0, w = 0, h = 0;
    double cx() const { return x + w / 2; }
    double cy() const { return y + h / 2; }
};

inline std::string num(double v) {
    long rounded = static_cast<long>(v);
    return std::to_string(rounded);
}

// Deterministic left-to-right layered layout so serialized files open in
// standard viewers. Layer = longest path from any source node; relaxation is
// capped at the node count so hostile cyclic models still terminate.
inline std::map<std::string, NodeGeometry> layout(const ProcessModel& model) {
    std::map<std::string, int> layer;
    for (const auto& n : model.nodes) layer[n.id] = 0;
    for (std::size_t pass = 0; pass < model.nodes.size(); ++pass) {
        bool changed = false;
        for (const auto& f : model.flows) {
            int want = layer[f.source] + 1;
            if (layer[f.target] < want) {
                layer[f.target] = want;
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::map<int, int> row_in_layer;
    std::map<std::string, NodeGeometry> geo;
    for (const auto& n : model.nodes) {
        int l = layer[n.id];
        int row = row_in_layer[l]++;
        NodeGeometry g;
        switch (n.kind) {
            case NodeKind::StartEvent:
            case NodeKind::EndEvent: g.w = 36; g.h = 36; break;
            case NodeKind::ExclusiveGateway: g.w = 50; g.h = 50; break;
            default: g.w = 100; g.h = 80; break;
        }
        g.x = 60 + l * 180 + (100 - g.w) / 2;
        g.y = 60 + row * 120 + (80 - g.h) / 2;
        geo[n.id] = g;
    }
    return geo;
}

} // namespace detail

// Serializes a model to BPMN 2.0 XML with canonical prefixes and a minimal
// deterministic diagram section. parse_bpmn(serialize_bpmn(m)) == m.
inline std::string serialize_bpmn(const ProcessModel& model) {
    model.check_invariants();
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<bpmn:definitions xmlns:bpmn=\"";
    out += kBpmnModelNs;
    out += "\" xmlns:bpmndi=\"";
    out += kBpmnDiNs;
    out += "\" xmlns:omgdc=\"";
    out += kOmgDcNs;
    out += "\" xmlns:omgdi=\"";
    out += kOmgDiNs;
    out += "\" id=\"defs_" + detail::attr_text(model.process_id) +
           "\" targetNamespace=\"http://bpmn.io/schema/bpmn\">\n";
    out += "  <bpmn:process id=\"" + detail::attr_text(model.process_id) + "\" isExecutable=\"true\">\n";

    for (const auto& n : model.nodes) {
        out += "    <bpmn:";
        out += node_kind_name(n.kind);
        out += " id=\"" + detail::attr_text(n.id) + "\" name=\"" + detail::attr_text(n.name) + "\"";
        if (n.default_flow) out += " default=\"" + detail::attr_text(*n.default_flow) + "\"";
        if (n.kind == NodeKind::ScriptTask) {
            out += ">\n      <bpmn:script>" + encode_entities(n.script ? *n.script : "") +
                   "</bpmn:script>\n    </bpmn:" + std::string(node_kind_name(n.kind)) + ">\n";
        } else {
            out += "/>\n";
        }
    }
    for (const auto& f : model.flows) {
        out += "    <bpmn:sequenceFlow id=\"" + detail::attr_text(f.id) + "\" sourceRef=\"" +
               detail::attr_text(f.source) + "\" targetRef=\"" + detail::attr_text(f.target) + "\"";
        if (f.condition_text) {
            out += ">\n      <bpmn:conditionExpression>" +
                   detail::sanitize_raw_content(*f.condition_text) +
                   "</bpmn:conditionExpression>\n    </bpmn:sequenceFlow>\n";
        } else {
            out += "/>\n";
        }
    }
    out += "  </bpmn:process>\n";

    auto geo = detail::layout(model);
    out += "  <bpmndi:BPMNDiagram id=\"di_" + detail::attr_text(model.process_id) + "\">\n";
    out += "    <bpmndi:BPMNPlane id=\"plane_" + detail::attr_text(model.process_id) +
           "\" bpmnElement=\"" + detail::attr_text(model.process_id) + "\">\n";
    for (const auto& n : model.nodes) {
        const auto& g = geo[n.id];
        out += "      <bpmndi:BPMNShape id=\"shape_" + detail::attr_text(n.id) + "\" bpmnElement=\"" +
               detail::attr_text(n.id) + "\">\n";
        out += "        <omgdc:Bounds x=\"" + detail::num(g.x) + "\" y=\"" + detail::num(g.y) +
               "\" width=\"" + detail::num(g.w) + "\" height=\"" + detail::num(g.h) + "\"/>\n";
        out += "      </bpmndi:BPMNShape>\n";
    }
    for (const auto& f : model.flows) {
        const auto& s = geo[f.source];
        const auto& t = geo[f.target];
        out += "      <bpmndi:BPMNEdge id=\"edge_" + detail::attr_text(f.id) + "\" bpmnElement=\"" +
               detail::attr_text(f.id) + "\">\n";
        out += "        <omgdi:waypoint x=\"" + detail::num(s.cx()) + "\" y=\"" + detail::num(s.cy()) + "\"/>\n";
        out += "        <omgdi:waypoint x=\"" + detail::num(t.cx()) + "\" y=\"" + detail::num(t.cy()) + "\"/>\n";
        out += "      </bpmndi:BPMNEdge>\n";
    }
    out += "    </bpmndi:BPMNPlane>\n";
    out += "  </bpmndi:BPMNDiagram>\n";
    out += "</bpmn:definitions>\n";
    return out;
}

} // namespace bpmnsim
