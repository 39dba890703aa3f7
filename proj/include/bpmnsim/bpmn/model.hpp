#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/ast.hpp"

namespace bpmnsim {

// The construct palette. Parsers reject anything else; UserTask survives
// parsing (it appears pre-augmentation) but the engine refuses to run it.
enum class NodeKind : std::uint8_t {
    StartEvent, EndEvent, ExclusiveGateway, ScriptTask, ServiceTask, UserTask
};

inline const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::StartEvent: return "startEvent";
        case NodeKind::EndEvent: return "endEvent";
        case NodeKind::ExclusiveGateway: return "exclusiveGateway";
        case NodeKind::ScriptTask: return "scriptTask";
        case NodeKind::ServiceTask: return "serviceTask";
        default: return "userTask";
    }
}

inline bool is_task(NodeKind k) {
    return k == NodeKind::ScriptTask || k == NodeKind::ServiceTask || k == NodeKind::UserTask;
}

struct FlowNode {
    std::string id;
    NodeKind kind = NodeKind::ScriptTask;
    std::string name;
    std::optional<std::string> script;       // present iff kind == ScriptTask
    std::optional<std::string> default_flow; // ExclusiveGateway only

    friend bool operator==(const FlowNode& a, const FlowNode& b) {
        return a.id == b.id && a.kind == b.kind && a.name == b.name &&
               a.script == b.script && a.default_flow == b.default_flow;
    }
};

struct SequenceFlow {
    std::string id;
    std::string source;
    std::string target;
    std::optional<std::string> condition_text; // raw, as serialized (entities intact)
    ExprPtr condition;                         // parsed from the decoded text when well-formed

    friend bool operator==(const SequenceFlow& a, const SequenceFlow& b) {
        return a.id == b.id && a.source == b.source && a.target == b.target &&
               a.condition_text == b.condition_text;
    }
};

// A parsed process: flow nodes and sequence flows in document order.
// Immutable by convention after construction — repair and augmentation
// produce new models.
struct ProcessModel {
    std::string process_id;
    std::vector<FlowNode> nodes;
    std::vector<SequenceFlow> flows;

    const FlowNode* find_node(const std::string& id) const {
        for (const auto& n : nodes)
            if (n.id == id) return &n;
        return nullptr;
    }
    FlowNode* find_node(const std::string& id) {
        for (auto& n : nodes)
            if (n.id == id) return &n;
        return nullptr;
    }
    const SequenceFlow* find_flow(const std::string& id) const {
        for (const auto& f : flows)
            if (f.id == id) return &f;
        return nullptr;
    }
    SequenceFlow* find_flow(const std::string& id) {
        for (auto& f : flows)
            if (f.id == id) return &f;
        return nullptr;
    }

    std::vector<std::string> incoming(const std::string& node_id) const {
        std::vector<std::string> ids;
        for (const auto& f : flows)
            if (f.target == node_id) ids.push_back(f.id);
        return ids;
    }
    std::vector<std::string> outgoing(const std::string& node_id) const {
        std::vector<std::string> ids;
        for (const auto& f : flows)
            if (f.source == node_id) ids.push_back(f.id);
        return ids;
    }

    // Document position: nodes precede flows, each in parse order. Used to
    // order violations and break ties deterministically.
    std::size_t document_position(const std::string& id) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id == id) return i;
        for (std::size_t i = 0; i < flows.size(); ++i)
            if (flows[i].id == id) return nodes.size() + i;
        return nodes.size() + flows.size();
    }

    bool has_id(const std::string& id) const {
        return find_node(id) != nullptr || find_flow(id) != nullptr;
    }

    // Structural well-formedness (type invariants). Rule checking is the
    // validation module's job; this guards what no model instance may ever
    // violate.
    void check_invariants() const {
        std::map<std::string, int> seen;
        for (const auto& n : nodes) {
            if (n.id.empty()) throw Error("node with empty id");
            if (++seen[n.id] > 1) throw DuplicateId(n.id);
            if (n.kind == NodeKind::ScriptTask && !n.script)
                throw Error("script task without script text: " + n.id);
            if (n.kind != NodeKind::ScriptTask && n.script)
                throw Error("script text on non-script task: " + n.id);
        }
        for (const auto& f : flows) {
            if (f.id.empty()) throw Error("flow with empty id");
            if (++seen[f.id] > 1) throw DuplicateId(f.id);
            if (!find_node(f.source) || !find_node(f.target)) throw DanglingFlowEndpoint(f.id);
        }
        for (const auto& n : nodes) {
            if (!n.default_flow) continue;
            if (n.kind != NodeKind::ExclusiveGateway)
                throw Error("default flow on non-gateway: " + n.id);
            const SequenceFlow* f = find_flow(*n.default_flow);
            if (!f || f->source != n.id) throw DanglingFlowEndpoint(*n.default_flow);
        }
    }

    friend bool operator==(const ProcessModel& a, const ProcessModel& b) {
        return a.process_id == b.process_id && a.nodes == b.nodes && a.flows == b.flows;
    }
};

// (incoming, outgoing) flow ids of a node, both in document order.
inline std::pair<std::vector<std::string>, std::vector<std::string>>
topology(const ProcessModel& model, const std::string& node_id) {
    if (!model.find_node(node_id)) throw UnknownNode(node_id);
    return {model.incoming(node_id), model.outgoing(node_id)};
}

} // namespace bpmnsim
