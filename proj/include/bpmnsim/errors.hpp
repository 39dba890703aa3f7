#pragma once

#include <stdexcept>
#include <string>

namespace bpmnsim {

// Root of every error thrown by the library. Subclasses carry the payload
// named in their constructor arguments; what() is always human-readable.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- expression language ----------------------------------------------

class LexError : public Error {
public:
    LexError(std::size_t position, std::string fragment)
        : Error("lex error at position " + std::to_string(position) + ": '" + fragment + "'"),
          position(position), fragment(std::move(fragment)) {}
    std::size_t position;
    std::string fragment;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected)
        : Error("parse error at token " + std::to_string(position) + ": expected " + expected),
          position(position), expected(std::move(expected)) {}
    std::size_t position;
    std::string expected;
};

class MalformedEntity : public Error {
public:
    explicit MalformedEntity(std::string entity)
        : Error("malformed XML entity: '" + entity + "'"), entity(std::move(entity)) {}
    std::string entity;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string name)
        : Error("unbound variable: " + name), name(std::move(name)) {}
    std::string name;
};

class TypeMismatch : public Error {
public:
    TypeMismatch(std::string op, std::string left_kind, std::string right_kind)
        : Error("type mismatch: " + left_kind + " " + op + " " + right_kind),
          op(std::move(op)), left_kind(std::move(left_kind)), right_kind(std::move(right_kind)) {}
    std::string op;
    std::string left_kind;
    std::string right_kind;
};

// ---- BPMN parsing -------------------------------------------------------

class MalformedXml : public Error {
public:
    MalformedXml(std::size_t position, const std::string& detail)
        : Error("malformed XML at offset " + std::to_string(position) + ": " + detail),
          position(position) {}
    std::size_t position;
};

class UnsupportedElement : public Error {
public:
    explicit UnsupportedElement(std::string tag)
        : Error("unsupported BPMN element: <" + tag + ">"), tag(std::move(tag)) {}
    std::string tag;
};

class DuplicateId : public Error {
public:
    explicit DuplicateId(std::string id)
        : Error("duplicate id: " + id), id(std::move(id)) {}
    std::string id;
};

class DanglingFlowEndpoint : public Error {
public:
    explicit DanglingFlowEndpoint(std::string flow_id)
        : Error("sequence flow endpoint does not resolve: " + flow_id), flow_id(std::move(flow_id)) {}
    std::string flow_id;
};

class UnknownNode : public Error {
public:
    explicit UnknownNode(std::string id)
        : Error("unknown node: " + id), id(std::move(id)) {}
    std::string id;
};

// ---- repair / engine ----------------------------------------------------

class IrreparableViolation : public Error {
public:
    explicit IrreparableViolation(const std::string& detail)
        : Error("irreparable violation: " + detail) {}
};

class UnparsableCondition : public Error {
public:
    UnparsableCondition(std::string flow_id, const std::string& detail)
        : Error("unparsable condition on flow " + flow_id + ": " + detail),
          flow_id(std::move(flow_id)) {}
    std::string flow_id;
};

class UnparsableScript : public Error {
public:
    UnparsableScript(std::string task_id, const std::string& detail)
        : Error("unparsable script on task " + task_id + ": " + detail),
          task_id(std::move(task_id)) {}
    std::string task_id;
};

class SchemaMismatch : public Error {
public:
    explicit SchemaMismatch(const std::string& detail)
        : Error("record does not conform to schema: " + detail) {}
};

class NoViableFlow : public Error {
public:
    explicit NoViableFlow(std::string gateway_id)
        : Error("no outgoing flow viable at gateway " + gateway_id),
          gateway_id(std::move(gateway_id)) {}
    std::string gateway_id;
};

class StepLimitExceeded : public Error {
public:
    explicit StepLimitExceeded(std::size_t limit)
        : Error("execution exceeded step limit of " + std::to_string(limit)), limit(limit) {}
    std::size_t limit;
};

class NotExecutable : public Error {
public:
    explicit NotExecutable(std::string node_id)
        : Error("node is not executable: " + node_id), node_id(std::move(node_id)) {}
    std::string node_id;
};

// ---- data / config ------------------------------------------------------

class SpecError : public Error {
public:
    explicit SpecError(const std::string& detail) : Error("invalid cohort spec: " + detail) {}
};

class HeaderMismatch : public Error {
public:
    explicit HeaderMismatch(const std::string& detail) : Error("CSV header mismatch: " + detail) {}
};

class RowError : public Error {
public:
    RowError(std::size_t line, std::string column, const std::string& reason)
        : Error("CSV row error at line " + std::to_string(line) + ", column " + column + ": " + reason),
          line(line), column(std::move(column)) {}
    std::size_t line;
    std::string column;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& detail) : Error("config error: " + detail) {}
};

// ---- analysis -----------------------------------------------------------

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& what_arg) : Error("empty input: " + what_arg) {}
};

class InvalidDistribution : public Error {
public:
    explicit InvalidDistribution(const std::string& detail)
        : Error("invalid distribution: " + detail) {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("decision lists differ in length: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class EmptyMatrix : public Error {
public:
    EmptyMatrix() : Error("confusion matrix is empty") {}
};

// ---- provider -----------------------------------------------------------

class BackendUnavailable : public Error {
public:
    explicit BackendUnavailable(const std::string& detail)
        : Error("backend unavailable: " + detail) {}
};

class MalformedResponse : public Error {
public:
    MalformedResponse(int slot, const std::string& detail)
        : Error("malformed response for slot " + std::to_string(slot) + ": " + detail),
          slot(slot) {}
    int slot;
};

class FixtureMissing : public Error {
public:
    FixtureMissing(int slot, const std::string& detail)
        : Error("fixture missing for slot " + std::to_string(slot) + ": " + detail),
          slot(slot) {}
    int slot;
};

class OracleError : public Error {
public:
    OracleError(int repetition, const std::string& detail)
        : Error("mapping oracle failed at repetition " + std::to_string(repetition) + ": " + detail),
          repetition(repetition) {}
    int repetition;
};

} // namespace bpmnsim
