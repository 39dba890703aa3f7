#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/value.hpp"

namespace bpmnsim {

// One column of the patient database schema. Numeric columns may declare a
// plausible range and the decision thresholds that appear in policy text;
// category columns may declare the grade set and, when grades are ordered
// (e.g. "-" < "±" < "1+" < "2+"), the ordering used by <, <=, >, >=.
struct SchemaColumn {
    std::string name;
    ValueKind kind = ValueKind::Number;
    std::optional<std::pair<double, double>> plausible_range;
    std::vector<double> thresholds;
    std::vector<std::string> grades;
    std::vector<std::string> grade_order; // subset/ordering of grades; empty = unordered

    // Rank of a grade in the declared ordering, or nullopt when unordered
    // or the grade is unknown.
    std::optional<std::size_t> grade_rank(const std::string& grade) const {
        auto it = std::find(grade_order.begin(), grade_order.end(), grade);
        if (it == grade_order.end()) return std::nullopt;
        return static_cast<std::size_t>(it - grade_order.begin());
    }
};

struct PatientSchema {
    std::vector<SchemaColumn> columns;

    const SchemaColumn* find(const std::string& name) const {
        for (const auto& c : columns)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool has(const std::string& name) const { return find(name) != nullptr; }
};

// One row of clinical attributes keyed by column name, plus a stable id.
struct PatientRecord {
    std::string id;
    std::map<std::string, Value> values;

    const Value* find(const std::string& name) const {
        auto it = values.find(name);
        return it == values.end() ? nullptr : &it->second;
    }
};

// Checks that a record carries every schema column with a matching value
// kind and nothing else. Used by the data-context binder and the CSV loader.
inline void check_conformance(const PatientRecord& record, const PatientSchema& schema) {
    std::string missing, extra, mismatched;
    for (const auto& col : schema.columns) {
        const Value* v = record.find(col.name);
        if (!v) {
            missing += missing.empty() ? col.name : ", " + col.name;
        } else if (kind_of(*v) != col.kind) {
            mismatched += (mismatched.empty() ? "" : ", ") + col.name + " (expected " +
                          kind_name(col.kind) + ", got " + kind_name(*v) + ")";
        }
    }
    for (const auto& [name, v] : record.values) {
        (void)v;
        if (!schema.has(name)) extra += extra.empty() ? name : ", " + name;
    }
    if (!missing.empty() || !extra.empty() || !mismatched.empty()) {
        std::string detail;
        if (!missing.empty()) detail += "missing columns: " + missing;
        if (!extra.empty()) detail += (detail.empty() ? "" : "; ") + std::string("extra columns: ") + extra;
        if (!mismatched.empty()) detail += (detail.empty() ? "" : "; ") + std::string("kind mismatch: ") + mismatched;
        throw SchemaMismatch(detail);
    }
}

// ---- JSON (de)serialization ----------------------------------------------
//
// Schema files are a JSON array of column objects:
//   [{"name": "HbA1c", "kind": "number", "range": [3, 20], "thresholds": [6.5]},
//    {"name": "Urinary_Protein", "kind": "category",
//     "grades": ["-", "±", "1+", "2+"], "grade_order": ["-", "±", "1+", "2+"]}]

inline SchemaColumn column_from_json(const nlohmann::json& j) {
    SchemaColumn col;
    if (!j.contains("name") || !j["name"].is_string())
        throw ConfigError("schema column requires a string 'name'");
    col.name = j["name"].get<std::string>();
    std::string kind = j.value("kind", "number");
    if (kind == "number") col.kind = ValueKind::Number;
    else if (kind == "category") col.kind = ValueKind::Category;
    else if (kind == "boolean") col.kind = ValueKind::Boolean;
    else throw ConfigError("schema column '" + col.name + "' has unknown kind '" + kind + "'");
    if (j.contains("range")) {
        auto& r = j["range"];
        if (!r.is_array() || r.size() != 2)
            throw ConfigError("schema column '" + col.name + "': range must be [lo, hi]");
        col.plausible_range = {r[0].get<double>(), r[1].get<double>()};
    }
    if (j.contains("thresholds"))
        for (const auto& t : j["thresholds"]) col.thresholds.push_back(t.get<double>());
    if (j.contains("grades"))
        for (const auto& g : j["grades"]) col.grades.push_back(g.get<std::string>());
    if (j.contains("grade_order"))
        for (const auto& g : j["grade_order"]) col.grade_order.push_back(g.get<std::string>());
    if (col.grades.empty() && !col.grade_order.empty()) col.grades = col.grade_order;
    if (col.plausible_range) {
        for (double t : col.thresholds)
            if (t < col.plausible_range->first || t > col.plausible_range->second)
                throw ConfigError("schema column '" + col.name + "': threshold " +
                                  number_repr(t) + " outside plausible range");
    }
    return col;
}

inline PatientSchema schema_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ConfigError("schema JSON must be an array of columns");
    PatientSchema schema;
    for (const auto& cj : j) {
        SchemaColumn col = column_from_json(cj);
        if (schema.has(col.name)) throw ConfigError("duplicate schema column: " + col.name);
        schema.columns.push_back(std::move(col));
    }
    return schema;
}

inline nlohmann::json schema_to_json(const PatientSchema& schema) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& col : schema.columns) {
        nlohmann::json j;
        j["name"] = col.name;
        j["kind"] = col.kind == ValueKind::Number ? "number"
                  : col.kind == ValueKind::Category ? "category" : "boolean";
        if (col.plausible_range)
            j["range"] = {col.plausible_range->first, col.plausible_range->second};
        if (!col.thresholds.empty()) j["thresholds"] = col.thresholds;
        if (!col.grades.empty()) j["grades"] = col.grades;
        if (!col.grade_order.empty()) j["grade_order"] = col.grade_order;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace bpmnsim
