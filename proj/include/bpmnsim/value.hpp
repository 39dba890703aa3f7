#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <variant>

namespace bpmnsim {

enum class ValueKind : std::uint8_t { Boolean, Number, Category };

// A runtime value: boolean, double-precision number (unitless; units live in
// documentation), or a category string such as a urinary-protein grade.
// Number/Category comparisons are type errors, never coercions.
using Value = std::variant<bool, double, std::string>;

inline ValueKind kind_of(const Value& v) {
    switch (v.index()) {
        case 0: return ValueKind::Boolean;
        case 1: return ValueKind::Number;
        default: return ValueKind::Category;
    }
}

inline const char* kind_name(ValueKind k) {
    switch (k) {
        case ValueKind::Boolean: return "boolean";
        case ValueKind::Number: return "number";
        default: return "category";
    }
}

inline const char* kind_name(const Value& v) { return kind_name(kind_of(v)); }

// Shortest round-trip decimal representation, e.g. 6.5 -> "6.5", 126 -> "126".
// Used everywhere a number is printed so canonical strings are stable.
inline std::string number_repr(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return std::string(buf, res.ptr);
}

inline std::string value_repr(const Value& v) {
    switch (kind_of(v)) {
        case ValueKind::Boolean: return std::get<bool>(v) ? "True" : "False";
        case ValueKind::Number: return number_repr(std::get<double>(v));
        default: return "\"" + std::get<std::string>(v) + "\"";
    }
}

} // namespace bpmnsim
