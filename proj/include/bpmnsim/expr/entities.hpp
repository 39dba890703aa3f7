#pragma once

#include <cstddef>
#include <string>

#include "bpmnsim/errors.hpp"

namespace bpmnsim {

// Encodes the five XML special characters as named entities.
inline std::string encode_entities(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

// Inverts encode_entities. Also accepts decimal/hex character references
// for the ASCII range, as produced by some XML writers. Unknown or
// unterminated entities raise MalformedEntity.
inline std::string decode_entities(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '&') {
            out += c;
            ++i;
            continue;
        }
        std::size_t semi = text.find(';', i);
        if (semi == std::string::npos) throw MalformedEntity(text.substr(i));
        std::string name = text.substr(i + 1, semi - i - 1);
        if (name == "amp") out += '&';
        else if (name == "lt") out += '<';
        else if (name == "gt") out += '>';
        else if (name == "quot") out += '"';
        else if (name == "apos") out += '\'';
        else if (!name.empty() && name[0] == '#') {
            int base = 10;
            std::size_t digits = 1;
            if (name.size() > 1 && (name[1] == 'x' || name[1] == 'X')) {
                base = 16;
                digits = 2;
            }
            if (digits >= name.size()) throw MalformedEntity("&" + name + ";");
            long code = 0;
            for (std::size_t k = digits; k < name.size(); ++k) {
                char d = name[k];
                int v;
                if (d >= '0' && d <= '9') v = d - '0';
                else if (base == 16 && d >= 'a' && d <= 'f') v = d - 'a' + 10;
                else if (base == 16 && d >= 'A' && d <= 'F') v = d - 'A' + 10;
                else throw MalformedEntity("&" + name + ";");
                code = code * base + v;
                if (code > 0x10FFFF) throw MalformedEntity("&" + name + ";");
            }
            if (code <= 0x7F) {
                out += static_cast<char>(code);
            } else if (code <= 0x7FF) {
                out += static_cast<char>(0xC0 | (code >> 6));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code <= 0xFFFF) {
                out += static_cast<char>(0xE0 | (code >> 12));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else {
                out += static_cast<char>(0xF0 | (code >> 18));
                out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            }
        } else {
            throw MalformedEntity("&" + name + ";");
        }
        i = semi + 1;
    }
    return out;
}

// True when the text is already canonically encoded, i.e. re-encoding its
// decoded form reproduces it byte for byte. Rule R6's encoding check.
inline bool is_entity_encoded(const std::string& text) {
    try {
        return encode_entities(decode_entities(text)) == text;
    } catch (const MalformedEntity&) {
        return false;
    }
}

} // namespace bpmnsim
