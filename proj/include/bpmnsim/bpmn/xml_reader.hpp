#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bpmnsim/errors.hpp"
#include "bpmnsim/expr/entities.hpp"

// Minimal namespace-aware XML reader for the BPMN subset. It keeps the raw
// (entity-encoded) character data of every element alongside the decoded
// text, which the model parser needs to capture condition expressions
// verbatim as serialized.

namespace bpmnsim::xml {

struct Attribute {
    std::string qname;
    std::string local;
    std::string value; // entity-decoded
};

struct Element {
    std::string qname;      // as written, e.g. "bpmn:sequenceFlow"
    std::string prefix;     // "" when unprefixed
    std::string local;      // "sequenceFlow"
    std::string ns_uri;     // resolved namespace URI, "" when unbound
    std::vector<Attribute> attributes;
    std::vector<Element> children;
    std::string text;       // decoded character data, concatenated
    std::string raw_text;   // verbatim character data, entities intact
    std::size_t pos = 0;    // byte offset of '<' for diagnostics

    const std::string* attr(const std::string& local_name) const {
        for (const auto& a : attributes)
            if (a.local == local_name) return &a.value;
        return nullptr;
    }
};

namespace detail {

class Reader {
public:
    explicit Reader(const std::string& text) : s_(text) {}

    Element parse_document() {
        skip_misc();
        if (eof()) throw MalformedXml(i_, "no root element");
        Element root = parse_element();
        skip_misc();
        if (!eof()) throw MalformedXml(i_, "content after root element");
        resolve_namespaces(root, {});
        return root;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    bool eof() const { return i_ >= s_.size(); }
    char cur() const { return s_[i_]; }
    bool starts_with(const char* lit) const { return s_.compare(i_, std::char_traits<char>::length(lit), lit) == 0; }

    void skip_ws() {
        while (!eof() && (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n')) ++i_;
    }

    // Prolog, comments, processing instructions, and a DOCTYPE without an
    // internal subset.
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<?")) {
                std::size_t end = s_.find("?>", i_);
                if (end == std::string::npos) throw MalformedXml(i_, "unterminated processing instruction");
                i_ = end + 2;
            } else if (starts_with("<!--")) {
                std::size_t end = s_.find("-->", i_);
                if (end == std::string::npos) throw MalformedXml(i_, "unterminated comment");
                i_ = end + 3;
            } else if (starts_with("<!DOCTYPE")) {
                std::size_t end = s_.find('>', i_);
                std::size_t bracket = s_.find('[', i_);
                if (end == std::string::npos) throw MalformedXml(i_, "unterminated DOCTYPE");
                if (bracket != std::string::npos && bracket < end)
                    throw MalformedXml(i_, "DOCTYPE internal subsets are not supported");
                i_ = end + 1;
            } else {
                return;
            }
        }
    }

    static bool is_name_char(char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' || u >= 0x80;
    }

    std::string read_name() {
        std::size_t start = i_;
        while (!eof() && is_name_char(cur())) ++i_;
        if (i_ == start) throw MalformedXml(start, "expected a name");
        return s_.substr(start, i_ - start);
    }

    std::string decode(std::size_t pos, const std::string& raw) {
        try {
            return decode_entities(raw);
        } catch (const MalformedEntity& e) {
            throw MalformedXml(pos, e.what());
        }
    }

    Element parse_element() {
        std::size_t elem_pos = i_;
        if (cur() != '<') throw MalformedXml(i_, "expected '<'");
        ++i_;
        Element el;
        el.pos = elem_pos;
        el.qname = read_name();
        std::size_t colon = el.qname.find(':');
        if (colon == std::string::npos) {
            el.local = el.qname;
        } else {
            el.prefix = el.qname.substr(0, colon);
            el.local = el.qname.substr(colon + 1);
        }
        for (;;) {
            skip_ws();
            if (eof()) throw MalformedXml(elem_pos, "unterminated start tag");
            if (cur() == '/') {
                ++i_;
                if (eof() || cur() != '>') throw MalformedXml(i_, "expected '>'");
                ++i_;
                return el; // self-closing
            }
            if (cur() == '>') {
                ++i_;
                break;
            }
            Attribute attr;
            std::size_t attr_pos = i_;
            attr.qname = read_name();
            std::size_t c = attr.qname.find(':');
            attr.local = c == std::string::npos ? attr.qname : attr.qname.substr(c + 1);
            skip_ws();
            if (eof() || cur() != '=') throw MalformedXml(attr_pos, "expected '=' in attribute");
            ++i_;
            skip_ws();
            if (eof() || (cur() != '"' && cur() != '\'')) throw MalformedXml(i_, "expected quoted attribute value");
            char quote = cur();
            ++i_;
            std::size_t vstart = i_;
            while (!eof() && cur() != quote) {
                if (cur() == '<') throw MalformedXml(i_, "'<' in attribute value");
                ++i_;
            }
            if (eof()) throw MalformedXml(vstart, "unterminated attribute value");
            attr.value = decode(vstart, s_.substr(vstart, i_ - vstart));
            ++i_;
            el.attributes.push_back(std::move(attr));
        }
        // content
        for (;;) {
            if (eof()) throw MalformedXml(elem_pos, "unterminated element <" + el.qname + ">");
            if (cur() == '<') {
                if (starts_with("</")) {
                    i_ += 2;
                    std::string close = read_name();
                    if (close != el.qname)
                        throw MalformedXml(i_, "mismatched close tag </" + close + "> for <" + el.qname + ">");
                    skip_ws();
                    if (eof() || cur() != '>') throw MalformedXml(i_, "expected '>'");
                    ++i_;
                    return el;
                }
                if (starts_with("<!--")) {
                    std::size_t end = s_.find("-->", i_);
                    if (end == std::string::npos) throw MalformedXml(i_, "unterminated comment");
                    i_ = end + 3;
                    continue;
                }
                if (starts_with("<![CDATA[")) {
                    std::size_t body = i_ + 9;
                    std::size_t end = s_.find("]]>", body);
                    if (end == std::string::npos) throw MalformedXml(i_, "unterminated CDATA section");
                    // CDATA content is unencoded by definition; it joins both
                    // views as-is.
                    el.raw_text += s_.substr(body, end - body);
                    el.text += s_.substr(body, end - body);
                    i_ = end + 3;
                    continue;
                }
                if (starts_with("<?")) {
                    std::size_t end = s_.find("?>", i_);
                    if (end == std::string::npos) throw MalformedXml(i_, "unterminated processing instruction");
                    i_ = end + 2;
                    continue;
                }
                el.children.push_back(parse_element());
                continue;
            }
            std::size_t start = i_;
            while (!eof() && cur() != '<') ++i_;
            std::string raw = s_.substr(start, i_ - start);
            el.raw_text += raw;
            el.text += decode(start, raw);
        }
    }

    void resolve_namespaces(Element& el, std::map<std::string, std::string> scope) {
        for (const auto& a : el.attributes) {
            if (a.qname == "xmlns") scope[""] = a.value;
            else if (a.qname.rfind("xmlns:", 0) == 0) scope[a.qname.substr(6)] = a.value;
        }
        auto it = scope.find(el.prefix);
        if (it != scope.end()) el.ns_uri = it->second;
        else if (!el.prefix.empty())
            throw MalformedXml(el.pos, "undeclared namespace prefix '" + el.prefix + "'");
        for (auto& child : el.children) resolve_namespaces(child, scope);
    }
};

} // namespace detail

inline Element parse(const std::string& text) {
    return detail::Reader(text).parse_document();
}

} // namespace bpmnsim::xml
