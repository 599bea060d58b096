#include "discordlab/report.hpp"

#include <cmath>
#include <cstdio>

namespace discordlab {
namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void append_double(std::string& out, double v) {
    if (std::isnan(v)) {
        out += "\"nan\"";
        return;
    }
    if (std::isinf(v)) {
        out += v > 0 ? "\"inf\"" : "\"-inf\"";
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string text(buf);
    // keep a numeric type marker so parsing yields a double again
    if (text.find_first_of(".eE") == std::string::npos) text += ".0";
    out += text;
}

void append_newline(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

} // namespace

JsonValue JsonValue::object() {
    JsonValue v;
    v.kind_ = Kind::Object;
    return v;
}

JsonValue JsonValue::array() {
    JsonValue v;
    v.kind_ = Kind::Array;
    return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    kind_ = Kind::Object;
    fields_.emplace_back(key, std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    kind_ = Kind::Array;
    items_.push_back(std::move(v));
    return *this;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
    switch (kind_) {
        case Kind::Null: out += "null"; break;
        case Kind::Bool: out += bool_ ? "true" : "false"; break;
        case Kind::Int: out += std::to_string(int_); break;
        case Kind::Double: append_double(out, double_); break;
        case Kind::String: append_escaped(out, string_); break;
        case Kind::Array: {
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += '[';
            for (std::size_t i = 0; i < items_.size(); ++i) {
                if (i > 0) out += ',';
                append_newline(out, indent, depth + 1);
                items_[i].write(out, indent, depth + 1);
            }
            append_newline(out, indent, depth);
            out += ']';
            break;
        }
        case Kind::Object: {
            if (fields_.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                if (i > 0) out += ',';
                append_newline(out, indent, depth + 1);
                append_escaped(out, fields_[i].first);
                out += indent > 0 ? ": " : ":";
                fields_[i].second.write(out, indent, depth + 1);
            }
            append_newline(out, indent, depth);
            out += '}';
            break;
        }
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

JsonValue json_vector(const std::vector<double>& v) {
    JsonValue arr = JsonValue::array();
    for (double x : v) arr.push(x);
    return arr;
}

} // namespace discordlab
