#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace discordlab {

/// Minimal JSON document builder for machine-readable reports. Keys keep
/// insertion order and every floating-point number is emitted with 17
/// significant digits, so emitted values round-trip losslessly.
class JsonValue {
public:
    JsonValue() : kind_(Kind::Null) {}
    JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
    JsonValue(int v) : kind_(Kind::Int), int_(v) {}
    JsonValue(long v) : kind_(Kind::Int), int_(v) {}
    JsonValue(long long v) : kind_(Kind::Int), int_(v) {}
    JsonValue(unsigned v) : kind_(Kind::Int), int_(v) {}
    JsonValue(unsigned long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    JsonValue(unsigned long long v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
    JsonValue(double v) : kind_(Kind::Double), double_(v) {}
    JsonValue(const char* s) : kind_(Kind::String), string_(s) {}
    JsonValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

    static JsonValue object();
    static JsonValue array();

    JsonValue& set(const std::string& key, JsonValue v); // object insert
    JsonValue& push(JsonValue v);                        // array append

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    void write(std::string& out, int indent, int depth) const;

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<JsonValue> items_;
    std::vector<std::pair<std::string, JsonValue>> fields_;
};

JsonValue json_vector(const std::vector<double>& v);

} // namespace discordlab
