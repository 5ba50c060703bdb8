#pragma once

#include "qrs/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qrs {

// Cell value of a report row. monostate renders as an absent value
// (empty CSV field, JSON null). Rationals serialize as "p/q" strings so no
// exactness is lost on the wire; doubles render with 12 significant digits.
using Value = std::variant<std::monostate, bool, long long, std::uint64_t,
                           double, Rational, std::string>;

struct Row {
    std::vector<std::pair<std::string, Value>> fields;

    Row& add(std::string name, Value value) {
        fields.emplace_back(std::move(name), std::move(value));
        return *this;
    }
};

/// One command's machine-readable result. columns pins the schema so an
/// empty result still emits a CSV header; rows must match it.
struct OutputEnvelope {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    int format_version = 1;
};

enum class Format { table, json, csv };

/// Render a double with 12 significant digits (the documented wire precision).
std::string format_double(double value);

/// Scalar rendering shared by all emitters; strings pass through unquoted.
std::string render_value(const Value& value);

/// Serialize the envelope. CSV: header row plus one line per row, comma
/// separated, numerics unquoted. JSON: field names mirrored, rationals as
/// "p/q" strings, byte-stable for identical envelopes. Table: human-oriented.
std::string emit(const OutputEnvelope& envelope, Format format);

} // namespace qrs
