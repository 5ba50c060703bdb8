#include "qrs/report.hpp"

#include "qrs/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qrs {

namespace {

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// JSON value: exact kinds keep their native representation, rationals become
// strings so nothing is rounded, absent values become null.
std::string json_value(const Value& value) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const Rational& v) const {
            return '"' + to_string(v) + '"';
        }
        std::string operator()(const std::string& v) const {
            return '"' + json_escape(v) + '"';
        }
    };
    return std::visit(Visitor{}, value);
}

void check_schema(const OutputEnvelope& envelope) {
    for (const Row& row : envelope.rows) {
        if (row.fields.size() != envelope.columns.size()) {
            throw RangeError("row does not match the declared columns");
        }
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            if (row.fields[i].first != envelope.columns[i]) {
                throw RangeError("row field order does not match the columns");
            }
        }
    }
}

std::string emit_csv(const OutputEnvelope& envelope) {
    std::ostringstream out;
    for (std::size_t i = 0; i < envelope.columns.size(); ++i) {
        if (i) out << ',';
        out << envelope.columns[i];
    }
    out << '\n';
    for (const Row& row : envelope.rows) {
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            if (i) out << ',';
            out << render_value(row.fields[i].second);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_json(const OutputEnvelope& envelope) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"command\": \"" << json_escape(envelope.command) << "\",\n";
    out << "  \"format_version\": " << envelope.format_version << ",\n";
    out << "  \"parameters\": {";
    for (std::size_t i = 0; i < envelope.parameters.size(); ++i) {
        if (i) out << ", ";
        out << '"' << json_escape(envelope.parameters[i].first) << "\": \""
            << json_escape(envelope.parameters[i].second) << '"';
    }
    out << "},\n";
    out << "  \"rows\": [";
    for (std::size_t r = 0; r < envelope.rows.size(); ++r) {
        out << (r ? ",\n    " : "\n    ") << '{';
        const Row& row = envelope.rows[r];
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            if (i) out << ", ";
            out << '"' << json_escape(row.fields[i].first)
                << "\": " << json_value(row.fields[i].second);
        }
        out << '}';
    }
    out << (envelope.rows.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

std::string emit_table(const OutputEnvelope& envelope) {
    std::ostringstream out;
    out << "# " << envelope.command;
    for (const auto& [key, value] : envelope.parameters) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';

    std::vector<std::size_t> widths(envelope.columns.size());
    std::vector<std::vector<std::string>> cells;
    cells.reserve(envelope.rows.size());
    for (std::size_t i = 0; i < envelope.columns.size(); ++i) {
        widths[i] = envelope.columns[i].size();
    }
    for (const Row& row : envelope.rows) {
        std::vector<std::string> line;
        line.reserve(row.fields.size());
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            line.push_back(render_value(row.fields[i].second));
            widths[i] = std::max(widths[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto pad = [&out, &widths](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << line[i];
            for (std::size_t s = line[i].size(); s < widths[i]; ++s) out << ' ';
        }
        out << '\n';
    };
    pad(envelope.columns);
    for (const auto& line : cells) pad(line);
    return out.str();
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string render_value(const Value& value) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const Rational& v) const { return to_string(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, value);
}

std::string emit(const OutputEnvelope& envelope, Format format) {
    check_schema(envelope);
    switch (format) {
        case Format::csv: return emit_csv(envelope);
        case Format::json: return emit_json(envelope);
        case Format::table: return emit_table(envelope);
    }
    throw RangeError("unknown output format");
}

} // namespace qrs
