#ifndef QUADZEROS_CLI_TABLE_HPP
#define QUADZEROS_CLI_TABLE_HPP

// Typed result tables and their CSV / JSON encodings.
//
// CSV layout:
//   # quadzeros-v1 <command>
//   # config <compact json>
//   # summary <key>=<value>        (zero or more)
//   <header row>
//   <data rows>
// A RationalList column must be last; it spreads over the remaining fields.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quadzeros/rational.hpp"

namespace quadzeros::cli {

using Json = nlohmann::ordered_json;

enum class CellType { Bool, Int, Real, Text, Rat, RatList };

using RationalList = std::vector<Rational>;
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string, Rational, RationalList>;

struct Column {
    std::string name;
    CellType type;
};

struct Table {
    std::string command;
    Json config = Json::object();
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
    std::vector<CellType> summary_types;

    void add_summary(std::string key, Cell value, CellType type) {
        summary.emplace_back(std::move(key), std::move(value));
        summary_types.push_back(type);
    }
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw FormatError("cannot format real");
    return std::string(buf, end);
}

inline double parse_real(std::string_view s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) throw FormatError("bad real: " + std::string(s));
    return v;
}

inline std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) throw FormatError("bad integer: " + std::string(s));
    return v;
}

inline Rational parse_rat(std::string_view s) {
    Rational q;
    if (q.set_str(std::string(s), 10) != 0) throw FormatError("bad rational: " + std::string(s));
    q.canonicalize();
    return q;
}

inline std::string csv_cell(const Cell& c) {
    struct V {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_real(d); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") != std::string::npos) throw FormatError("text cell needs quoting: " + s);
            return s;
        }
        std::string operator()(const Rational& q) const { return q.get_str(); }
        std::string operator()(const RationalList& l) const {
            std::string out;
            for (std::size_t i = 0; i < l.size(); ++i) out += (i ? "," : "") + l[i].get_str();
            return out;
        }
    };
    return std::visit(V{}, c);
}

inline Cell parse_csv_cell(std::string_view s, CellType t) {
    if (s.empty() && t != CellType::Text) return std::monostate{};
    switch (t) {
        case CellType::Bool:
            if (s == "true") return true;
            if (s == "false") return false;
            throw FormatError("bad bool: " + std::string(s));
        case CellType::Int: return parse_int(s);
        case CellType::Real: return parse_real(s);
        case CellType::Text: return std::string(s);
        case CellType::Rat: return parse_rat(s);
        case CellType::RatList: break;
    }
    throw FormatError("list cell outside trailing position");
}

inline Json json_cell(const Cell& c) {
    struct V {
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(bool b) const { return b; }
        Json operator()(std::int64_t i) const { return i; }
        Json operator()(double d) const {
            if (!std::isfinite(d)) return format_real(d);
            return d;
        }
        Json operator()(const std::string& s) const { return s; }
        Json operator()(const Rational& q) const { return q.get_str(); }
        Json operator()(const RationalList& l) const {
            Json arr = Json::array();
            for (const auto& q : l) arr.push_back(q.get_str());
            return arr;
        }
    };
    return std::visit(V{}, c);
}

inline Cell parse_json_cell(const Json& j, CellType t) {
    if (j.is_null()) return std::monostate{};
    switch (t) {
        case CellType::Bool: return j.get<bool>();
        case CellType::Int: return j.get<std::int64_t>();
        case CellType::Real:
            if (j.is_string()) return parse_real(j.get<std::string>());
            return j.get<double>();
        case CellType::Text: return j.get<std::string>();
        case CellType::Rat: return parse_rat(j.get<std::string>());
        case CellType::RatList: {
            RationalList l;
            for (const auto& e : j) l.push_back(parse_rat(e.get<std::string>()));
            return l;
        }
    }
    throw FormatError("unknown cell type");
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace detail

inline void write_csv(std::ostream& os, const Table& t) {
    os << "# quadzeros-v1 " << t.command << '\n';
    os << "# config " << t.config.dump() << '\n';
    for (const auto& [key, value] : t.summary) os << "# summary " << key << '=' << detail::csv_cell(value) << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i].name;
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_cell(row[i]);
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const Table& t) {
    Json doc = Json::object();
    doc["command"] = t.command;
    doc["config"] = t.config;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i].name] = detail::json_cell(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    if (!t.summary.empty()) {
        Json s = Json::object();
        for (const auto& [key, value] : t.summary) s[key] = detail::json_cell(value);
        doc["summary"] = std::move(s);
    }
    os << doc.dump(2) << '\n';
}

/// Reads a CSV table. The column and summary schema come from `schema`
/// (normally an empty table produced by the same command); the header
/// row must match it.
inline Table read_csv(std::istream& is, const Table& schema) {
    Table t;
    t.columns = schema.columns;
    std::map<std::string, CellType> summary_types;
    for (std::size_t i = 0; i < schema.summary.size(); ++i) summary_types[schema.summary[i].first] = schema.summary_types[i];

    std::string line;
    if (!std::getline(is, line) || line.rfind("# quadzeros-v1 ", 0) != 0) throw FormatError("missing version line");
    t.command = line.substr(15);
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!header_seen && line.rfind("# config ", 0) == 0) {
            t.config = Json::parse(line.substr(9));
            continue;
        }
        if (!header_seen && line.rfind("# summary ", 0) == 0) {
            const std::string kv = line.substr(10);
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw FormatError("bad summary line");
            const std::string key = kv.substr(0, eq);
            const auto it = summary_types.find(key);
            if (it == summary_types.end()) throw FormatError("unknown summary key: " + key);
            t.add_summary(key, detail::parse_csv_cell(std::string_view(kv).substr(eq + 1), it->second), it->second);
            continue;
        }
        if (!header_seen) {
            const auto names = detail::split(line, ',');
            if (names.size() != t.columns.size()) throw FormatError("header does not match schema");
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i] != t.columns[i].name) throw FormatError("header does not match schema");
            }
            header_seen = true;
            continue;
        }
        const auto fields = detail::split(line, ',');
        std::vector<Cell> row;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (t.columns[i].type == CellType::RatList) {
                RationalList l;
                for (std::size_t k = i; k < fields.size(); ++k) {
                    if (!fields[k].empty()) l.push_back(detail::parse_rat(fields[k]));
                }
                row.emplace_back(std::move(l));
                break;
            }
            if (i >= fields.size()) throw FormatError("short row");
            row.push_back(detail::parse_csv_cell(fields[i], t.columns[i].type));
        }
        t.rows.push_back(std::move(row));
    }
    if (!header_seen) throw FormatError("missing header row");
    return t;
}

inline Table read_json(std::istream& is, const Table& schema) {
    const Json doc = Json::parse(is);
    Table t;
    t.command = doc.at("command").get<std::string>();
    t.config = doc.at("config");
    t.columns = schema.columns;
    for (const auto& obj : doc.at("rows")) {
        std::vector<Cell> row;
        for (const auto& col : t.columns) row.push_back(detail::parse_json_cell(obj.at(col.name), col.type));
        t.rows.push_back(std::move(row));
    }
    if (doc.contains("summary")) {
        for (std::size_t i = 0; i < schema.summary.size(); ++i) {
            const auto& key = schema.summary[i].first;
            if (doc["summary"].contains(key)) {
                t.add_summary(key, detail::parse_json_cell(doc["summary"][key], schema.summary_types[i]), schema.summary_types[i]);
            }
        }
    }
    return t;
}

}  // namespace quadzeros::cli

#endif  // QUADZEROS_CLI_TABLE_HPP
