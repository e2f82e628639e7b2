#include "asai/report.hpp"

#include <set>
#include <sstream>

#include "asai/error.hpp"

namespace asai {

namespace {

std::string cell(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

}  // namespace

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_json(const Report& r) {
    nlohmann::json doc;
    doc["command"] = r.command;
    doc["ok"] = r.ok;
    doc["meta"] = r.meta;
    doc["rows"] = r.rows;
    return doc.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
    nlohmann::json summary = r.meta;
    summary["command"] = r.command;
    summary["ok"] = r.ok;
    std::set<std::string> keys;
    for (const auto& [k, v] : summary.items()) keys.insert(k);
    for (const auto& row : r.rows)
        for (const auto& [k, v] : row.items()) keys.insert(k);
    std::ostringstream o;
    o << "section";
    for (const auto& k : keys) o << ',' << csv_quote(k);
    o << "\r\n";
    auto line = [&](const char* section, const nlohmann::json& obj) {
        o << section;
        for (const auto& k : keys) {
            o << ',';
            if (obj.contains(k)) o << csv_quote(cell(obj[k]));
        }
        o << "\r\n";
    };
    line("summary", summary);
    for (const auto& row : r.rows) line("row", row);
    return o.str();
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return render_json(r);
    if (format == "csv") return render_csv(r);
    fail(ErrorKind::Schema, "unknown format '" + format + "'");
}

}  // namespace asai
