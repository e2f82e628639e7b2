#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace asai {

// A command's output: summary fields plus a list of flat rows.
struct Report {
    std::string command;
    bool ok = true;
    nlohmann::json meta = nlohmann::json::object();
    std::vector<nlohmann::json> rows;

    void add_row(nlohmann::json row) { rows.push_back(std::move(row)); }
};

std::string csv_quote(const std::string& field);
// Keys sorted, two-space indent, trailing newline.
std::string render_json(const Report& r);
// Header is "section" plus the sorted union of keys; the summary is the first data line.
std::string render_csv(const Report& r);
std::string render(const Report& r, const std::string& format);

}  // namespace asai
