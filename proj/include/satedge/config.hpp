#pragma once

#include "satedge/error.hpp"
#include "satedge/graph.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <string>

namespace satedge {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw invalid_argument("unknown output format '" + s + "' (expected json, csv or text)");
}

/// Settings shared by every subcommand. Unset fields fall back to built-in defaults.
struct Config {
    std::optional<unsigned> threads;
    std::uint64_t packing_budget = 50'000'000;
    std::uint64_t search_budget = 1'000'000'000;
    std::size_t vertex_cap = SATEDGE_DEFAULT_VERTEX_CAP;
    OutputFormat format = OutputFormat::json;
    bool emit_witnesses = true;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::uint64_t parse_count(const std::string& key, const std::string& value) {
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_argument("config: " + key + " needs a non-negative integer, got '" + value + "'");
    try {
        return std::stoull(value);
    } catch (const std::out_of_range&) {
        throw invalid_argument("config: " + key + " is out of range");
    }
}

inline bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw invalid_argument("config: " + key + " needs true or false, got '" + value + "'");
}

}  // namespace detail

/// key = value lines; '#' starts a comment. Unknown keys and malformed values are errors.
inline Config parse_config(std::istream& in, Config cfg = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(line.substr(0, eq)), value = detail::trim(line.substr(eq + 1));
        if (key == "threads") {
            auto t = detail::parse_count(key, value);
            if (t > 4096) throw invalid_argument("config: threads must be at most 4096");
            cfg.threads = static_cast<unsigned>(t);
        } else if (key == "packing_budget") {
            cfg.packing_budget = detail::parse_count(key, value);
        } else if (key == "search_budget") {
            cfg.search_budget = detail::parse_count(key, value);
        } else if (key == "vertex_cap") {
            cfg.vertex_cap = detail::parse_count(key, value);
            if (cfg.vertex_cap == 0) throw invalid_argument("config: vertex_cap must be positive");
        } else if (key == "format") {
            cfg.format = parse_output_format(value);
        } else if (key == "emit_witnesses") {
            cfg.emit_witnesses = detail::parse_bool(key, value);
        } else {
            throw invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open config file " + path);
    return parse_config(in);
}

}  // namespace satedge
