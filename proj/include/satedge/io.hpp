#pragma once

#include "satedge/error.hpp"
#include "satedge/graph.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace satedge {

/// graph6 encoding (McKay's format), with the 4- and 8-byte size headers for large n.
inline std::string graph6_encode(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, bits = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        const VertexSet& row = g.neighbors(static_cast<int>(j));
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (row.contains(static_cast<int>(i)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 string");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw parse_error("graph6: byte outside the printable range 63..126");
    auto value = [](char c) { return static_cast<std::uint64_t>(static_cast<unsigned char>(c) - 63); };
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != 126) {
        n = value(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) throw parse_error("graph6: truncated size header");
        n = (value(text[1]) << 12) | (value(text[2]) << 6) | value(text[3]);
        pos = 4;
    } else {
        if (text.size() < 8) throw parse_error("graph6: truncated size header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(text[i]);
        pos = 8;
    }
    check_vertex_cap(n);
    const std::uint64_t pair_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pair_bits + 5) / 6;
    if (text.size() - pos != expected)
        throw parse_error("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(text.size() - pos));
    GraphBuilder b(n);
    std::uint64_t bit_index = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++bit_index) {
            std::uint64_t byte = value(text[pos + bit_index / 6]);
            if ((byte >> (5 - bit_index % 6)) & 1) b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (bit_index % 6) {
        std::uint64_t last = value(text.back());
        if (last & ((std::uint64_t{1} << (6 - bit_index % 6)) - 1)) throw parse_error("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

/// "n m" header followed by m lines "u v".
inline std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph edge_list_decode(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw parse_error("edge list: bad 'n m' header");
    check_vertex_cap(static_cast<std::size_t>(n));
    GraphBuilder b(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw parse_error("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return std::move(b).build();
}

inline Graph edge_list_decode(const std::string& text) {
    std::istringstream in(text);
    return edge_list_decode(in);
}

/// Reads one graph, detecting the format from the first non-blank line: graph6 never
/// contains digits, an edge-list header always does.
inline Graph read_graph(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        line = line.substr(start, line.find_last_not_of(" \t\r") - start + 1);
        bool has_digit = false;
        for (char c : line) has_digit = has_digit || std::isdigit(static_cast<unsigned char>(c));
        if (!has_digit) return graph6_decode(line);
        std::string rest = line + '\n';
        rest.append(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        return edge_list_decode(rest);
    }
    throw parse_error("no graph in input");
}

}  // namespace satedge
