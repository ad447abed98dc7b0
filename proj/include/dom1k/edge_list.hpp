#pragma once

// Text edge-list format:
//   c <free-form comment>           (comments and blank lines are skipped)
//   p <n> <m>                       (header: order and edge count)
//   e <u> <v>                       (one line per edge, 1-based endpoints)
// Canonical output writes comments first, then the header, then the edges
// sorted ascending by (u, v) with u < v.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dom1k/graph.hpp"

namespace dom1k {

inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

inline std::string to_edge_list(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    write_edge_list(out, g, comments);
    return out.str();
}

inline Graph read_edge_list(std::istream& in) {
    int n = -1;
    long expected = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw std::runtime_error("edge list, line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) fail("duplicate header");
            long m = -1;
            if (!(fields >> n >> m) || n < 1 || m < 0) fail("malformed header, expected 'p <n> <m>'");
            expected = m;
        } else if (tag == "e") {
            if (n == -1) fail("edge before header");
            int u = 0, v = 0;
            if (!(fields >> u >> v)) fail("malformed edge, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) fail("edge endpoint out of range");
            if (u == v) fail("self-loop");
            int a = u - 1, b = v - 1;
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    line_no = 0;
    if (n == -1) fail("missing 'p' header");
    if (static_cast<long>(edges.size()) != expected)
        fail("header declares " + std::to_string(expected) + " edges, found " + std::to_string(edges.size()));
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("duplicate edge");
    return Graph(n, edges);
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

}  // namespace dom1k
