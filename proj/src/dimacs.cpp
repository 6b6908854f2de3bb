#include "girthforge/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace girthforge {

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    for (const auto& [key, value] : g.metadata()) out << "c " << key << "=" << value << "\n";
    auto edges = g.edges();
    out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

void write_dimacs(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_dimacs(g);
    if (!out) throw IoError("write failed for " + path);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1, seen_edges = 0;
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::map<std::string, std::string> meta;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "c") {
            std::string rest;
            std::getline(iss, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
            auto eq = rest.find('=');
            if (eq != std::string::npos) meta[rest.substr(0, eq)] = rest.substr(eq + 1);
        } else if (tag == "p") {
            std::string kind;
            iss >> kind >> n >> m;
            if (!iss || kind != "edge" || n < 0 || m < 0)
                throw ParseError("bad header at line " + std::to_string(lineno));
            edges.reserve(static_cast<size_t>(m));
        } else if (tag == "e") {
            long long u, v;
            iss >> u >> v;
            if (!iss || n < 0)
                throw ParseError("bad edge at line " + std::to_string(lineno));
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("edge endpoint out of range at line " + std::to_string(lineno));
            edges.emplace_back(static_cast<int32_t>(u - 1), static_cast<int32_t>(v - 1));
            ++seen_edges;
        } else {
            throw ParseError("unknown line type '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw ParseError("missing p header");
    if (seen_edges != m)
        throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(seen_edges));
    Graph g = Graph::from_edges(n, std::move(edges));
    g.set_metadata(std::move(meta));
    return g;
}

Graph read_dimacs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return parse_dimacs(in);
}

}  // namespace girthforge
