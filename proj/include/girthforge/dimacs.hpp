#ifndef GIRTHFORGE_DIMACS_HPP
#define GIRTHFORGE_DIMACS_HPP

#include <iosfwd>
#include <string>

#include "girthforge/graph.hpp"

namespace girthforge {

// DIMACS-like text format. Comment lines `c key=value` (graph metadata) precede the
// header `p edge <n> <m>`; then `e <u> <v>` with 1-indexed endpoints, u < v, sorted by
// (u, v). LF line endings, ASCII decimal, no trailing whitespace.
std::string to_dimacs(const Graph& g);
void write_dimacs(const Graph& g, const std::string& path);

Graph parse_dimacs(std::istream& in);
Graph read_dimacs(const std::string& path);

}  // namespace girthforge

#endif
