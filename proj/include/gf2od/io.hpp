#pragma once

#include <iosfwd>
#include <string>

#include "gf2od/graphs.hpp"
#include "gf2od/trees.hpp"

namespace gf2od {

// Graph text format: first line "n <count>", then one "<u> <v>" per edge.
// '#' starts a comment; blank lines are ignored.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

// Label spec: a 0/1 string of length n, or "all0" / "all1".
BitVector parse_labels(const std::string& spec, std::size_t n);

// Tree text format: one line per vertex "<id> <parent|-1> <label>".
RootedTree parse_tree(std::istream& in);
RootedTree load_tree(const std::string& path);

} // namespace gf2od
