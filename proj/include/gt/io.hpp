#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gt/graph.hpp"

namespace gt {

// Target-graph file payload: the graph plus the optional declared ordering
// ("order: v0 v1 ... v_{n-1}" trailing line).
struct TargetFile {
  Graph graph;
  std::optional<std::vector<int>> order;
};

// Collection file: line 1 "n h", then one "c u v" line per colored edge with
// 0 <= c < h and 0 <= u < v < n. '#' starts a comment. Duplicate (c,u,v)
// lines are an error.
GraphCollection read_collection(std::istream& in);
GraphCollection read_collection_file(const std::string& path);
void write_collection(std::ostream& out, const GraphCollection& coll);

// Target file: line 1 "n", then "u v" lines, optional trailing order line.
TargetFile read_target(std::istream& in);
TargetFile read_target_file(const std::string& path);
void write_target(std::ostream& out, const Graph& g, const std::optional<std::vector<int>>& order);

std::vector<int> parse_int_list(const std::string& text);                  // "0,1,2"
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text);  // "0-1,2-3"

}  // namespace gt
