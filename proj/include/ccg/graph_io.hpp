#pragma once

#include <iosfwd>
#include <string>

#include "ccg/multigraph.hpp"

namespace ccg {

/// Edge-list text format: first line "V E", then E lines "u v".
/// Vertex ids are remapped to 0..V-1 (sorted order) on write.
std::string write_edge_list(const MultiGraph& g);
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_string(const std::string& s);

std::string write_dot(const MultiGraph& g);

/// JSON form {"vertices":[...],"edges":[[u,v],...],"labels":{"v":tag,...}}.
std::string write_json_graph(const MultiGraph& g);
MultiGraph read_json_graph(const std::string& s);

}  // namespace ccg
