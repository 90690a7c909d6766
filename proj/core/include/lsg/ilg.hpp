#pragma once

#include <string>
#include <string_view>

#include "lsg/graph.hpp"

namespace lsg {

// Incidence-list graph text format ".ilg":
//   line 1:      "n d"
//   lines 2..n+1: the ordered neighbors of vertex v, space separated
//                 (an empty line is an isolated vertex)
// Parsing validates every Graph invariant and reports line-numbered errors.

Graph parse_ilg(std::string_view text);
std::string write_ilg(const Graph& g);

Graph load_ilg(const std::string& path);
void save_ilg(const Graph& g, const std::string& path);

} // namespace lsg
