#pragma once

#include <string>
#include <string_view>

#include "core/group.hpp"

namespace cubewalk {

// Graph file format, one entry per line:
//
//   # comment
//   n 3
//   001 4
//   011 8
//   101 3
//
// The first significant line declares the dimension; every following line is
// an n-character bitstring and a non-zero integer weight. Duplicates, the
// all-zero bitstring, and zero weights are rejected with the offending line
// number (ParseError).
WeightFunction parse_graph_text(std::string_view text);
WeightFunction parse_graph_file(const std::string& path);

// Canonical form: header plus entries in ascending bitstring order.
// parse(graph_to_text(f)) reproduces f exactly.
std::string graph_to_text(const WeightFunction& f);

}  // namespace cubewalk
