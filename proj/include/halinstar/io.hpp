#pragma once

#include <string>
#include <string_view>

#include "halinstar/halin.hpp"

namespace halinstar {

/// Canonical instance text:
///
///   # comment
///   tree <n> <root>
///   <v>: <c1> <c2> ...        one line per internal vertex, children counterclockwise
///   cycle: <l1> <l2> ...      omitted in tree mode
///   mode: generalized|complete|tree
///
/// Throws ParseError on malformed text, duplicate children, a cycle that does
/// not cover the leaves or disagrees with the rotation system.
HalinInstance parse_instance(std::string_view text);
std::string serialize_instance(const HalinInstance& instance);

/// JSON object mapping "u-v" / "u~v" to an array of colors. Every edge of the
/// instance must appear. Lists come back sorted and deduplicated.
ListAssignment parse_lists(std::string_view json_text, const EdgeIndex& edges);
std::string serialize_lists(const ListAssignment& lists, const EdgeIndex& edges);

/// JSON object mapping "u-v" / "u~v" to a color. Every edge must appear.
EdgeColoring parse_coloring(std::string_view json_text, const EdgeIndex& edges);
std::string serialize_coloring(const EdgeColoring& coloring, const EdgeIndex& edges);

/// Graphviz view; cycle edges are drawn dashed, colors become edge labels.
std::string to_dot(const HalinInstance& instance, const EdgeColoring& coloring);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace halinstar
