#pragma once

#include <string>
#include <string_view>

#include "tcoi/tree.hpp"

namespace tcoi {

/// Parses "u v" lines; '#' starts a comment line, blank lines are skipped.
/// Vertex ids must be dense 0..n-1. Single-vertex trees cannot be written in
/// this format (use graph6 "@").
Tree parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Tree& t);

/// graph6 as produced by nauty's showg/geng. An optional ">>graph6<<" header
/// and surrounding whitespace are accepted; sparse6 and digraph6 are not.
Tree parse_graph6(std::string_view text);
std::string serialize_graph6(const Tree& t);

}  // namespace tcoi
