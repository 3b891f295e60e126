#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "acymatch/graph.hpp"
#include "acymatch/matching.hpp"

namespace acym {

/// Edge-list text format: lines starting with '#' are comments; the first
/// data line is "n m", then exactly m lines "u v" (0-indexed). Serialization
/// is canonical: header then edges in lexicographic order, so canonical
/// inputs round-trip byte for byte.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments = {});
std::string to_edge_list(const Graph& g);
void save_edge_list(const std::string& path, const Graph& g,
                    const std::vector<std::string>& header_comments = {});

/// Matching text format: one "u v" line per matched edge, '#' comments.
Matching parse_matching(std::istream& in);
Matching parse_matching(const std::string& text);
Matching read_matching(const std::string& path);
void write_matching(std::ostream& out, const Matching& m);
std::string to_matching_text(const Matching& m);
void save_matching(const std::string& path, const Matching& m);

}  // namespace acym
