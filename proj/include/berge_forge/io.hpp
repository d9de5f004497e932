#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "berge_forge/core.hpp"
#include "berge_forge/search.hpp"

namespace berge::io {

// Graph:      "n <count>" then one "u v" per line (0-indexed, ascending).
// Bipartite:  "bipartite <m> <n>" then one "left right" per line.
// Triples:    {"n": <count>, "edges": [[a,b,c], ...]} with sorted triples.
// Blank lines and lines starting with '#' are ignored in the text formats.

std::string write_graph(const Graph& g);
Graph parse_graph(std::string_view text, const std::string& source = "<input>");

std::string write_bipartite(const BipartiteGraph& b);
BipartiteGraph parse_bipartite(std::string_view text, const std::string& source = "<input>");

std::string write_triples(const TripleSystem& h);
TripleSystem parse_triples(std::string_view text, const std::string& source = "<input>");

std::string write_witness(const Witness& w);
/// Picks the format from the first significant character/token.
Witness parse_witness(std::string_view text, const std::string& source = "<input>");

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);
Witness read_witness_file(const std::filesystem::path& path);

}  // namespace berge::io
