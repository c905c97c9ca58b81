#pragma once

#include <iosfwd>
#include <string>

#include "minors/graph.hpp"

namespace minors {

/// graph6 encoding (McKay's format). Vertices are relabeled to 0..n-1 in
/// sorted id order on write; read yields ids 0..n-1.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// DIMACS edge format ("p edge n m" header, "e u v" lines, 1-based).
Graph read_dimacs(std::istream& in);

/// JSON edge list. Writes {"n": ..., "edges": [[u,v],...]} when ids are
/// contiguous from 0, otherwise {"vertices": [...], "edges": ...}; reads both.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

enum class GraphFormat { graph6, dimacs, json };

Graph read_graph(std::istream& in, GraphFormat fmt);
std::string write_graph(const Graph& g, GraphFormat fmt);

}  // namespace minors
