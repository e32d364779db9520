#pragma once

#include <stdexcept>
#include <string>

#include "muint/coloring.hpp"
#include "muint/graph.hpp"

namespace muint {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph <-> JSON object {"n": ..., "edges": [[u,v], ...]}.  Edge order is
// preserved exactly, so a round trip reproduces the input graph bit for bit.
// Unknown keys in the input object are ignored.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// EdgeColoring <-> JSON object {"colors": [...]}.
std::string coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const std::string& text);

// Whole-file helpers used by the CLI.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace muint
