#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/word_classes.hpp"

namespace ucycle {

// Transition digraph of a word class: one edge per class word, running from
// the word's leading (m-1)-letter window to its trailing one. Vertices are
// discovered from the edges, so none is isolated.
struct TransitionDigraph {
  int word_length = 0;    // m
  int vertex_length = 0;  // m - 1
  int alphabet = 0;

  std::vector<Word> vertices;  // sorted, unique

  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Word word;
  };
  std::vector<Edge> edges;  // sorted by word

  std::vector<std::vector<std::size_t>> out_edges;  // per-vertex, ascending edge id
  std::vector<int> in_degree;
  std::vector<int> out_degree;

  std::optional<std::size_t> find_vertex(const Word& v) const;
};

TransitionDigraph build_digraph(const ClassSpec& spec,
                                std::uint64_t budget = kDefaultBudget);

struct DegreeProfile {
  std::vector<std::pair<int, int>> per_vertex;        // (in, out)
  std::map<std::pair<int, int>, std::size_t> groups;  // (in, out) -> vertex count
};

DegreeProfile degree_profile(const TransitionDigraph& g);

// Graphviz export with stable ordering: vertex label is the letter string,
// edge label the full word.
std::string to_dot(const TransitionDigraph& g);

}  // namespace ucycle
