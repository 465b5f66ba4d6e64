#include "ucycle/digraph.hpp"

#include <algorithm>

#include "ucycle/errors.hpp"

namespace ucycle {

std::optional<std::size_t> TransitionDigraph::find_vertex(const Word& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

TransitionDigraph build_digraph(const ClassSpec& input, std::uint64_t budget) {
  const ValidatedSpec validated = validate_spec(input);
  const ClassSpec& spec = validated.spec;
  const std::vector<Word> words = enumerate_class(spec, budget);

  TransitionDigraph g;
  g.word_length = spec.m;
  g.vertex_length = validated.vertex_length;
  g.alphabet = spec.n;

  std::vector<Word> windows;
  windows.reserve(words.size() * 2);
  for (const Word& w : words) {
    windows.emplace_back(w.begin(), w.end() - 1);
    windows.emplace_back(w.begin() + 1, w.end());
  }
  std::sort(windows.begin(), windows.end());
  windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
  g.vertices = std::move(windows);

  g.edges.reserve(words.size());
  g.out_edges.assign(g.vertices.size(), {});
  g.in_degree.assign(g.vertices.size(), 0);
  g.out_degree.assign(g.vertices.size(), 0);
  for (const Word& w : words) {
    Word prefix(w.begin(), w.end() - 1);
    Word suffix(w.begin() + 1, w.end());
    const std::size_t from = *g.find_vertex(prefix);
    const std::size_t to = *g.find_vertex(suffix);
    const std::size_t id = g.edges.size();
    g.edges.push_back({from, to, w});
    g.out_edges[from].push_back(id);  // words arrive sorted, so lists stay sorted
    ++g.out_degree[from];
    ++g.in_degree[to];
  }
  return g;
}

DegreeProfile degree_profile(const TransitionDigraph& g) {
  DegreeProfile profile;
  profile.per_vertex.reserve(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    auto degrees = std::make_pair(g.in_degree[v], g.out_degree[v]);
    profile.per_vertex.push_back(degrees);
    ++profile.groups[degrees];
  }
  return profile;
}

std::string to_dot(const TransitionDigraph& g) {
  std::string out = "digraph transitions {\n";
  for (const Word& v : g.vertices) {
    out += "  \"" + word_to_string(v, g.alphabet) + "\";\n";
  }
  for (const auto& e : g.edges) {
    out += "  \"" + word_to_string(g.vertices[e.from], g.alphabet) + "\" -> \"" +
           word_to_string(g.vertices[e.to], g.alphabet) + "\" [label=\"" +
           word_to_string(e.word, g.alphabet) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ucycle
