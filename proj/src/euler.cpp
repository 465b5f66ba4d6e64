#include "ucycle/euler.hpp"

#include <algorithm>
#include <limits>

namespace ucycle {

std::string existence_reason_name(ExistenceReason reason) {
  switch (reason) {
    case ExistenceReason::Ok: return "ok";
    case ExistenceReason::Unbalanced: return "unbalanced";
    case ExistenceReason::Disconnected: return "disconnected";
    case ExistenceReason::Empty: return "empty";
  }
  return "unknown";
}

std::vector<UnbalancedVertex> check_balanced(const TransitionDigraph& g) {
  std::vector<UnbalancedVertex> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.in_degree[v] != g.out_degree[v]) {
      out.push_back({v, g.in_degree[v], g.out_degree[v]});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const TransitionDigraph& g) {
  const std::size_t n = g.vertices.size();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int next_index = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& frame = call.back();
      const std::size_t v = frame.vertex;
      if (frame.edge_pos < g.out_edges[v].size()) {
        const std::size_t w = g.edges[g.out_edges[v][frame.edge_pos++]].to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        call.pop_back();
        if (!call.empty()) {
          low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
        }
        if (low[v] == index[v]) {
          std::vector<std::size_t> component;
          for (;;) {
            const std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(w);
            if (w == v) break;
          }
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

ExistenceReport diagnose(const TransitionDigraph& g) {
  ExistenceReport report;
  report.vertex_count = g.vertices.size();
  if (g.edges.empty()) {
    report.reason = ExistenceReason::Empty;
    return report;
  }
  report.unbalanced = check_balanced(g);
  report.balanced = report.unbalanced.empty();

  const auto components = strongly_connected_components(g);
  report.scc_count = components.size();
  for (const auto& component : components) {
    report.largest_scc_size = std::max(report.largest_scc_size, component.size());
  }

  bool all_degree_one = true;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.in_degree[v] != 1 || g.out_degree[v] != 1) {
      all_degree_one = false;
      break;
    }
  }
  if (all_degree_one) report.forced_cycle_count = report.scc_count;

  if (!report.balanced) {
    report.reason = ExistenceReason::Unbalanced;
  } else if (report.scc_count > 1) {
    report.reason = ExistenceReason::Disconnected;
  } else {
    report.reason = ExistenceReason::Ok;
    report.exists = true;
  }
  return report;
}

std::vector<std::size_t> eulerian_circuit(const TransitionDigraph& g) {
  ExistenceReport report = diagnose(g);
  if (!report.exists) throw NoCycleError(std::move(report));

  constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next_unused(g.vertices.size(), 0);
  std::vector<std::size_t> circuit;
  circuit.reserve(g.edges.size());

  // (vertex, edge that led here); edges are appended on frame retirement and
  // reversed at the end, which splices detours in place.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, kNoEdge}};
  while (!stack.empty()) {
    const auto [v, arrival] = stack.back();
    if (next_unused[v] < g.out_edges[v].size()) {
      const std::size_t id = g.out_edges[v][next_unused[v]++];
      stack.emplace_back(g.edges[id].to, id);
    } else {
      stack.pop_back();
      if (arrival != kNoEdge) circuit.push_back(arrival);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

std::vector<Letter> read_ucycle(const TransitionDigraph& g,
                                const std::vector<std::size_t>& circuit) {
  std::vector<Letter> cycle;
  cycle.reserve(circuit.size());
  for (std::size_t id : circuit) cycle.push_back(g.edges[id].word.back());
  return cycle;
}

std::vector<Letter> canonical_rotation(const std::vector<Letter>& cycle) {
  const std::size_t n = cycle.size();
  if (n <= 1) return cycle;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = cycle[(i + k) % n];
    const Letter b = cycle[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i = i + k + 1;
      if (i == j) ++i;
    } else {
      j = j + k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(cycle[(start + t) % n]);
  return out;
}

}  // namespace ucycle
