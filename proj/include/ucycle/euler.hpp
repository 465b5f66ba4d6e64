#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/digraph.hpp"
#include "ucycle/errors.hpp"

namespace ucycle {

enum class ExistenceReason { Ok, Unbalanced, Disconnected, Empty };

std::string existence_reason_name(ExistenceReason reason);

struct UnbalancedVertex {
  std::size_t vertex = 0;
  int in = 0;
  int out = 0;
};

struct ExistenceReport {
  bool balanced = false;
  std::vector<UnbalancedVertex> unbalanced;
  std::size_t scc_count = 0;         // over edge-carrying vertices (all stored ones)
  std::size_t largest_scc_size = 0;  // fraction = largest_scc_size / vertex_count
  std::size_t vertex_count = 0;
  bool exists = false;
  ExistenceReason reason = ExistenceReason::Empty;
  // Set only when every vertex has in = out = 1; then it equals the number of
  // disjoint forced cycles (= number of strongly connected components).
  std::optional<std::size_t> forced_cycle_count;
};

// Vertices whose in-degree differs from their out-degree; empty iff balanced.
std::vector<UnbalancedVertex> check_balanced(const TransitionDigraph& g);

// Partition of the vertices into maximal strongly connected sets, each sorted,
// ordered by smallest member.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const TransitionDigraph& g);

// A cycle exists iff the digraph is balanced and strongly connected. Decided
// computationally, never assumed from the class parameters.
ExistenceReport diagnose(const TransitionDigraph& g);

// Raised when a circuit is requested from a digraph that has none.
struct NoCycleError : std::runtime_error {
  explicit NoCycleError(ExistenceReport r)
      : std::runtime_error("no universal cycle: " + existence_reason_name(r.reason)),
        report(std::move(r)) {}
  ExistenceReport report;
};

// Eulerian circuit as an ordered list of edge ids, via iterative Hierholzer
// splicing: starts at the smallest vertex, consumes adjacency lists in order,
// and keeps an explicit stack so depth never tracks the edge count.
std::vector<std::size_t> eulerian_circuit(const TransitionDigraph& g);

// Last letter of every circuit edge, in order: the universal cycle readout.
std::vector<Letter> read_ucycle(const TransitionDigraph& g,
                                const std::vector<std::size_t>& circuit);

// Lexicographically smallest rotation (Booth's algorithm); cycles are
// equivalent up to rotation and this is the canonical representative.
std::vector<Letter> canonical_rotation(const std::vector<Letter>& cycle);

}  // namespace ucycle
